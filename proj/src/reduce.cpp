#include "symband/reduce.hpp"

#include <algorithm>

namespace symband {

long long reference_ops(int w_from, std::size_t n) {
    const auto N = static_cast<long long>(n);
    if (w_from == 3) return 35 * N - 122;
    if (w_from == 2) return 23 * N - 52;
    return 0;
}

namespace {

/// Row-wise band copy: rows[i][o + w] holds entry (i, i + o).
struct WorkBand {
    std::size_t n;
    int w;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    Rational& at(std::size_t i, std::size_t j) {
        return rows[i][static_cast<std::size_t>(static_cast<long long>(j) - static_cast<long long>(i) + w)];
    }
};

WorkBand load(const ExactSystem& sys) {
    WorkBand band{sys.n(), sys.w(), std::vector<std::vector<Rational>>(sys.n(), std::vector<Rational>(2 * static_cast<std::size_t>(sys.w()) + 1)),
                  sys.rhs().snapshot()};
    for (int o = -sys.w(); o <= sys.w(); ++o) {
        const auto values = sys.diag(o).snapshot();
        for (std::size_t k = 0; k < values.size(); ++k) {
            const std::size_t i = o >= 0 ? k : k + static_cast<std::size_t>(-o);
            band.rows[i][static_cast<std::size_t>(o + sys.w())] = values[k];
        }
    }
    return band;
}

}  // namespace

ReductionReport reduce_band(const ExactSystem& sys) {
    const int w = sys.w();
    const std::size_t n = sys.n();
    if (w != 2 && w != 3) raise(ErrorKind::ShapeError, "reduction needs w = 2 or 3, got " + std::to_string(w));
    if (n < 2 * static_cast<std::size_t>(w) + 2)
        raise(ErrorKind::SizeError, "reduction from w = " + std::to_string(w) + " needs n >= " +
                                        std::to_string(2 * w + 2) + ", got " + std::to_string(n));

    WorkBand band = load(sys);
    const auto uw = static_cast<std::size_t>(w);
    std::uint64_t ops = 0;
    std::vector<RowOp> log;

    const auto eliminate = [&](int sweep, std::size_t i, std::size_t p, std::size_t col, std::size_t c_lo,
                               std::size_t c_hi) {
        Rational& target = band.at(i, col);
        if (target == 0) return;
        const Rational& divisor = band.at(p, col);
        if (divisor == 0)
            raise(ErrorKind::ReductionPivotZero, "zero divisor a(" + std::to_string(p + 1) + "," +
                                                     std::to_string(col + 1) + ") in sweep " + std::to_string(sweep));
        const Rational m = target / divisor;
        ++ops;
        for (std::size_t c = c_lo; c <= c_hi; ++c) {
            if (c == col) continue;
            band.at(i, c) -= m * band.at(p, c);
            ops += 2;
        }
        band.rhs[i] -= m * band.rhs[p];
        ops += 2;
        target = 0;
        log.push_back({sweep, i, p, m});
    };

    // Sweep 1: clear (i, i + w) with row i + 1, bottom to top.
    for (std::size_t i = n - uw; i-- > 0;) {
        const std::size_t p = i + 1;
        eliminate(1, i, p, i + uw, p >= uw ? p - uw : 0, i + uw);
    }
    // Sweep 2: clear (i, i - w) with row i - 1, top to bottom.
    for (std::size_t i = uw; i < n; ++i) {
        const std::size_t p = i - 1;
        eliminate(2, i, p, i - uw, i - uw, std::min(n - 1, i + uw - 2));
    }

    ExactSystem reduced(n, w - 1, sys.storage());
    for (int o = -(w - 1); o <= w - 1; ++o) {
        std::vector<Rational> values;
        values.reserve(n - static_cast<std::size_t>(std::abs(o)));
        for (std::size_t k = 0; k < n - static_cast<std::size_t>(std::abs(o)); ++k) {
            const std::size_t i = o >= 0 ? k : k + static_cast<std::size_t>(-o);
            values.push_back(band.rows[i][static_cast<std::size_t>(o + w)]);
        }
        reduced.diag(o) = IndexedStore<Rational>::from_range(sys.storage(), values);
    }
    reduced.rhs() = IndexedStore<Rational>::from_range(sys.storage(), band.rhs);

    return {std::move(reduced), w, w - 1, n, ops, reference_ops(w, n), std::move(log)};
}

ReductionReport reduce_chain(const ExactSystem& sys, int target_w) {
    if (target_w < 1 || target_w > sys.w())
        raise(ErrorKind::ShapeError, "target half-bandwidth " + std::to_string(target_w) + " not in 1.." +
                                         std::to_string(sys.w()));
    ReductionReport total{sys, sys.w(), sys.w(), sys.n(), 0, 0, {}};
    while (total.reduced.w() > target_w) {
        ReductionReport step = reduce_band(total.reduced);
        total.ops_counted += step.ops_counted;
        total.reference_ops += step.reference_ops;
        for (auto& op : step.row_ops) total.row_ops.push_back(std::move(op));
        total.reduced = std::move(step.reduced);
    }
    total.w_to = total.reduced.w();
    return total;
}

}  // namespace symband
