#include "symband/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace symband {

namespace {

struct Factors {
    std::size_t n;
    int w;
    std::vector<long> lower;  // n x w, lower[i*w + (i-j-1)] = L(i,j)
    std::vector<long> diag;   // U(i,i)
    std::vector<long> upper;  // n x w, upper[i*w + (j-i-1)] = U(i,j)

    long L(std::size_t i, std::size_t j) const {
        if (i == j) return 1;
        return lower[i * static_cast<std::size_t>(w) + (i - j - 1)];
    }
    long U(std::size_t i, std::size_t j) const {
        if (i == j) return diag[i];
        return upper[i * static_cast<std::size_t>(w) + (j - i - 1)];
    }
};

Factors draw_factors(std::size_t n, int w, SplitMix64& rng) {
    const auto uw = static_cast<std::size_t>(w);
    Factors f{n, w, std::vector<long>(n * uw, 0), std::vector<long>(n, 0), std::vector<long>(n * uw, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i >= uw ? i - uw : 0; j < i; ++j) f.lower[i * uw + (i - j - 1)] = rng.range(-3, 3);
    for (std::size_t i = 0; i < n; ++i) f.diag[i] = rng.range(1, 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j <= std::min(n - 1, i + uw); ++j) f.upper[i * uw + (j - i - 1)] = rng.range(-3, 3);
    return f;
}

/// Multiplies the band factors and plants the solution into a Fixed system.
ExactSystem assemble(const Factors& f, const std::vector<Rational>& planted) {
    const std::size_t n = f.n;
    const auto uw = static_cast<std::size_t>(f.w);
    std::vector<std::vector<Rational>> diags(2 * uw + 1);
    for (int o = -f.w; o <= f.w; ++o) {
        auto& d = diags[static_cast<std::size_t>(o + f.w)];
        d.reserve(n - static_cast<std::size_t>(std::abs(o)));
        for (std::size_t k = 0; k < n - static_cast<std::size_t>(std::abs(o)); ++k) {
            const std::size_t i = o >= 0 ? k : k + static_cast<std::size_t>(-o);
            const std::size_t j = o >= 0 ? k + static_cast<std::size_t>(o) : k;
            const std::size_t lo = std::max({i >= uw ? i - uw : 0, j >= uw ? j - uw : 0});
            long s = 0;
            for (std::size_t m = lo; m <= std::min(i, j); ++m) s += f.L(i, m) * f.U(m, j);
            d.emplace_back(s);
        }
    }
    ExactSystem sys(n, f.w, StorageKind::Fixed);
    for (int o = -f.w; o <= f.w; ++o)
        sys.diag(o) = IndexedStore<Rational>::from_range(StorageKind::Fixed, diags[static_cast<std::size_t>(o + f.w)]);
    sys.rhs() = IndexedStore<Rational>::from_range(StorageKind::Fixed, band_multiply(sys, planted));
    return sys;
}

/// Forces the listed pivots to zero; returns false when a pivot has no value at x = 0.
bool inject_zero_pivots(ExactSystem& sys, std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (std::size_t p : positions) {
        const auto f = band_lu_symbolic(sys);
        const std::size_t i = p - 1;
        if (std::find(f.substituted_pivots.begin(), f.substituted_pivots.end(), p) != f.substituted_pivots.end())
            continue;
        Rational pivot;
        try {
            pivot = eval_at_zero(f.u(i, i));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::LimitUndefined) return false;
            throw;
        }
        sys.set_a(i, i, Rational(sys.a(i, i) - pivot));
    }
    return true;
}

}  // namespace

Generated generate_system(const GenSpec& spec) {
    check_size(static_cast<long long>(spec.n), spec.w);
    for (std::size_t p : spec.zero_pivot_positions)
        if (p < 1 || p > spec.n)
            raise(ErrorKind::SizeError, "zero pivot position " + std::to_string(p) + " outside 1.." +
                                            std::to_string(spec.n));

    std::uint64_t seed = spec.seed;
    for (int attempt = 0; attempt <= kMaxGenerationRetries; ++attempt, ++seed) {
        SplitMix64 rng(seed);
        const Factors f = draw_factors(spec.n, spec.w, rng);
        std::vector<Rational> planted;
        planted.reserve(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) planted.emplace_back(rng.range(-5, 5));
        ExactSystem sys = assemble(f, planted);

        if (!spec.zero_pivot_positions.empty()) {
            if (!inject_zero_pivots(sys, spec.zero_pivot_positions)) continue;
            sys.rhs() = IndexedStore<Rational>::from_range(StorageKind::Fixed, band_multiply(sys, planted));
            if (spec.n <= kVerifyLimit) {
                try {
                    (void)solve(sys);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::SingularMatrix) continue;
                    throw;
                }
            }
        }

        Generated out{std::move(sys), std::move(planted), seed};
        if (spec.storage != StorageKind::Fixed || spec.backend == Backend::Float) {
            const auto& exact = std::get<ExactSystem>(out.system);
            if (spec.backend == Backend::Float) out.system = to_float(exact).with_storage(spec.storage);
            else out.system = exact.with_storage(spec.storage);
        }
        return out;
    }
    raise(ErrorKind::GenerationFailed, "no nonsingular system after " + std::to_string(kMaxGenerationRetries) +
                                           " retries from seed " + std::to_string(spec.seed));
}

ExactSystem generate_exact(std::size_t n, int w, std::uint64_t seed, StorageKind storage,
                           std::vector<Rational>* planted) {
    Generated g = generate_system(GenSpec{n, w, seed, Backend::Exact, storage, {}});
    if (planted) *planted = std::move(g.planted);
    return std::get<ExactSystem>(std::move(g.system));
}

ExactSystem generate_dense_band(std::size_t n, int w, std::uint64_t seed, std::vector<Rational>* planted) {
    check_size(static_cast<long long>(n), w);
    SplitMix64 rng(seed);
    ExactSystem sys(n, w, StorageKind::Fixed);
    for (int o = -w; o <= w; ++o) {
        std::vector<Rational> d;
        for (std::size_t k = 0; k < n - static_cast<std::size_t>(std::abs(o)); ++k) {
            long v = rng.range(1, 999);
            if (rng.next() & 1U) v = -v;
            d.emplace_back(v);
        }
        sys.diag(o) = IndexedStore<Rational>::from_range(StorageKind::Fixed, d);
    }
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(rng.range(-5, 5));
    sys.rhs() = IndexedStore<Rational>::from_range(StorageKind::Fixed, band_multiply(sys, x));
    if (planted) *planted = std::move(x);
    return sys;
}

namespace {

bool matches(const std::vector<Rational>& got, const std::vector<Rational>& want) { return got == want; }

bool matches(const std::vector<double>& got, const std::vector<Rational>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const double x = want[i].get_d();
        if (!(std::abs(got[i] - x) <= 1e-9 * std::max(1.0, std::abs(x)))) return false;
    }
    return true;
}

template <class T>
std::vector<BenchRecord> time_typed(Algorithm algorithm, const BandSystem<T>& sys,
                                    const std::vector<Rational>& planted, int reps) {
    if (reps < 1) raise(ErrorKind::DomainError, "reps must be >= 1");
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRecord> out;
    out.reserve(static_cast<std::size_t>(reps));
    for (int rep = 0; rep < reps; ++rep) {
        const auto start = Clock::now();
        SolveResult<T> result = solve_with(algorithm, sys);
        const auto stop = Clock::now();
        if (!matches(result.solution, planted))
            raise(ErrorKind::DomainError, std::string(to_string(algorithm)) + " result differs from the planted solution");
        double seconds = std::chrono::duration<double>(stop - start).count();
        // A run shorter than one clock tick is charged one tick.
        if (seconds <= 0.0) seconds = std::chrono::duration<double>(Clock::duration(1)).count();
        out.push_back({algorithm, sys.storage(), sys.backend(), sys.n(), rep, seconds});
    }
    return out;
}

}  // namespace

std::vector<BenchRecord> time_run(Algorithm algorithm, const AnySystem& sys, const std::vector<Rational>& planted,
                                  int reps) {
    return std::visit([&](const auto& s) { return time_typed(algorithm, s, planted, reps); }, sys);
}

AlphaEstimate estimate_alpha(double t1, double t2, double n1, double n2) {
    if (!(t1 > 0) || !(t2 > 0) || !(n1 > 0) || !(n2 > 0))
        raise(ErrorKind::DomainError, "alpha needs positive times and sizes");
    if (n1 == n2) raise(ErrorKind::DomainError, "alpha needs two distinct sizes");
    if (n1 > n2) {
        std::swap(n1, n2);
        std::swap(t1, t2);
    }
    AlphaEstimate a;
    a.n1 = static_cast<std::size_t>(n1);
    a.n2 = static_cast<std::size_t>(n2);
    a.t1 = t1;
    a.t2 = t2;
    // log(t2/t1)/log(n2/n1): the same quantity as the difference of logs, but a
    // common scale factor on the times cancels before rounding.
    a.alpha = std::log(t2 / t1) / std::log(n2 / n1);
    a.k_fit = t1 / std::pow(n1, a.alpha);
    return a;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<MeanRow> mean_table(const std::vector<BenchRecord>& records) {
    using Key = std::tuple<StorageKind, Backend, Algorithm, std::size_t>;
    std::map<Key, std::vector<double>> groups;
    for (const auto& r : records) groups[{r.storage, r.backend, r.algorithm, r.n}].push_back(r.seconds);
    std::vector<MeanRow> rows;
    for (const auto& [key, times] : groups) {
        const auto& [storage, backend, algorithm, n] = key;
        rows.push_back({algorithm, storage, backend, n, static_cast<int>(times.size()), mean(times), median(times)});
    }
    return rows;
}

std::vector<RatioRow> ratio_table(const std::vector<BenchRecord>& records) {
    using Key = std::tuple<StorageKind, Backend, std::size_t>;
    std::map<Key, std::map<Algorithm, double>> means;
    for (const auto& row : mean_table(records)) means[{row.storage, row.backend, row.n}][row.algorithm] = row.mean;
    if (means.empty()) raise(ErrorKind::MissingSeries, "no records");
    std::vector<RatioRow> out;
    for (const auto& [key, by_alg] : means) {
        const auto& [storage, backend, n] = key;
        for (Algorithm a : {Algorithm::STDM, Algorithm::SPDM, Algorithm::SHDM})
            if (!by_alg.count(a))
                raise(ErrorKind::MissingSeries, std::string(to_string(a)) + " missing for n = " + std::to_string(n) +
                                                    " (" + std::string(to_string(storage)) + ", " +
                                                    std::string(to_string(backend)) + ")");
        const double td = by_alg.at(Algorithm::STDM);
        out.push_back({storage, backend, n, by_alg.at(Algorithm::SHDM) / td, by_alg.at(Algorithm::SPDM) / td});
    }
    return out;
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_record(std::ostream& os, const BenchRecord& r) {
    char seconds[64];
    std::snprintf(seconds, sizeof seconds, "%.9f", r.seconds);
    os << to_string(r.algorithm) << ',' << to_string(r.storage) << ',' << to_string(r.backend) << ',' << r.n << ','
       << r.rep << ',' << seconds << '\n';
}

std::vector<BenchRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) raise(ErrorKind::ParseError, "empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) raise(ErrorKind::ParseError, "unexpected CSV header '" + line + "'");
    std::vector<BenchRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        const auto bad = [&](const std::string& why) {
            raise(ErrorKind::ParseError, "CSV line " + std::to_string(lineno) + ": " + why);
        };
        if (cells.size() != 6) bad("expected 6 fields");
        BenchRecord r;
        try {
            r.algorithm = parse_algorithm(cells[0]);
            r.storage = parse_storage(cells[1]);
            r.backend = parse_backend(cells[2]);
            std::size_t used = 0;
            const long long n = std::stoll(cells[3], &used);
            if (used != cells[3].size() || n <= 0) bad("bad n");
            r.n = static_cast<std::size_t>(n);
            r.rep = std::stoi(cells[4], &used);
            if (used != cells[4].size()) bad("bad rep");
            r.seconds = std::stod(cells[5], &used);
            if (used != cells[5].size() || !(r.seconds > 0)) bad("bad seconds");
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            bad(e.what());
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace symband
