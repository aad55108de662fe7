#include "symband/solver.hpp"

#include <algorithm>

namespace symband {

Algorithm algorithm_for(int w) {
    if (w < 1 || w > 3) raise(ErrorKind::SizeError, "no method for half-bandwidth " + std::to_string(w));
    return static_cast<Algorithm>(w);
}

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::STDM: return "STDM";
        case Algorithm::SPDM: return "SPDM";
        case Algorithm::SHDM: return "SHDM";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view s) {
    if (s == "STDM" || s == "td") return Algorithm::STDM;
    if (s == "SPDM" || s == "pd") return Algorithm::SPDM;
    if (s == "SHDM" || s == "hd") return Algorithm::SHDM;
    raise(ErrorKind::ParseError, "unknown algorithm '" + std::string(s) + "'");
}

template <class S>
BandFactors<S>::BandFactors(std::size_t n, int w, StorageKind storage) : n_(n), w_(w) {
    for (int d = 1; d <= w; ++d) lower_.emplace_back(storage, n - static_cast<std::size_t>(d));
    for (int d = 0; d <= w; ++d) upper_.emplace_back(storage, n - static_cast<std::size_t>(d));
}

template class BandFactors<Scalar>;
template class BandFactors<double>;

namespace {

template <class S>
S from_entry(const S& v) {
    return v;
}
inline Scalar from_entry(const Rational& v) { return Scalar(v); }

bool is_exact_zero(const Scalar& s) { return s.is_zero(); }
bool is_exact_zero(double s) { return s == 0.0; }

}  // namespace

template <class T>
BandFactors<work_t<T>> band_lu_symbolic(const BandSystem<T>& sys) {
    using S = work_t<T>;
    const std::size_t n = sys.n();
    const auto w = static_cast<std::size_t>(sys.w());
    BandFactors<S> f(n, sys.w(), sys.storage());

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= w ? i - w : 0;
        for (std::size_t j = lo; j < i; ++j) {
            S s = from_entry(sys.a(i, j));
            for (std::size_t k = lo; k < j; ++k) s -= f.l(i, k) * f.u(k, j);
            s /= f.u(j, j);
            f.set_l(i, j, std::move(s));
        }
        const std::size_t hi = std::min(n - 1, i + w);
        for (std::size_t j = i; j <= hi; ++j) {
            S s = from_entry(sys.a(i, j));
            const std::size_t klo = std::max(lo, j >= w ? j - w : 0);
            for (std::size_t k = klo; k < i; ++k) s -= f.l(i, k) * f.u(k, j);
            if (j == i && is_exact_zero(s)) {
                if constexpr (std::is_same_v<S, double>) {
                    raise(ErrorKind::FloatZeroPivot, "zero pivot at row " + std::to_string(i + 1) +
                                                         " on the float backend");
                } else {
                    s = Scalar::x();
                    f.substituted_pivots.push_back(i + 1);
                }
            }
            f.set_u(i, j, std::move(s));
        }
    }
    return f;
}

template <class T>
std::vector<work_t<T>> substitute_solve(const BandSystem<T>& sys, const BandFactors<work_t<T>>& f) {
    using S = work_t<T>;
    const std::size_t n = sys.n();
    const auto w = static_cast<std::size_t>(sys.w());

    IndexedStore<S> y(sys.storage(), n);
    for (std::size_t i = 0; i < n; ++i) {
        S s = from_entry(sys.b(i));
        for (std::size_t k = i >= w ? i - w : 0; k < i; ++k) s -= f.l(i, k) * y.get(k);
        y.set(i, std::move(s));
    }

    IndexedStore<S> z(sys.storage(), n);
    for (std::size_t r = n; r-- > 0;) {
        S s = y.get(r);
        const std::size_t hi = std::min(n - 1, r + w);
        for (std::size_t j = r + 1; j <= hi; ++j) s -= f.u(r, j) * z.get(j);
        s /= f.u(r, r);
        z.set(r, std::move(s));
    }

    std::vector<S> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(z.get(i));
    return out;
}

Scalar product_tree(std::vector<Scalar> factors) {
    if (factors.empty()) return Scalar(1L);
    while (factors.size() > 1) {
        std::size_t out = 0;
        for (std::size_t k = 0; k + 1 < factors.size(); k += 2) factors[out++] = factors[k] * factors[k + 1];
        if (factors.size() % 2 == 1) factors[out++] = std::move(factors.back());
        factors.resize(out);
    }
    return factors.front();
}

template <class T>
SolveResult<T> solve(const BandSystem<T>& sys) {
    using S = work_t<T>;
    const BandFactors<S> f = band_lu_symbolic(sys);
    std::vector<S> z = substitute_solve(sys, f);

    SolveResult<T> result{{}, T(0), f.substituted_pivots, sys.backend(), sys.storage()};
    result.solution.reserve(sys.n());

    if constexpr (std::is_same_v<T, Rational>) {
        std::vector<Scalar> pivots;
        pivots.reserve(sys.n());
        for (std::size_t i = 0; i < sys.n(); ++i) pivots.push_back(f.u(i, i));
        try {
            result.det = eval_at_zero(product_tree(std::move(pivots)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::LimitUndefined) throw;
            raise(ErrorKind::SingularMatrix, "matrix is singular (determinant diverges at x = 0)");
        }
        if (result.det == 0) raise(ErrorKind::SingularMatrix, "matrix is singular (determinant is 0)");
        for (std::size_t i = 0; i < z.size(); ++i) {
            try {
                result.solution.push_back(eval_at_zero(z[i]));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::LimitUndefined) throw;
                raise(ErrorKind::SingularMatrix,
                      "matrix is singular (solution component " + std::to_string(i + 1) + " diverges)");
            }
        }
    } else {
        // Float pivots are all nonzero here; the product may overflow to inf for large n.
        double det = 1.0;
        for (std::size_t i = 0; i < sys.n(); ++i) det *= f.u(i, i);
        result.det = det;
        result.solution = std::move(z);
    }
    return result;
}

namespace {
template <class T>
SolveResult<T> solve_checked(Algorithm a, const BandSystem<T>& sys) {
    if (sys.w() != half_bandwidth(a))
        raise(ErrorKind::ShapeError, std::string(to_string(a)) + " needs half-bandwidth " +
                                         std::to_string(half_bandwidth(a)) + ", system has " +
                                         std::to_string(sys.w()));
    return solve(sys);
}
}  // namespace

template <class T>
SolveResult<T> stdm(const BandSystem<T>& sys) {
    return solve_checked(Algorithm::STDM, sys);
}
template <class T>
SolveResult<T> spdm(const BandSystem<T>& sys) {
    return solve_checked(Algorithm::SPDM, sys);
}
template <class T>
SolveResult<T> shdm(const BandSystem<T>& sys) {
    return solve_checked(Algorithm::SHDM, sys);
}
template <class T>
SolveResult<T> solve_with(Algorithm a, const BandSystem<T>& sys) {
    return solve_checked(a, sys);
}

std::vector<Rational> band_multiply(const ExactSystem& sys, const std::vector<Rational>& z) {
    if (z.size() != sys.n()) raise(ErrorKind::ShapeError, "vector length does not match system size");
    std::vector<Rational> out(sys.n(), Rational(0));
    for (int o = -sys.w(); o <= sys.w(); ++o) {
        const auto values = sys.diag(o).snapshot();
        for (std::size_t k = 0; k < values.size(); ++k) {
            const std::size_t i = o >= 0 ? k : k + static_cast<std::size_t>(-o);
            const std::size_t j = o >= 0 ? k + static_cast<std::size_t>(o) : k;
            out[i] += values[k] * z[j];
        }
    }
    return out;
}

#define SYMBAND_INSTANTIATE(T)                                                                     \
    template BandFactors<work_t<T>> band_lu_symbolic(const BandSystem<T>&);                       \
    template std::vector<work_t<T>> substitute_solve(const BandSystem<T>&, const BandFactors<work_t<T>>&); \
    template SolveResult<T> solve(const BandSystem<T>&);                                            \
    template SolveResult<T> stdm(const BandSystem<T>&);                                             \
    template SolveResult<T> spdm(const BandSystem<T>&);                                             \
    template SolveResult<T> shdm(const BandSystem<T>&);                                             \
    template SolveResult<T> solve_with(Algorithm, const BandSystem<T>&);

SYMBAND_INSTANTIATE(Rational)
SYMBAND_INSTANTIATE(double)

#undef SYMBAND_INSTANTIATE

}  // namespace symband
