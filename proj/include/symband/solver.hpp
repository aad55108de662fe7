#pragma once

// Band LU (Doolittle, no row exchanges) with zero-pivot substitution.
//
// When a pivot u(i,i) comes out exactly zero it is replaced by the
// indeterminate x and elimination continues over Q(x). At the end every
// returned quantity is specialized at x = 0. Because the perturbation only
// adds x to diagonal entries, det A(x) -> det A and, for nonsingular A,
// A(x)^{-1} b -> A^{-1} b; a pole at 0 therefore certifies singularity.
//
// All matrix and vector data, including the factors and the intermediate
// vectors, is read and written through IndexedStore so the storage class
// decides the access cost.

#include <cstddef>
#include <string_view>
#include <vector>

#include "symband/band.hpp"

namespace symband {

enum class Algorithm { STDM = 1, SPDM = 2, SHDM = 3 };

inline int half_bandwidth(Algorithm a) noexcept { return static_cast<int>(a); }
Algorithm algorithm_for(int w);
std::string_view to_string(Algorithm a) noexcept;
/// Accepts "STDM"/"SPDM"/"SHDM" or the short forms "td"/"pd"/"hd".
Algorithm parse_algorithm(std::string_view s);

/// Arithmetic type used during elimination for a given at-rest entry type.
template <class T>
struct WorkOf;
template <>
struct WorkOf<Rational> {
    using type = Scalar;
};
template <>
struct WorkOf<double> {
    using type = double;
};
template <class T>
using work_t = typename WorkOf<T>::type;

template <class S>
class BandFactors {
public:
    BandFactors(std::size_t n, int w, StorageKind storage);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] int w() const noexcept { return w_; }

    /// Multiplier l(i,j) for i - w <= j < i (0-based).
    [[nodiscard]] const S& l(std::size_t i, std::size_t j) const { return lower_[i - j - 1].get(j); }
    void set_l(std::size_t i, std::size_t j, S v) { lower_[i - j - 1].set(j, std::move(v)); }
    /// Upper entry u(i,j) for i <= j <= i + w (0-based).
    [[nodiscard]] const S& u(std::size_t i, std::size_t j) const { return upper_[j - i].get(i); }
    void set_u(std::size_t i, std::size_t j, S v) { upper_[j - i].set(i, std::move(v)); }

    /// 1-based row indices whose pivot was replaced by x, ascending.
    std::vector<std::size_t> substituted_pivots;

private:
    std::size_t n_;
    int w_;
    std::vector<IndexedStore<S>> lower_;  // lower_[d-1] holds offset -d
    std::vector<IndexedStore<S>> upper_;  // upper_[d] holds offset +d
};

template <class T>
struct SolveResult {
    std::vector<T> solution;
    T det;
    std::vector<std::size_t> substituted_pivots;  // 1-based
    Backend backend;
    StorageKind storage;
};

/// Throws FloatZeroPivot when the float backend meets an exactly zero pivot.
template <class T>
BandFactors<work_t<T>> band_lu_symbolic(const BandSystem<T>& sys);

/// Forward then back substitution; the result may hold Symbolic values.
template <class T>
std::vector<work_t<T>> substitute_solve(const BandSystem<T>& sys, const BandFactors<work_t<T>>& f);

/// Full solve with specialization at x = 0. Throws SingularMatrix.
template <class T>
SolveResult<T> solve(const BandSystem<T>& sys);

/// The named methods; each checks the system's half-bandwidth.
template <class T>
SolveResult<T> stdm(const BandSystem<T>& sys);
template <class T>
SolveResult<T> spdm(const BandSystem<T>& sys);
template <class T>
SolveResult<T> shdm(const BandSystem<T>& sys);

template <class T>
SolveResult<T> solve_with(Algorithm a, const BandSystem<T>& sys);

/// Product by balanced pairwise multiplication, so exact products of many
/// small factors cost quasi-linear rather than quadratic time.
Scalar product_tree(std::vector<Scalar> factors);

/// A·z computed through the band structure (uncharged reads).
std::vector<Rational> band_multiply(const ExactSystem& sys, const std::vector<Rational>& z);

}  // namespace symband
