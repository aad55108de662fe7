#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symband/scalar.hpp"
#include "symband/store.hpp"

namespace symband {

enum class Backend { Exact, Float };

inline std::string_view to_string(Backend b) noexcept { return b == Backend::Exact ? "exact" : "float"; }
Backend parse_backend(std::string_view s);

template <class T>
struct BackendOf;
template <>
struct BackendOf<Rational> {
    static constexpr Backend value = Backend::Exact;
};
template <>
struct BackendOf<double> {
    static constexpr Backend value = Backend::Float;
};

/// Square band system A·z = b with half-bandwidth w, stored one sequence per
/// diagonal offset o in [-w, w] (length n - |o|) plus the right-hand side.
/// Entry (i, j), 0-based, lives in diagonal j - i at index min(i, j).
template <class T>
class BandSystem {
public:
    using value_type = T;

    /// Zero-filled system. Only requires every diagonal to be nonempty
    /// (n >= w + 1); build_system applies the stricter n >= 2w + 1 contract.
    BandSystem(std::size_t n, int w, StorageKind storage);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] int w() const noexcept { return w_; }
    [[nodiscard]] StorageKind storage() const noexcept { return storage_; }
    [[nodiscard]] static constexpr Backend backend() noexcept { return BackendOf<T>::value; }

    /// Band entry (i, j); |i - j| <= w is the caller's obligation.
    [[nodiscard]] const T& a(std::size_t i, std::size_t j) const { return diag(offset(i, j)).get(std::min(i, j)); }
    void set_a(std::size_t i, std::size_t j, T v) { diag(offset(i, j)).set(std::min(i, j), std::move(v)); }

    [[nodiscard]] const T& b(std::size_t i) const { return rhs_.get(i); }
    void set_b(std::size_t i, T v) { rhs_.set(i, std::move(v)); }

    [[nodiscard]] IndexedStore<T>& diag(int o) { return diags_.at(static_cast<std::size_t>(o + w_)); }
    [[nodiscard]] const IndexedStore<T>& diag(int o) const { return diags_.at(static_cast<std::size_t>(o + w_)); }
    [[nodiscard]] IndexedStore<T>& rhs() noexcept { return rhs_; }
    [[nodiscard]] const IndexedStore<T>& rhs() const noexcept { return rhs_; }

    /// Same contents, different storage class.
    [[nodiscard]] BandSystem with_storage(StorageKind storage) const;

    /// Total access steps charged across all sequences.
    [[nodiscard]] std::uint64_t steps() const noexcept;
    void reset_steps() noexcept;

private:
    static int offset(std::size_t i, std::size_t j) noexcept {
        return static_cast<int>(static_cast<long long>(j) - static_cast<long long>(i));
    }

    std::size_t n_;
    int w_;
    StorageKind storage_;
    std::vector<IndexedStore<T>> diags_;
    IndexedStore<T> rhs_;
};

using ExactSystem = BandSystem<Rational>;
using FloatSystem = BandSystem<double>;
using AnySystem = std::variant<ExactSystem, FloatSystem>;

/// Raw, untyped system description as read from text.
struct SystemText {
    long long n = 0;
    int w = 0;
    std::map<int, std::vector<std::string>> diagonals;  // offset -> entries
    std::vector<std::string> rhs;
};

/// Validates shape and parses entries. Throws SizeError, ShapeError or ParseError.
AnySystem build_system(const SystemText& text, Backend backend, StorageKind storage);

/// Typed overloads used by generators and tests.
ExactSystem build_exact(std::size_t n, int w, const std::map<int, std::vector<Rational>>& diagonals,
                        const std::vector<Rational>& rhs, StorageKind storage = StorageKind::Fixed);

/// Row-major dense copy of A (zeros outside the band), uncharged.
template <class T>
std::vector<std::vector<T>> to_dense(const BandSystem<T>& sys);

FloatSystem to_float(const ExactSystem& sys);

/// Checks n >= 2w + 1 and w in {1, 2, 3}; throws SizeError.
void check_size(long long n, int w);

}  // namespace symband
