#pragma once

// Exact arithmetic kernel: GMP rationals, univariate polynomials over Q in a
// single indeterminate x, the rational-function field Q(x), and the tagged
// Scalar that promotes from the first to the last on demand.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symband/error.hpp"

namespace symband {

/// Canonical rational: denominator positive, lowest terms, zero is 0/1.
using Rational = mpq_class;

/// Renders "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or an integer, with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial over Q; coefficient index = degree.
/// The coefficient list never ends in a zero, so the zero polynomial is empty.
class Poly {
public:
    static constexpr int kZeroDegree = -1;  // stands in for minus infinity

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    explicit Poly(const Rational& constant);

    /// The monomial x.
    static Poly x();

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] Rational coeff(int k) const;
    [[nodiscard]] Rational eval(const Rational& at) const;

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    [[nodiscard]] Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& c);
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
PolyDivision divmod(const Poly& p, const Poly& q);

/// Monic gcd; gcd(p, 0) = monic(p) and gcd(0, 0) = 0.
Poly poly_gcd(Poly p, Poly q);

std::string to_string(const Poly& p);

/// Element of Q(x) in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}

    /// Cancels the gcd and makes the denominator monic. Throws ZeroDenominator.
    static RatFunc normalize(Poly num, Poly den);

    [[nodiscard]] const Poly& num() const noexcept { return num_; }
    [[nodiscard]] const Poly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when both parts have degree <= 0.
    [[nodiscard]] bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    Poly num_;
    Poly den_;
};

std::string to_string(const RatFunc& f);

/// Exact(Rational) | Symbolic(RatFunc). A Symbolic value never holds a
/// constant; constructing one from a constant RatFunc collapses to Exact.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(const Rational& r) : value_(r) {}  // NOLINT: implicit lift is the point
    Scalar(long v) : value_(Rational(v)) {}   // NOLINT
    explicit Scalar(RatFunc f);

    /// The indeterminate x used for zero-pivot substitution.
    static Scalar x();

    [[nodiscard]] bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    [[nodiscard]] bool is_symbolic() const noexcept { return !is_exact(); }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] const Rational& exact() const { return std::get<Rational>(value_); }
    [[nodiscard]] const RatFunc& symbolic() const { return std::get<RatFunc>(value_); }
    [[nodiscard]] RatFunc as_ratfunc() const;

    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    std::variant<Rational, RatFunc> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar rat_arith(ArithOp op, const Scalar& a, const Scalar& b);

/// Value at x = 0 of a canonical scalar; equals the limit since the
/// representation is in lowest terms. Throws LimitUndefined on a pole at 0.
Rational eval_at_zero(const Scalar& s);

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Number of rational-function operations executed on this thread since the
/// last reset. Exact-only arithmetic never increments it.
std::uint64_t symbolic_op_count() noexcept;
void reset_symbolic_op_count() noexcept;

}  // namespace symband
