#include "symband/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace symband {

namespace {
thread_local std::uint64_t g_symbolic_ops = 0;
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::LimitUndefined: return "LimitUndefined";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SizeError: return "SizeError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::FloatZeroPivot: return "FloatZeroPivot";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::ReductionPivotZero: return "ReductionPivotZero";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::MissingSeries: return "MissingSeries";
        case ErrorKind::InsufficientData: return "InsufficientData";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    const auto bad = [&] { raise(ErrorKind::ParseError, "not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    const std::size_t slash = s.find('/');
    const auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(from),
                           s.begin() + static_cast<std::ptrdiff_t>(to),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
        if (!digits(pos, s.size())) bad();
    } else if (!digits(pos, slash) || !digits(slash + 1, s.size())) {
        bad();
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) bad();
    if (r.get_den() == 0) raise(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    const Rational lead = leading();
    if (lead == 1) return *this;
    Poly out = *this;
    for (auto& c : out.coeffs_) c /= lead;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& k : out.coeffs_) k *= c;
    return out;
}

PolyDivision divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly{}, p};
    const int dq = q.degree();
    const Rational lead = q.leading();
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
    for (int k = p.degree(); k >= dq; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dq)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dq));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly p, Poly q) {
    while (!q.is_zero()) {
        Poly r = divmod(p, q).remainder;
        p = std::move(q);
        q = r.monic();
    }
    return p.monic();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) os << to_string(mag);
        if (k >= 1) os << (k == 0 || mag != 1 ? "*x" : "x");
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc RatFunc::normalize(Poly num, Poly den) {
    if (den.is_zero()) raise(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    RatFunc out;
    if (num.is_zero()) return out;
    const Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).quotient;
        den = divmod(den, g).quotient;
    }
    const Rational lead = den.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num = num * inv;
        den = den * inv;
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    ++g_symbolic_ops;
    if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
    return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    ++g_symbolic_ops;
    if (a.den_ == b.den_) return RatFunc::normalize(a.num_ - b.num_, a.den_);
    return RatFunc::normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    ++g_symbolic_ops;
    return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    ++g_symbolic_ops;
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero rational function");
    return RatFunc::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& f) {
    if (f.den().degree() == 0) return "(" + to_string(f.num()) + ")";
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(RatFunc f) {
    if (f.is_constant()) value_ = f.num().coeff(0);  // den is monic of degree 0, i.e. 1
    else value_ = std::move(f);
}

Scalar Scalar::x() { return Scalar(RatFunc(Poly::x())); }

bool Scalar::is_zero() const noexcept { return is_exact() && sgn(std::get<Rational>(value_)) == 0; }

RatFunc Scalar::as_ratfunc() const {
    if (is_exact()) return RatFunc(exact());
    return symbolic();
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (is_exact() && b.is_exact()) std::get<Rational>(value_) += b.exact();
    else *this = Scalar(as_ratfunc() + b.as_ratfunc());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
    if (is_exact() && b.is_exact()) std::get<Rational>(value_) -= b.exact();
    else *this = Scalar(as_ratfunc() - b.as_ratfunc());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
    if (is_exact() && b.is_exact()) std::get<Rational>(value_) *= b.exact();
    else *this = Scalar(as_ratfunc() * b.as_ratfunc());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero scalar");
    if (is_exact() && b.is_exact()) std::get<Rational>(value_) /= b.exact();
    else *this = Scalar(as_ratfunc() / b.as_ratfunc());
    return *this;
}

Scalar rat_arith(ArithOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return {};
}

Rational eval_at_zero(const Scalar& s) {
    if (s.is_exact()) return s.exact();
    const RatFunc& f = s.symbolic();
    const Rational d0 = f.den().coeff(0);
    if (d0 == 0) raise(ErrorKind::LimitUndefined, "pole at x = 0 in " + to_string(f));
    return Rational(f.num().coeff(0) / d0);
}

std::string to_string(const Scalar& s) { return s.is_exact() ? to_string(s.exact()) : to_string(s.symbolic()); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

std::uint64_t symbolic_op_count() noexcept { return g_symbolic_ops; }
void reset_symbolic_op_count() noexcept { g_symbolic_ops = 0; }

}  // namespace symband
