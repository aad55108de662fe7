#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kernel_properties.hpp"
#include "random_scalars.hpp"
#include "symband/scalar.hpp"

using namespace symband;

namespace {
Poly P(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}
Rational Q(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("rational text round trip and parse errors") {
    CHECK(to_string(Q(5, 6)) == "5/6");
    CHECK(to_string(Q(4, 2)) == "2");
    CHECK(to_string(Q(-3, 9)) == "-1/3");
    CHECK(parse_rational("-6/4") == Q(-3, 2));
    CHECK(parse_rational("+12") == Q(12));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("3/"), Error);
}

TEST_CASE("rat_arith examples") {
    CHECK(rat_arith(ArithOp::Add, Q(1, 2), Q(1, 3)) == Scalar(Q(5, 6)));

    const Scalar inv = rat_arith(ArithOp::Div, Scalar(1L), Scalar::x());
    REQUIRE(inv.is_symbolic());
    CHECK(inv.symbolic().num() == P({1}));
    CHECK(inv.symbolic().den() == P({0, 1}));

    const Scalar minus_inv = Scalar(RatFunc::normalize(P({-1}), P({0, 1})));
    const Scalar prod = rat_arith(ArithOp::Mul, Scalar::x(), minus_inv);
    REQUIRE(prod.is_exact());
    CHECK(prod.exact() == -1);

    CHECK_THROWS_AS(rat_arith(ArithOp::Div, Scalar::x(), Scalar(0L)), Error);
    try {
        (void)rat_arith(ArithOp::Div, Q(1), Q(0));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
    CHECK(poly_gcd(P({0, 1, 1}), P({0, 1})) == P({0, 1}));
    CHECK(poly_gcd(P({2, 2}), Poly{}) == P({1, 1}));
    CHECK(poly_gcd(Poly{}, Poly{}).is_zero());
    CHECK(poly_gcd(Poly{}, P({0, 3})) == P({0, 1}));
}

TEST_CASE("rf_normalize examples") {
    const RatFunc a = RatFunc::normalize(P({0, 1, 1}), P({0, 1}));
    CHECK(a.num() == P({1, 1}));
    CHECK(a.den() == P({1}));

    const RatFunc b = RatFunc::normalize(P({6, 3}), P({2, 1}));
    CHECK(b.num() == P({3}));
    CHECK(b.den() == P({1}));

    const RatFunc c = RatFunc::normalize(P({0, 2}), P({4}));
    CHECK(c.num() == Poly(std::vector<Rational>{Q(0), Q(1, 2)}));
    CHECK(c.den() == P({1}));

    try {
        (void)RatFunc::normalize(P({1}), Poly{});
        FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroDenominator);
    }
}

TEST_CASE("eval_at_zero examples") {
    CHECK(eval_at_zero(Scalar(Q(7, 3))) == Q(7, 3));
    CHECK(eval_at_zero(Scalar(RatFunc(P({1, -2})))) == Q(1));
    try {
        (void)eval_at_zero(Scalar(1L) / Scalar::x());
        FAIL("expected LimitUndefined");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LimitUndefined);
    }
    // (x^2 + x) / x has a removable singularity; canonical form makes it x + 1.
    CHECK(eval_at_zero(Scalar(RatFunc::normalize(P({0, 1, 1}), P({0, 1})))) == Q(1));
}

TEST_CASE("constant symbolic values collapse to exact") {
    const Scalar s = Scalar::x() / Scalar::x();
    CHECK(s.is_exact());
    CHECK(s == Scalar(1L));
    CHECK((Scalar::x() - Scalar::x()).is_zero());
}

TEST_CASE("symbolic op counter stays at zero on exact-only arithmetic") {
    reset_symbolic_op_count();
    Scalar a = Q(3, 4);
    for (int k = 0; k < 50; ++k) a = a * Q(5, 7) + Q(1, 9) - Scalar(Q(2)) / Q(3);
    CHECK(symbolic_op_count() == 0);
    (void)(a + Scalar::x());
    CHECK(symbolic_op_count() == 1);
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const Poly p = testing::random_poly(rng, 5);
        Poly q = testing::random_poly(rng, 3);
        if (q.is_zero()) continue;
        const auto [quot, rem] = divmod(p, q);
        CHECK(quot * q + rem == p);
        CHECK(rem.degree() < q.degree());
    }
}

TEST_CASE("kernel properties on random inputs") {
    CHECK(testing::field_axiom_failures(2000, 11) == 0);
    CHECK(testing::gcd_failures(2000, 12) == 0);
    CHECK(testing::idempotence_failures(2000, 13) == 0);
    CHECK(testing::eval_at_zero_failures(2000, 14) == 0);
}
