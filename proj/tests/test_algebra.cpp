#include <doctest.h>

#include "occ132/algebraic.hpp"
#include "occ132/error.hpp"
#include "occ132/series.hpp"
#include "support.hpp"

using namespace occ132;
namespace ts = testing_support;

static PowerSeries series(int order, std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return PowerSeries(order, v);
}

static PowerSeries catalan_series(int order) {
    PowerSeries s(order);
    for (int n = 0; n <= order; ++n) s[n] = ts::catalan(n);
    return s;
}

static AlgebraicFunction psi0() { return AlgebraicFunction(IntPoly{1}, IntPoly{-1}, IntPoly{0, 2}); }

TEST_CASE("series products") {
    CHECK(series(4, {1, 1}) * series(4, {1, -1}) == series(4, {1, 0, -1}));
    CHECK((series(4, {1, 2, 3}) * PowerSeries(4)).is_zero());
    const auto c = catalan_series(8);
    // Psi_0 - 1 = x Psi_0^2.
    CHECK(c - PowerSeries::constant(8, 1) == (c * c).shifted(1));
}

TEST_CASE("series division") {
    const auto geo = ps_div(PowerSeries::constant(6, 1), series(6, {1, -1}));
    for (int n = 0; n <= 6; ++n) CHECK(geo[n] == 1);
    const auto c = catalan_series(10);
    // (Psi_0 - 1) / x, written out by dropping the constant term.
    PowerSeries reduced(9);
    for (int n = 0; n <= 9; ++n) reduced[n] = c[n + 1];
    CHECK(ps_div(reduced, c.truncated(9)) == c.truncated(9));
    CHECK(ps_div(c, c) == PowerSeries::constant(10, 1));
    CHECK_THROWS_AS(ps_div(c, series(10, {0, 1})), Error);
}

TEST_CASE("square root of 1 - 4x") {
    const auto s = sqrt_one_minus_4x(4);
    CHECK(s == series(4, {1, -2, -2, -4, -10}));
    const auto big = sqrt_one_minus_4x(30);
    for (int n = 1; n <= 30; ++n) CHECK(big[n] == ts::ratio(-2 * ts::binomial(2 * n - 2, n - 1), n));
    CHECK(big * big == series(30, {1, -4}));
    const auto c = catalan_series(30);
    CHECK(PowerSeries::constant(30, 1) - 2 * c.shifted(1).truncated(30) == big);
}

TEST_CASE("polynomial helpers") {
    const RatPoly a({mpq_class(-1), mpq_class(0), mpq_class(1)});  // x^2 - 1
    const RatPoly b({mpq_class(1), mpq_class(1)});                  // x + 1
    const auto [q, r] = divmod(a, b);
    CHECK(q == RatPoly({mpq_class(-1), mpq_class(1)}));
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == b);
    CHECK(content(IntPoly{4, -6, 10}) == 2);
    CHECK(is_integral(RatPoly({mpq_class(3), mpq_class(-2)})));
    CHECK_FALSE(is_integral(RatPoly({mpq_class(1, 2)})));
    CHECK(to_string(RatPoly({mpq_class(-2), mpq_class(7), mpq_class(-5), mpq_class(2)})) == "2x^3 - 5x^2 + 7x - 2");
}

TEST_CASE("algebraic function arithmetic") {
    const auto p0 = psi0();
    const auto one = AlgebraicFunction::rational(IntPoly{1});
    const auto x = AlgebraicFunction::x_power(1);
    CHECK((x * p0 * p0 - p0 + one).is_zero());
    CHECK(one - x * p0 * mpz_class(2) == AlgebraicFunction::sqrt_one_minus_4x());
    CHECK((p0 - p0).is_zero());
    CHECK(af_arith(p0, p0, ArithOp::div) == one);
    CHECK(af_arith(p0, one, ArithOp::mul) == p0);
    const auto y = AlgebraicFunction::sqrt_one_minus_4x();
    CHECK(y * y == AlgebraicFunction::rational(IntPoly{1, -4}));
    CHECK_THROWS_AS(one / AlgebraicFunction(), Error);
    // Scaled representatives compare equal.
    CHECK(AlgebraicFunction(IntPoly{2}, IntPoly{-2}, IntPoly{0, 4}) == p0);
}

TEST_CASE("expansion to series") {
    CHECK(af_to_series(psi0(), 64) == catalan_series(64));
    CHECK(af_to_series(AlgebraicFunction::rational(IntPoly{1}), 5) == PowerSeries::constant(5, 1));
    const auto pole = AlgebraicFunction(IntPoly{}, IntPoly{1}, IntPoly{0, 1});
    CHECK_THROWS_AS(af_to_series(pole, 5), Error);
}

TEST_CASE("P/Q extraction") {
    // Psi_1 = ((x - 1) + (1 - 3x) y^{-1}) / 2.
    const auto y = AlgebraicFunction::sqrt_one_minus_4x();
    const auto half = AlgebraicFunction::rational(IntPoly{1}, IntPoly{2});
    const auto psi1 = half * (AlgebraicFunction::rational(IntPoly{-1, 1}) + AlgebraicFunction::rational(IntPoly{1, -3}) / y);
    const auto form = extract_PQ(psi1, 1);
    REQUIRE(form.polynomial);
    CHECK(*form.P_poly() == to_rational(IntPoly{-1, 1}));
    CHECK(*form.Q_poly() == to_rational(IntPoly{1, -3}));
    CHECK(reassemble_PQ(form) == psi1);
    const auto c = af_to_series(psi1, 12);
    for (int n = 3; n <= 12; ++n) CHECK(c[n] == ts::binomial(2 * n - 3, n - 3));
}
