#include <doctest.h>

#include <cmath>

#include "affine/numeric.hpp"
#include "affine/qcontext.hpp"
#include "affine/series.hpp"

using namespace affine;

TEST_CASE("rational helpers") {
    CHECK(make_rational(3, 6) == Rational(1, 2));
    CHECK(make_rational(-4, 8) == Rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("22/7") == make_rational(22, 7));
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

    CHECK(int_pow(Integer(3), 4) == 81);
    CHECK(int_pow(Integer(2), 0) == 1);
    CHECK(rat_pow(Rational(2, 3), 3) == make_rational(8, 27));
    CHECK(rat_pow(Rational(2, 3), -2) == make_rational(9, 4));
    CHECK(rat_pow(Rational(5), 0) == 1);
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);

    CHECK(to_string(make_rational(10, 4)) == "5/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_double(Rational(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("QContext powers and pochhammer") {
    QContext ctx(Rational(2));
    CHECK(ctx.q() == 2);
    CHECK(ctx.q_is_integer());
    CHECK(ctx.q_as_long() == 2);
    CHECK(ctx.q_pow(10) == 1024);
    CHECK(ctx.q_pow(-3) == Rational(1, 8));
    CHECK(ctx.q_pow(0) == 1);

    // (1/q)_i at q=2: (1-1/2) = 1/2, (1/2)(3/4) = 3/8, (3/8)(7/8) = 21/64
    CHECK(ctx.poch_one(0) == 1);
    CHECK(ctx.poch_one(1) == Rational(1, 2));
    CHECK(ctx.poch_one(2) == Rational(3, 8));
    CHECK(ctx.poch_one(3) == make_rational(21, 64));
    // poch_one serves only the cache; pochhammer computes past it
    QContext tiny(Rational(2), 2);
    CHECK_THROWS_AS(tiny.poch_one(5), std::invalid_argument);
    CHECK(tiny.pochhammer(Rational(1), 5) == ctx.poch_one(5));

    // pochhammer(x, i) = prod_{j<=i} (1 - x/q^j)
    CHECK(ctx.pochhammer(Rational(1), 2) == Rational(3, 8));
    CHECK(ctx.pochhammer(Rational(1, 2), 1) == Rational(3, 4));
    CHECK(ctx.pochhammer(Rational(1, 2), 2) ==
          Rational(3, 4) * (1 - Rational(1, 8)));
    // stride d: same product in base q^d
    QContext ctx4(Rational(4));
    CHECK(ctx.pochhammer(Rational(1), 2, 2) == ctx4.poch_one(2));
    CHECK(ctx.pochhammer(Rational(1), 2, 2) == Rational(3, 4) * Rational(15, 16));

    // rational q
    QContext half(Rational(5, 2));
    CHECK(half.q_pow(2) == make_rational(25, 4));
    CHECK_FALSE(half.q_is_integer());
    CHECK(half.poch_one(1) == make_rational(3, 5));
}

TEST_CASE("tail_product converges to the infinite product") {
    QContext ctx2(Rational(2));
    QContext ctx3(Rational(3));
    Rational eps = make_rational(1, Integer("1000000000000"));
    // prod_{k>=1}(1 - 2^-k) and prod_{k>=1}(1 - 3^-k), double oracles
    double p2 = 1.0, p3 = 1.0;
    for (int k = 1; k <= 200; ++k) {
        p2 *= 1.0 - std::pow(2.0, -k);
        p3 *= 1.0 - std::pow(3.0, -k);
    }
    CHECK(to_double(tail_product(ctx2, 1, eps)) == doctest::Approx(p2).epsilon(1e-11));
    CHECK(to_double(tail_product(ctx3, 1, eps)) == doctest::Approx(p3).epsilon(1e-11));
    // r0 > 1 splits off the leading factors
    Rational lead = (1 - Rational(1, 2)) * (1 - Rational(1, 4));
    Rational whole = tail_product(ctx2, 1, eps);
    Rational tail = tail_product(ctx2, 3, eps);
    CHECK(std::abs(to_double(whole - lead * tail)) < 1e-10);
    // x < 1 variant
    Rational withx = tail_product(ctx2, Rational(1, 2), 1, eps);
    double ox = 1.0;
    for (int k = 1; k <= 200; ++k) ox *= 1.0 - 0.5 * std::pow(2.0, -k);
    CHECK(to_double(withx) == doctest::Approx(ox).epsilon(1e-11));
}

TEST_CASE("series arithmetic") {
    const int m = 10;
    Series one = Series::one(m);
    Series u = Series::monomial(m, 1);

    CHECK(Series::geometric(m) * (one - u) == one);
    CHECK((one - u) * Series::geometric(m) == one);

    // (1+u)^5 has binomial coefficients
    Series binom = (one + u).pow(Integer(5));
    CHECK(binom.coeff(0) == 1);
    CHECK(binom.coeff(1) == 5);
    CHECK(binom.coeff(2) == 10);
    CHECK(binom.coeff(3) == 10);
    CHECK(binom.coeff(4) == 5);
    CHECK(binom.coeff(5) == 1);
    CHECK(binom.coeff(6) == 0);

    // inverse round-trip on something with all coefficients nonzero
    Series f(m);
    for (int i = 0; i <= m; ++i) f.set_coeff(i, make_rational(i + 1, i + 2));
    CHECK(f * f.inverse() == one);
    CHECK(f.div(f) == one);
    Series zero_const(m);
    CHECK_THROWS_AS(zero_const.inverse(), std::domain_error);

    // scale_arg and inflate
    Series g = Series::geometric(m).scale_arg(Rational(1, 2));
    for (int i = 0; i <= m; ++i) CHECK(g.coeff(i) == rat_pow(Rational(1, 2), i));
    Series h = (one + u).inflate(3);
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(3) == 1);
    CHECK(h.coeff(1) == 0);
    CHECK(h.coeff(6) == 0);

    CHECK((-u).coeff(1) == -1);
    CHECK_THROWS_AS(u.coeff(m + 1), std::invalid_argument);
    CHECK_THROWS_AS(u + Series::one(m + 1), std::invalid_argument);  // mixed orders
}

TEST_CASE("euler product series coefficients") {
    QContext ctx(Rational(2));
    Series e = euler_product_series(ctx, 6);
    // coefficient of u^i is (-1)^i / ((q^i-1)...(q-1))
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == -1);             // -1/(2-1)
    CHECK(e.coeff(2) == Rational(1, 3)); // 1/((4-1)(2-1))
    CHECK(e.coeff(3) == make_rational(-1, 21));
    CHECK(e.coeff(4) == make_rational(1, 3 * 7 * 15));

    // defining functional equation: E(u) = (1 - u/q) E(u/q)
    Series lhs = e;
    Series rhs = (Series::one(6) - Series::monomial(6, 1, Rational(1, 2))) *
                 e.scale_arg(Rational(1, 2));
    CHECK(lhs == rhs);
}
