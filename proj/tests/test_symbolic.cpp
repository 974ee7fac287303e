#include <doctest.h>

#include "cyclo/symbolic.hpp"

using namespace cyclo;

namespace {

SymTerm term(long c, long num, long den, bool imag = false, int radical = 0) {
    return SymTerm{Int(c), num, den, imag, radical};
}

} // namespace

TEST_CASE("plain quadratic surd arithmetic") {
    auto ctx = std::make_shared<SymContext>(5);
    // value = 3 + 2*sqrt(5) with s = 2, exponent 1/4 of q = p^{1/2}
    SymValue a = SymValue::from_terms(ctx, 2, {term(3, 0, 1), term(2, 1, 4)});
    SymValue b = SymValue::from_terms(ctx, 2, {term(3, 0, 1), term(-2, 1, 4)});
    SymValue prod = a * b; // 9 - 4*5 = -11
    CHECK(prod.is_rational_integer());
    CHECK(prod.rational_value() == -11);

    SymValue sq = a.pow(2); // 29 + 12 sqrt(5)
    SymValue expect = SymValue::from_terms(ctx, 2, {term(29, 0, 1), term(12, 1, 4)});
    CHECK(sq == expect);
    CHECK((a - a).is_zero());
    CHECK_FALSE(a.is_rational_integer());
}

TEST_CASE("imaginary units") {
    auto ctx = std::make_shared<SymContext>(3);
    SymValue i = SymValue::from_term(ctx, 2, term(1, 0, 1, true));
    CHECK((i * i).rational_value() == -1);
    // (i sqrt(3))^2 = -3, with s = 2 so exponent 1/4 means sqrt(p)
    SymValue isq3 = SymValue::from_term(ctx, 2, term(1, 1, 4, true));
    CHECK((isq3 * isq3).rational_value() == -3);
    SymValue one_plus_i = SymValue::from_integer(ctx, 1) + i;
    SymValue two_i = i + i;
    CHECK(one_plus_i.pow(2) == two_i);
}

TEST_CASE("exponent grid violations are caught") {
    auto ctx = std::make_shared<SymContext>(5);
    // s = 1, exponent 1/4: p^{1/4} is off the half grid
    CHECK_THROWS_AS(SymValue::from_term(ctx, 1, term(1, 1, 4)), InconsistencyError);
    // radical term without a radical context
    CHECK_THROWS_AS(SymValue::from_term(ctx, 4, term(1, 7, 16, true, -1)), InconsistencyError);
}

TEST_CASE("bundled nested radicals reduce correctly") {
    // the (5, 4, 4) quarter-split data: C_3 = -1, D_3 = 2, E = 7/4, K = 1/2
    auto ctx = std::make_shared<SymContext>(5, 7, 2, Int(-1), Int(2));
    CHECK(ctx->has_radical());
    // T-^2 = 2q - 2C p^{7/2} = 1250 + 250 sqrt(5)
    CHECK(ctx->t_minus_sq().a == 1250);
    CHECK(ctx->t_minus_sq().b == 250);
    CHECK(ctx->t_plus_sq().a == 1250);
    CHECK(ctx->t_plus_sq().b == -250);
    // T- T+ = 2|D| p^{7/2} = 500 sqrt(5)
    CHECK(ctx->t_cross().a == 0);
    CHECK(ctx->t_cross().b == 500);

    SymValue tm = SymValue::from_term(ctx, 4, term(1, 7, 16, true, -1)); // i T-
    SymValue sq = tm * tm; // -T-^2
    SymValue expect = SymValue::from_terms(ctx, 4, {term(-1250, 0, 1), term(-250, 1, 8)});
    CHECK(sq == expect);

    // conjugate pair sums: (a + iT-)^2 + (a - iT-)^2 = 2a^2 - 2 T-^2
    SymValue a = SymValue::from_term(ctx, 4, term(5, 0, 1));
    SymValue v1 = (a + tm).pow(2) + (a - tm).pow(2);
    SymValue expect2 =
        SymValue::from_terms(ctx, 4, {term(2 * 25 - 2 * 1250, 0, 1), term(-500, 1, 8)});
    CHECK(v1 == expect2);

    // mismatched partition data is rejected
    CHECK_THROWS_AS(SymContext(5, 7, 2, Int(-1), Int(3)), InconsistencyError);
}

TEST_CASE("cyclotomic embedding") {
    {
        auto ctx = std::make_shared<SymContext>(5);
        SymValue root5 = SymValue::from_term(ctx, 2, term(1, 1, 4)); // sqrt(5)
        auto z = root5.to_cycloint();
        REQUIRE(z.has_value());
        CHECK(cyc_mul(*z, *z) == CycloInt::from_integer(5, 5));
        // plain i does not live in Q(zeta_5)
        SymValue i = SymValue::from_term(ctx, 2, term(1, 0, 1, true));
        CHECK_FALSE(i.to_cycloint().has_value());
    }
    {
        auto ctx = std::make_shared<SymContext>(3);
        SymValue v = SymValue::from_terms(ctx, 2, {term(9, 0, 1), term(24, 1, 4, true)});
        auto z = v.to_cycloint(); // 9 + 24 i sqrt(3) = 33 + 48 zeta
        REQUIRE(z.has_value());
        CHECK(z->coords() == std::vector<Int>{Int(33), Int(48)});
        // bare sqrt(3) is outside Q(zeta_3)
        SymValue r3 = SymValue::from_term(ctx, 2, term(1, 1, 4));
        CHECK_FALSE(r3.to_cycloint().has_value());
    }
}

TEST_CASE("display strings") {
    SymbolicPeriodValue v{{term(1, 1, 2), term(-4, 1, 4)}};
    CHECK(v.display(3, 4) == "3^2 - 4*3^1");
    SymbolicPeriodValue w{{term(-3, 1, 2), term(8, 3, 8, true)}};
    CHECK(w.display(3, 4) == "-3*3^2 + 8*3^(3/2)*i");
    SymbolicPeriodValue r{{term(2, 1, 2), term(4, 7, 16, true, +1)}};
    CHECK(r.display(5, 4, Int(-1), 1, 8) == "2*5^2 + 4*5^(7/4)*i*sqrt(2*(5^(1/2) - 1))");
}
