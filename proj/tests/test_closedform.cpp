#include <doctest.h>

#include <algorithm>

#include "cyclo/closedform.hpp"
#include "cyclo/periods.hpp"

using namespace cyclo;

namespace {

std::vector<CycloInt> sorted_multiset(std::vector<CycloInt> v) {
    std::sort(v.begin(), v.end(),
              [](const CycloInt& a, const CycloInt& b) { return a.coords() < b.coords(); });
    return v;
}

PartitionSet parts_for(uint64_t p, unsigned s, unsigned m) {
    return partitions_for_instance(p, s, m, classify(p, s, m));
}

IntPoly lin(long root) { return IntPoly(std::vector<Int>{Int(-root), Int(1)}); }

} // namespace

TEST_CASE("classification") {
    CHECK(classify(3, 8, 4) == CaseTag::P3LinearSplit);
    CHECK(classify(3, 4, 4) == CaseTag::P3Exact4M4);
    CHECK(classify(3, 8, 5) == CaseTag::P3HalfSplit);
    CHECK(classify(3, 4, 3) == CaseTag::P3Order8Div4);
    CHECK(classify(3, 2, 3) == CaseTag::P3Order8Exact2);
    CHECK(classify(5, 8, 3) == CaseTag::P5LinearSplit);
    CHECK(classify(5, 8, 4) == CaseTag::P5HalfSplit);
    CHECK(classify(5, 4, 4) == CaseTag::P5QuarterSplit);
    CHECK(classify(5, 2, 3) == CaseTag::P5QuarterSplit);
    CHECK(classify(5, 4, 3) == CaseTag::P5HalfSplit);
    CHECK(classify(5, 4, 2) == CaseTag::P5Order4Div4);
    CHECK(classify(5, 2, 2) == CaseTag::P5Order4Exact2);
    CHECK(classify(5, 1, 2) == CaseTag::P5Order4Odd);
    CHECK(classify(13, 4, 4) == CaseTag::P5QuarterSplit);
    CHECK(classify(11, 4, 4) == CaseTag::P3Exact4M4);

    CHECK_THROWS_AS(classify(3, 4, 5), InvalidInstanceError); // ord2(80) = 4 < 5
    CHECK_THROWS_AS(classify(7, 2, 3), InvalidInstanceError); // 7 = 7 (mod 8)
    CHECK_THROWS_AS(classify(3, 2, 2), InvalidInstanceError); // out of scope family
    CHECK_THROWS_AS(classify(4, 2, 3), InvalidInputError);
    CHECK_THROWS_AS(classify(3, 0, 3), InvalidInputError);
    CHECK_THROWS_AS(classify(3, 2, 1), InvalidInputError);
}

TEST_CASE("order-16 spectrum over F_81 matches the oracle multiset") {
    auto parts = parts_for(3, 4, 4);
    Spectrum sp = spectrum(3, 4, 4, parts);
    CHECK(sp.total_multiplicity() == 16);

    auto closed = spectrum_as_cycloints(sp);
    REQUIRE(closed.has_value());
    FieldDesc f = FieldDesc::build(3, 4);
    auto oracle = reduced_periods(period_counts(f, 16));
    CHECK(sorted_multiset(*closed) == sorted_multiset(oracle));
}

TEST_CASE("factorization (3,4,4): the order-16 closed form") {
    auto fact = factorization(3, 4, 4, parts_for(3, 4, 4));
    FactoredPoly expected;
    expected.factors = {
        {lin(-15), 6},
        {lin(33), 4},
        {IntPoly(std::vector<Int>{Int(3249), Int(78), Int(1)}), 1},
        {IntPoly(std::vector<Int>{Int(1809), Int(-18), Int(1)}), 2},
    };
    expected.canonicalize();
    CHECK(fact.factors == expected.factors);
    CHECK(fact.to_string() == "(X-33)^4 (X+15)^6 ((X-9)^2+1728)^2 ((X+39)^2+1728)");
}

TEST_CASE("factorization equals oracle across small instances") {
    struct I {
        uint64_t p;
        unsigned s, m;
    };
    for (const I& inst : {I{3, 4, 4}, I{3, 2, 3}, I{3, 4, 3}, I{5, 4, 4}, I{5, 2, 3}, I{5, 4, 3},
                          I{5, 2, 2}, I{5, 4, 2}}) {
        CAPTURE(inst.p);
        CAPTURE(inst.s);
        CAPTURE(inst.m);
        auto parts = parts_for(inst.p, inst.s, inst.m);
        auto fact = factorization(inst.p, inst.s, inst.m, parts);
        FieldDesc f = FieldDesc::build(inst.p, inst.s);
        CHECK(fact.expand() == oracle_period_poly(f, 1u << inst.m));
    }
}

TEST_CASE("factorization (5,2,3): quartic with nested radical roots") {
    // C_2 = -1, D_2 = 2 from 5^{s/2} = 5 = 1 + 4, so
    // ((X-5)^2 - 80)^2 (((X+5)^2 + 220)^2 - 80 (X+15)^2)
    auto fact = factorization(5, 2, 3, parts_for(5, 2, 3));
    IntPoly quad(std::vector<Int>{Int(25 - 80), Int(-10), Int(1)});
    IntPoly a(std::vector<Int>{Int(245), Int(10), Int(1)});
    IntPoly b(std::vector<Int>{Int(15), Int(1)});
    IntPoly quartic = a * a - poly_scale(b * b, Int(80));
    FactoredPoly expected;
    expected.factors = {{quad, 2}, {quartic, 1}};
    expected.canonicalize();
    CHECK(fact.factors == expected.factors);
}

TEST_CASE("spectrum for nested-radical cases has no cyclotomic embedding") {
    Spectrum sp = spectrum(5, 4, 4, parts_for(5, 4, 4));
    CHECK_FALSE(spectrum_as_cycloints(sp).has_value());
    CHECK(sp.total_multiplicity() == 16);
}

TEST_CASE("order-4 odd-s family") {
    CHECK_THROWS_AS(factorization(5, 1, 2, parts_for(5, 1, 2)), InvalidInstanceError);
    CHECK_THROWS_AS(spectrum(5, 1, 2, parts_for(5, 1, 2)), InvalidInstanceError);
    // the oracle polynomial is wrapped as the single irreducible factor
    FieldDesc f = FieldDesc::build(5, 1);
    IntPoly pstar = oracle_period_poly(f, 4);
    auto fact = factorization_with_oracle(5, 1, 2, parts_for(5, 1, 2), pstar);
    REQUIRE(fact.factors.size() == 1);
    CHECK(fact.factors[0].second == 1);
    CHECK(fact.expand() == pstar);
    for (const auto& z : reduced_periods(period_counts(f, 4)))
        CHECK(eval_intpoly_at(pstar, z).is_zero());
}

TEST_CASE("diagonal counts from the closed form") {
    auto parts = parts_for(3, 4, 4);
    CHECK(counts_formula(3, 4, 4, 1, parts) == 1);
    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(counts_formula(3, 4, 4, 2, parts) == count_diagonal_convolution(f, 16, 2));

    auto parts5 = parts_for(5, 4, 4);
    FieldDesc f5 = FieldDesc::build(5, 4);
    auto periods5 = reduced_periods(period_counts(f5, 16));
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(counts_formula(5, 4, 4, n, parts5) == count_diagonal_charsum(f5, 16, n, periods5));
}

TEST_CASE("splitting counts") {
    CHECK(splitting_count(3, 4, 4) == 8);
    CHECK(splitting_count(3, 8, 4) == 16);
    CHECK(splitting_count(5, 4, 4) == 4);
    CHECK(splitting_count(5, 8, 4) == 8);
}

TEST_CASE("two-value semiprimitive form") {
    auto fact = semiprimitive_poly(3, 4, 5);
    FactoredPoly expected;
    expected.factors = {{lin(36), 1}, {lin(-9), 4}};
    expected.canonicalize();
    CHECK(fact.factors == expected.factors);
    CHECK(fact.total_degree() == 5);

    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(fact.expand() == oracle_period_poly(f, 5));

    // 8 never divides 3^v + 1
    CHECK_THROWS_AS(semiprimitive_poly(3, 4, 8), NotSemiprimitiveError);
    CHECK_THROWS_AS(semiprimitive_poly(3, 4, 7), InvalidInputError); // 7 does not divide 80
}

TEST_CASE("characteristic-2 family") {
    auto fact = example1_poly(4, 5);
    FactoredPoly expected;
    expected.factors = {{lin(4), 2}, {lin(-8), 1}};
    expected.canonicalize();
    CHECK(fact.factors == expected.factors);
    CHECK(fact.total_degree() == 3);

    FieldDesc f = FieldDesc::build(2, 4);
    CHECK(fact.expand() == oracle_period_poly(f, 3));

    // structurally valid big instance: q = 2^12, f = 13, e = 315
    auto big = example1_poly(12, 13);
    CHECK(big.total_degree() == 315);

    CHECK_THROWS_AS(example1_poly(4, 7), InvalidInstanceError);  // 7 does not divide 15
    CHECK_THROWS_AS(example1_poly(8, 17), InvalidInstanceError); // 2 not primitive mod 17
}

TEST_CASE("subfield-norm family") {
    auto fact = example2_poly(3, 4, 2);
    FactoredPoly expected;
    expected.factors = {{lin(81), 1}, {lin(-9), 9}};
    expected.canonicalize();
    CHECK(fact.factors == expected.factors);

    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(fact.expand() == oracle_period_poly(f, 10));

    // degenerate: ell = s gives e = 1 and P*_1 = X
    auto degen = example2_poly(3, 4, 4);
    REQUIRE(degen.factors.size() == 1);
    CHECK(degen.factors[0].first == IntPoly(std::vector<Int>{Int(0), Int(1)}));
    CHECK(degen.factors[0].second == 1);
    CHECK(reduced_periods(period_counts(f, 1))[0].is_zero());

    CHECK_THROWS_AS(example2_poly(3, 4, 3), InvalidInputError);
}

TEST_CASE("spectrum displays carry the table structure") {
    Spectrum sp = spectrum(3, 4, 4, parts_for(3, 4, 4));
    // the A_3 row with multiplicity 2 reads -3 q^{1/2} - 4 A_3 q^{1/4}
    bool found = false;
    for (const auto& e : sp.entries)
        if (e.multiplicity == 2 && sp.entry_display(e) == "-3*3^2 + 4*3^1") found = true;
    CHECK(found);
}
