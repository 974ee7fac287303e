#include <doctest.h>

#include "cyclo/codes.hpp"

using namespace cyclo;

namespace {

WeightEnumerator expect_81_16() {
    WeightEnumerator w;
    w.counts[0] = 1;
    w.counts[2] = 20;
    w.counts[3] = 20;
    w.counts[4] = 30;
    w.counts[5] = 10;
    return w;
}

} // namespace

TEST_CASE("build_code validation") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 16);
    CHECK(c.length == 5);
    CHECK(c.dim == 4);
    CHECK(c.e == 8);
    CHECK(c.m == 3);

    CodeSpec c2 = build_code(f, 1, 8);
    CHECK(c2.length == 10);
    CHECK(c2.e == 8);

    CHECK_THROWS_AS(build_code(f, 1, 5), InvalidInstanceError);  // gcd(5, 40) = 5
    CHECK_THROWS_AS(build_code(f, 3, 16), InvalidInstanceError); // 3 does not divide 4
    CHECK_THROWS_AS(build_code(f, 1, 7), InvalidInstanceError);  // 7 does not divide 80
    FieldDesc f7 = FieldDesc::build(7, 2);
    CHECK_THROWS_AS(build_code(f7, 1, 8), InvalidInstanceError); // 7 = 7 (mod 8)
}

TEST_CASE("zero codeword and weight bounds") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 16);
    CHECK(codeword_weight(f, c, f.zero()) == 0);
    for (uint64_t idx = 1; idx < 15; ++idx)
        CHECK(codeword_weight(f, c, f.from_index(idx)) <= c.length);
}

TEST_CASE("weights from periods, order-8 spectrum of F_81") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 16);
    CHECK(weight_from_period(c, Int(9)) == 3);
    CHECK(weight_from_period(c, Int(33)) == 2);
    CHECK(weight_from_period(c, Int(-15)) == 4);
    CHECK(weight_from_period(c, Int(-39)) == 5);
    CHECK_THROWS_AS(weight_from_period(c, Int(10)), InconsistencyError);
}

TEST_CASE("pointwise: counted weights equal period weights") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 16);
    auto eta = reduced_periods(period_counts(f, c.e));
    FieldElem rep = f.one();
    for (uint64_t j = 0; j < c.e; ++j) {
        CHECK(coset_index(f, c, rep) == j);
        CHECK(codeword_weight(f, c, rep) == weight_from_period(c, eta[j].rational_value()));
        rep = f.mul(rep, f.gamma());
    }
}

TEST_CASE("enumerator for the [5,4] ternary code, all routes") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 16);
    auto parts = partitions_for_instance(3, 4, c.m, classify(3, 4, c.m));

    WeightEnumerator closed = enumerator_closed_form(c, parts);
    CHECK(closed == expect_81_16());
    CHECK(closed.total() == 81);
    CHECK(closed.to_string() == "1 + 20*X^2 + 20*X^3 + 30*X^4 + 10*X^5");

    WeightEnumerator full = weight_distribution_bruteforce(f, c);
    CHECK_FALSE(full.sampled);
    CHECK(full.counts == closed.counts);

    BruteForceOptions rep_opt;
    rep_opt.mode = BruteForceMode::Representative;
    WeightEnumerator sampled = weight_distribution_bruteforce(f, c, rep_opt);
    CHECK(sampled.sampled);
    CHECK(sampled.counts == closed.counts);
}

TEST_CASE("total-weight identity on the [10,4] code") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 8);
    auto parts = partitions_for_instance(3, 4, c.m, classify(3, 4, c.m));
    WeightEnumerator closed = enumerator_closed_form(c, parts);
    WeightEnumerator full = weight_distribution_bruteforce(f, c);
    CHECK(closed.counts == full.counts);

    Int lhs = 0;
    for (const auto& [w, a] : closed.counts) lhs += a * Int(static_cast<unsigned long>(w));
    // each position is nonzero for q - q/p values of beta
    CHECK(lhs == Int(static_cast<unsigned long>(c.length)) * (81 - 27));
}

TEST_CASE("budget control") {
    FieldDesc f = FieldDesc::build(3, 4);
    CodeSpec c = build_code(f, 1, 8);
    BruteForceOptions opt;
    opt.budget = 10;
    opt.mode = BruteForceMode::Full;
    CHECK_THROWS_AS(weight_distribution_bruteforce(f, c, opt), BudgetError);
    opt.mode = BruteForceMode::Auto;
    CHECK(weight_distribution_bruteforce(f, c, opt).sampled);
}
