#include <doctest.h>

#include <random>
#include <set>

#include "cyclo/ffield.hpp"

using namespace cyclo;

namespace {

// test-side irreducibility oracle: exhaustive trial division by every monic
// polynomial of degree 1..s/2 over Z_p
bool divides_zp(const std::vector<uint64_t>& d, std::vector<uint64_t> r, uint64_t p) {
    while (r.size() >= d.size()) {
        uint64_t lead = r.back(); // d is monic
        for (size_t j = 0; j < d.size(); ++j) {
            size_t pos = r.size() - d.size() + j;
            r[pos] = (r[pos] + p - (lead * d[j]) % p) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) return true;
    }
    return false;
}

bool irreducible_by_trial_division(const std::vector<Residue>& modulus, uint64_t p) {
    std::vector<uint64_t> f(modulus.begin(), modulus.end());
    unsigned s = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= s; ++d) {
        uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (uint64_t k = 0; k < count; ++k) {
            std::vector<uint64_t> div(d + 1);
            uint64_t t = k;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = t % p;
                t /= p;
            }
            div[d] = 1;
            if (divides_zp(div, f, p)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("build F_3") {
    FieldDesc f = FieldDesc::build(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.modulus().size() == 2);
    // gamma = 2, the only generator of a group of order 2
    CHECK(f.gamma().c == std::vector<Residue>{2});
    CHECK(f.pow(f.gamma(), uint64_t(2)).c == f.one().c);
}

TEST_CASE("build F_81 deterministically") {
    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(f.q() == 81);
    CHECK(irreducible_by_trial_division(f.modulus(), 3));
    // generator order checked by exponentiation against each maximal divisor
    CHECK(f.pow(f.gamma(), uint64_t(80)).c == f.one().c);
    CHECK(f.pow(f.gamma(), uint64_t(40)).c != f.one().c);
    CHECK(f.pow(f.gamma(), uint64_t(16)).c != f.one().c);

    FieldDesc g = FieldDesc::build(3, 4);
    CHECK(f.modulus() == g.modulus());
    CHECK(f.gamma() == g.gamma());
}

TEST_CASE("build F_625") {
    FieldDesc f = FieldDesc::build(5, 4);
    CHECK(f.q() == 625);
    CHECK(irreducible_by_trial_division(f.modulus(), 5));
    CHECK(f.pow(f.gamma(), uint64_t(624)).c == f.one().c);
    for (uint64_t d : {312ull, 208ull, 48ull}) // 624 / {2, 3, 13}
        CHECK(f.pow(f.gamma(), d).c != f.one().c);
}

TEST_CASE("build F_16 (characteristic 2)") {
    FieldDesc f = FieldDesc::build(2, 4);
    CHECK(f.q() == 16);
    // x^4 + x + 1 is the first irreducible in low-coefficient-first order
    CHECK(f.modulus() == std::vector<Residue>{1, 1, 0, 0, 1});
    CHECK(f.gamma() == f.from_index(2)); // the element x
}

TEST_CASE("build_field input validation") {
    CHECK_THROWS_AS(FieldDesc::build(4, 2), InvalidInputError);
    CHECK_THROWS_AS(FieldDesc::build(3, 0), InvalidInputError);
    CHECK_THROWS_AS(FieldDesc::build(3, 64), BudgetError);
}

TEST_CASE("multiplication, powers, inverses") {
    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(f.pow(f.zero(), uint64_t(5)).is_zero());
    CHECK(f.pow(f.gamma(), uint64_t(0)).c == f.one().c);
    CHECK(f.mul(f.gamma(), f.pow(f.gamma(), f.q() - 2)).c == f.one().c);
    CHECK(f.mul(f.gamma(), f.inverse(f.gamma())).c == f.one().c);
    CHECK_THROWS_AS(f.inverse(f.zero()), InvalidInputError);
}

TEST_CASE("generator powers enumerate the multiplicative group") {
    FieldDesc f = FieldDesc::build(3, 4);
    std::set<uint64_t> seen;
    FieldElem cur = f.one();
    for (uint64_t k = 0; k + 1 < f.q_u64(); ++k) {
        seen.insert(f.index_of(cur));
        cur = f.mul(cur, f.gamma());
    }
    CHECK(seen.size() == 80);
    CHECK(cur.c == f.one().c);
}

TEST_CASE("trace properties") {
    FieldDesc f = FieldDesc::build(3, 4);
    CHECK(f.trace(f.zero()) == 0);
    CHECK(f.trace(f.one()) == 4 % 3); // Tr(1) = s mod p

    // trace agrees with the Frobenius-orbit definition
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        FieldElem a = f.from_index(rng() % f.q_u64());
        FieldElem acc = a, cur = a;
        for (unsigned j = 1; j < f.s(); ++j) {
            cur = f.frobenius(cur);
            acc = f.add(acc, cur);
        }
        for (unsigned j = 1; j < f.s(); ++j) CHECK(acc.c[j] == 0);
        CHECK(acc.c[0] == f.trace(a));
    }

    // additive, exhaustively over all pairs
    {
        std::vector<Residue> tr(f.q_u64());
        for (uint64_t i = 0; i < f.q_u64(); ++i) tr[i] = f.trace(f.from_index(i));
        for (uint64_t i = 0; i < f.q_u64(); ++i)
            for (uint64_t j = i; j < f.q_u64(); ++j) {
                FieldElem sum = f.add(f.from_index(i), f.from_index(j));
                CHECK((tr[i] + tr[j]) % 3 == f.trace(sum));
            }
    }

    // balanced: each trace value hit q/p times
    std::vector<uint64_t> hist(3, 0);
    for (uint64_t i = 0; i < f.q_u64(); ++i) ++hist[f.trace(f.from_index(i))];
    CHECK(hist == std::vector<uint64_t>{27, 27, 27});
}

TEST_CASE("trace balanced on F_625") {
    FieldDesc f = FieldDesc::build(5, 4);
    std::vector<uint64_t> hist(5, 0);
    for (uint64_t i = 0; i < f.q_u64(); ++i) ++hist[f.trace(f.from_index(i))];
    for (uint64_t c = 0; c < 5; ++c) CHECK(hist[c] == 125);
}

TEST_CASE("relative trace") {
    FieldDesc f = FieldDesc::build(3, 4);
    CHECK_FALSE(f.rel_trace_nonzero(2, f.zero()));
    CHECK_THROWS_AS(f.rel_trace_nonzero(3, f.one()), InvalidInputError);

    // ell = s reduces to a nonzero test
    for (uint64_t i = 0; i < f.q_u64(); ++i)
        CHECK(f.rel_trace_nonzero(4, f.from_index(i)) == !f.from_index(i).is_zero());

    // ell = 1 agrees with the absolute trace
    for (uint64_t i = 0; i < f.q_u64(); ++i)
        CHECK(f.rel_trace_nonzero(1, f.from_index(i)) == (f.trace(f.from_index(i)) != 0));
}

TEST_CASE("RelTraceMap matches the direct computation") {
    FieldDesc f = FieldDesc::build(3, 6);
    for (unsigned ell : {1u, 2u, 3u, 6u}) {
        RelTraceMap rt(f, ell);
        for (uint64_t i = 0; i < f.q_u64(); i += 5)
            CHECK(rt.is_nonzero_at(f.from_index(i)) == f.rel_trace_nonzero(ell, f.from_index(i)));
    }
}

TEST_CASE("trace power table") {
    FieldDesc f = FieldDesc::build(3, 4);
    auto table = f.trace_power_table(f.gamma());
    REQUIRE(table.size() == 80);
    FieldElem cur = f.one();
    for (uint64_t t = 0; t < 80; ++t) {
        CHECK(table[t] == f.trace(cur));
        cur = f.mul(cur, f.gamma());
    }
    CHECK_THROWS_AS(f.trace_power_table(f.one()), InconsistencyError);
}

TEST_CASE("next generator differs but generates") {
    FieldDesc f = FieldDesc::build(3, 4);
    FieldElem g2 = f.next_generator_after(f.gamma());
    CHECK(g2 != f.gamma());
    CHECK(f.is_generator(g2));
}
