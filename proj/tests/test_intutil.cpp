#include <doctest.h>

#include "cyclo/intutil.hpp"

using namespace cyclo;

TEST_CASE("perfect squares") {
    uint64_t r = 0;
    CHECK(is_perfect_square_u64(0, r));
    CHECK(r == 0);
    CHECK(is_perfect_square_u64(1, r));
    CHECK(is_perfect_square_u64(576, r));
    CHECK(r == 24);
    CHECK_FALSE(is_perfect_square_u64(2, r));
    CHECK_FALSE(is_perfect_square_u64(575, r));
    // residues mod 16 that the filter must not reject
    for (uint64_t n = 1; n < 2000; ++n) {
        uint64_t root = 0;
        CHECK(is_perfect_square_u64(n * n, root));
        CHECK(root == n);
    }
}

TEST_CASE("ord2 and prime factors") {
    CHECK(ord2_u64(80) == 4);
    CHECK(ord2_u64(1) == 0);
    CHECK(ord2(Int(6560)) == 5);
    CHECK(distinct_prime_factors_u64(80) == std::vector<uint64_t>{2, 5});
    CHECK(distinct_prime_factors_u64(6560) == std::vector<uint64_t>{2, 5, 41});
    CHECK(distinct_prime_factors_u64(97) == std::vector<uint64_t>{97});
}

TEST_CASE("div_exact") {
    CHECK(div_exact(Int(84), Int(12), "t") == 7);
    CHECK_THROWS_AS(div_exact(Int(85), Int(12), "t"), InconsistencyError);
    CHECK_THROWS_AS(div_exact(Int(85), Int(0), "t"), InconsistencyError);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order_u64(3, 5) == 4);  // 3,4,2,1
    CHECK(multiplicative_order_u64(2, 5) == 4);
    CHECK(multiplicative_order_u64(2, 13) == 12); // 2 is a primitive root mod 13
    CHECK(multiplicative_order_u64(3, 80) == 4);  // 3^4 = 81 = 1 mod 80
}

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(28561 / 13 / 13 / 13)); // 13
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(15));
}
