#include <catch2/catch_amalgamated.hpp>

#include "insdel/gf.hpp"
#include "insdel/rng.hpp"

using namespace insdel;

TEST_CASE("field axioms hold on sampled triples") {
    for (int q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 64, 101, 256}) {
        GaloisField f(q);
        CHECK(f.size() == q);
        Rng rng(q);
        for (int iter = 0; iter < 200; ++iter) {
            const int a = static_cast<int>(rng.below(q));
            const int b = static_cast<int>(rng.below(q));
            const int c = static_cast<int>(rng.below(q));
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, 0) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.mul(f.inv(a), a) == 1);
            }
            CHECK(f.sub(f.add(a, b), b) == a);
        }
        // the multiplicative group is cyclic of order q-1: spot-check pow
        for (int a = 1; a < std::min(q, 12); ++a) CHECK(f.pow(a, q - 1) == 1);
    }
}

TEST_CASE("prime field arithmetic is plain modular arithmetic") {
    GaloisField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.mul(5, 4) == 6);
    CHECK(f.neg(3) == 4);
    CHECK(f.inv(3) == 5);
}

TEST_CASE("gf(4) characteristic two behavior") {
    GaloisField f(4);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 2);
    for (int a = 0; a < 4; ++a) CHECK(f.add(a, a) == 0);
}

TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(12), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(0), std::invalid_argument);
}

TEST_CASE("element range checks") {
    GaloisField f(8);
    CHECK_THROWS_AS(f.add(8, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.mul(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}
