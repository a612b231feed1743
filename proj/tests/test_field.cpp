#include <random>

#include "annulus/field.hpp"
#include "common.hpp"

using namespace annulus;

TEST_CASE("field arithmetic mod 7") {
    CHECK(fadd(fe(5), fe(4)) == 2);
    CHECK(fsub(fe(2), fe(5)) == 4);
    CHECK(fmul(fe(3), fe(5)) == 1);
    CHECK(finv(3) == 5);
    CHECK(fnorm(-1) == 6);
    for (fe a = 1; a < 7; ++a) CHECK(fmul(a, finv(a)) == 1);
}

TEST_CASE("set_field rejects composites") {
    CHECK_THROWS(set_field(8));
    set_field(7);
    CHECK(field_char() == 7);
}

TEST_CASE("rank nullity and solve on random matrices") {
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        int r = 1 + rng() % 5, c = 1 + rng() % 5;
        Mat m(r, c);
        for (auto& x : m.a) x = rng() % 7;
        Mat N = nullspace(m);
        CHECK(rank(m) + N.c == c);
        if (N.c) CHECK((m * N).is_zero());
        Mat x(c, 1);
        for (auto& v : x.a) v = rng() % 7;
        Mat b = m * x;
        CHECK(m * solve(m, b) == b);
    }
}

TEST_CASE("inverse of an invertible matrix") {
    Mat m(2, 2);
    m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 3, m(1, 1) = 4;
    REQUIRE(is_invertible(m));
    CHECK(m * inverse(m) == Mat::identity(2));
    Mat s(2, 2);
    s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
    CHECK_FALSE(is_invertible(s));
}
