#include "annulus/suites.hpp"
#include "common.hpp"

using namespace annulus;

TEST_CASE("facts of the (3,2) fixture") {
    auto r = suite_fixture_facts(test::m32());
    for (auto& f : r.failures) INFO(f);
    CHECK(r.pass);
}

TEST_CASE("small acceptance suites") {
    for (const Model* m : {&test::m11(), &test::m32()}) {
        CHECK(suite_band_dims(*m, {1, 3}, 2).pass);
        CHECK(suite_completion(*m, 20, 2, 99).pass);
        CHECK(suite_kcomplex(*m, 3, 4, 3, {1, 2}).pass);
    }
    CHECK(suite_id_gentle({&test::m11(), &test::m32()}, 5, 1, 10).pass);
}
