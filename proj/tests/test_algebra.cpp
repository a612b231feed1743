#include <set>

#include "annulus/homalg.hpp"
#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

namespace {
std::vector<Path> all_paths(const Presentation& P) { return enumerate_path_basis(P); }
}  // namespace

TEST_CASE("quiver of the (1,1) triangulation is the Kronecker quiver") {
    auto& P = m11().P;
    CHECK(P.n == 2);
    REQUIRE(P.arrows.size() == 2);
    CHECK(P.arrows[0].src == P.arrows[1].src);
    CHECK(P.arrows[0].tgt == P.arrows[1].tgt);
    CHECK(P.rel.empty());
    CHECK(check_gentle(P));
}

TEST_CASE("quiver of the (3,2) fixture") {
    auto& P = m32().P;
    CHECK(P.n == 5);
    std::set<std::string> names;
    for (auto& a : P.arrows) names.insert(a.name);
    CHECK(names == std::set<std::string>{"c", "d", "e", "f", "g", "h"});
    CHECK(P.rel.size() == 3);
    CHECK(check_gentle(P));
    CHECK(P.n == m32().g.surf.p + m32().g.surf.q);
}

TEST_CASE("check_gentle") {
    Presentation cyc;
    cyc.n = 3;
    cyc.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 2, 0}};
    CHECK_FALSE(check_gentle(cyc));
    Presentation pt;
    pt.n = 1;
    CHECK(check_gentle(pt));
    CHECK_THROWS_AS(enumerate_path_basis(cyc), NonFiniteDimensional);
}

TEST_CASE("path basis") {
    auto B = all_paths(m11().P);
    CHECK(B.size() == 4);
    Presentation pts;
    pts.n = 3;
    auto T = all_paths(pts);
    CHECK(T.size() == 3);
    for (auto& p : T) CHECK(p.arrows.empty());
    for (const Model* m : {&m11(), &m32()}) CHECK((int)all_paths(m->P).size() == regular_rep(m->P).total());
    CHECK(all_paths(m32().P).size() == 21);
}

TEST_CASE("annihilators of words") {
    for (const Model* m : {&m11(), &m32()}) {
        auto& P = m->P;
        auto B = all_paths(P);
        CHECK(annihilator_of_words(P, {}).paths.size() == B.size());
        for (int i = 0; i < P.n; ++i) {
            auto J = annihilator_of_words(P, {Word::trivial(i)});
            CHECK(J.paths.size() == B.size() - 1);
            CHECK_FALSE(J.contains(Path{i, {}}));
            CHECK(J == annihilator_linear(P, {simple(P, i)}));
        }
    }
    auto& m = m32();
    std::vector<Word> ws{test::w(m, "h-dgfe"), test::w(m, "c-gf")};
    CHECK(annihilator_of_words(m.P, ws) ==
          annihilator_linear(m.P, {string_module(m.P, ws[0]), string_module(m.P, ws[1])}));
}

TEST_CASE("quotient presentations") {
    auto& P = m32().P;
    auto Q0 = quotient_presentation(P, IdealBasis{});
    CHECK(Q0.alive_vertex_count() == 5);
    CHECK(Q0.alive_arrow_count() == 6);
    auto full = annihilator_of_words(P, {});
    auto Q1 = quotient_presentation(P, full);
    CHECK(Q1.alive_vertex_count() == 0);
    CHECK(Q1.alive_arrow_count() == 0);
    // a length-two path in ann whose arrows act nontrivially
    auto& m = m32();
    auto J = annihilator_of_words(P, {test::w(m, "e1"), test::w(m, "e2"), test::w(m, "e3"), test::w(m, "fc-g")});
    CHECK_FALSE(degree_one_generated(P, J));
    CHECK_THROWS_AS(quotient_presentation(P, J), IdealNotDegreeOne);
}

TEST_CASE("cut_peripheral") {
    auto B = cut_peripheral(m32().P, m32().g);
    CHECK(B.alive_vertex_count() == 3);
    CHECK(check_gentle(B));
    CHECK(B.alive_vertex_count() == band_of(m32()).s);
    auto K = cut_peripheral(m11().P, m11().g);
    CHECK(K.alive_vertex_count() == 2);
    CHECK(K.alive_arrow_count() == 2);
}

TEST_CASE("dot output") {
    auto d = to_dot(m11().P);
    CHECK(d.find("digraph") != std::string::npos);
    CHECK(d.find("->") != std::string::npos);
}
