#include <set>

#include "annulus/cosilting.hpp"
#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

namespace {
using K = ModuleDescriptor::Kind;

bool has_kind(const CosiltingDescriptor& d, K k) {
    for (auto& x : d.family)
        if (x.kind == k) return true;
    return false;
}
}  // namespace

TEST_CASE("family of the triangulation itself") {
    for (const Model* m : {&m11(), &m32()}) {
        auto t = make_partial(*m, m->g.arcs);
        CHECK_FALSE(t.strict);
        auto d = family_of(*m, t);
        for (auto& x : d.family) CHECK(x.kind == K::Zero);
        CHECK(d.ann.paths.size() == enumerate_path_basis(m->P).size());
        auto rep = verify_cosilting_finite(*m, t, 4, 2);
        CHECK(rep.ok());
    }
}

TEST_CASE("incompatible arcs are rejected") {
    auto& m = m11();
    CHECK_THROWS(make_partial(m, {Arc::bridging(0, 0), Arc::bridging(0, 2)}));
}

TEST_CASE("enumerated asymptotic triangulations") {
    for (const Model* m : {&m11(), &m32()}) {
        long bound = m == &m11() ? 2 : 1;
        auto ts = enumerate_asymptotic_triangulations(*m, bound);
        std::set<std::vector<Arc>> seen;
        int strict = 0;
        for (auto& t : ts) {
            CHECK(seen.insert(t.T).second);
            if (t.strict) {
                ++strict;
                CHECK(t.parameter_slot);
                for (auto& a : t.T) {
                    CHECK(a.kind != Arc::Kind::Bridging);
                    CHECK(a.kind != Arc::Kind::Band);
                }
            }
        }
        CHECK(strict > 0);
        for (auto& g : enumerate_triangulations(m->g.surf, bound)) {
            std::vector<Arc> arcs = g.arcs;
            std::sort(arcs.begin(), arcs.end());
            bool found = false;
            for (auto& t : ts) found |= !t.strict && t.T == arcs;
            CHECK(found);
        }
    }
}

TEST_CASE("rigid systems") {
    auto& m = m11();
    for (auto& t : enumerate_asymptotic_triangulations(m, 2)) {
        auto d = family_of(m, t);
        CHECK(is_rigid_system(m, d.family, d.quotient));
        CHECK(is_maximal_rigid(m, d.family, d.quotient, 2));
        if (t.strict) CHECK(has_kind(d, K::Generic));
    }
    auto& P = m.P;
    auto b = band_descriptor(1, 1);
    CHECK_FALSE(is_rigid_system(m, {b, b}, P));
    auto x = descriptor_of_arc(m, Arc::bridging(0, 2)), y = descriptor_of_arc(m, Arc::bridging(0, -1));
    REQUIRE(crossing_number(m.g.surf, x.arc, y.arc) > 0);
    CHECK_FALSE(is_rigid_system(m, {x, y}, P));
    CHECK_FALSE(is_maximal_rigid(m, {}, P, 2));
}

TEST_CASE("completion of partial triangulations") {
    for (const Model* m : {&m11(), &m32()}) {
        auto s = complete_partial(*m, make_partial(*m, {}), 3);
        std::vector<Arc> gamma = m->g.arcs;
        std::sort(gamma.begin(), gamma.end());
        CHECK(s.T == gamma);
        auto one = make_partial(*m, {Arc::asymptotic(Boundary::Outer, 0, Spiral::Clockwise)});
        auto c = complete_partial(*m, one, 3);
        CHECK(c.strict);
        for (auto& a : c.T) CHECK(a.kind != Arc::Kind::Bridging);
        CHECK(family_of(*m, c).ann == family_of(*m, one).ann);
        // a proper partial triangulation is not maximal
        auto part = make_partial(*m, {m->g.arcs[0]});
        auto d = family_of(*m, part);
        if (d.quotient.alive_vertex_count() > 0) CHECK_FALSE(is_maximal_rigid(*m, d.family, d.quotient, 3));
    }
}

TEST_CASE("finite cosilting modules on (1,1)") {
    auto& m = m11();
    int checked = 0, dropped = 0;
    for (auto& t : enumerate_asymptotic_triangulations(m, 2)) {
        if (t.strict) continue;
        auto rep = verify_cosilting_finite(m, t, 5, 2);
        CHECK(rep.ok());
        ++checked;
        // dropping an arc breaks maximality
        // dropping an arc whose module survives in the smaller quotient breaks maximality
        for (size_t k = 0; k < t.T.size(); ++k) {
            if (m.g.index_of(t.T[k]) >= 0) continue;
            PartialAsympTriangulation u = t;
            u.T.erase(u.T.begin() + k);
            auto Q = family_of(m, u).quotient;
            if (!descriptor_over(m, Q, descriptor_of_arc(m, t.T[k]))) continue;
            CHECK_FALSE(verify_cosilting_finite(m, u, 5, 2).maximal);
            ++dropped;
        }
    }
    CHECK(checked > 0);
    CHECK(dropped > 0);
}

TEST_CASE("torsion pairs") {
    auto& m = m11();
    auto tests = test_modules(m, m.P, 4);
    REQUIRE(!tests.empty());
    auto z = torsion_pair_of(m.P, zero_rep(m.P), tests);
    CHECK(z.X.size() == tests.size());
    CHECK(z.Y.empty());
    std::vector<Rep> inj;
    for (int i = 0; i < m.P.n; ++i) inj.push_back(injective_of_vertex(m.P, i));
    auto c = torsion_pair_of(m.P, direct_sum(m.P, inj), tests);
    CHECK(c.X.empty());
    CHECK(c.Y.size() == tests.size());
}

TEST_CASE("arrows and vertices of the annihilator read off the arcs") {
    auto& m = m32();
    int seen = 0;
    for (auto& t : enumerate_asymptotic_triangulations(m, 1)) {
        auto d = family_of(m, t);
        auto crit = arrow_vertex_ann_criterion(m, t);
        CHECK(crit == degree_le1(d.ann));
        for (auto& a : t.T) {
            int i = m.g.index_of(a);
            if (i < 0) continue;
            CHECK(crit.contains(Path{i, {}}));
            for (int k = 0; k < (int)m.P.arrows.size(); ++k)
                if (m.P.arrows[k].src == i || m.P.arrows[k].tgt == i) CHECK(crit.contains(Path{m.P.arrows[k].src, {k}}));
        }
        ++seen;
    }
    CHECK(seen > 100);
}
