#include <algorithm>
#include <set>

#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

namespace {
const Surface s11{1, 1}, s32{3, 2};

bool internal_finite(const Surface& s, const Arc& a) { return a.is_finite() && is_internal(s, a); }

// every subset of size p+q of the finite arcs that validates
int brute_force_triangulations(const Surface& s, long bound) {
    std::vector<Arc> arcs;
    for (auto& a : enumerate_arcs(s, bound))
        if (internal_finite(s, a)) arcs.push_back(a);
    int n = (int)arcs.size(), k = s.p + s.q, found = 0;
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
        std::vector<Arc> sub;
        for (int i = 0; i < n; ++i)
            if (pick[i]) sub.push_back(arcs[i]);
        try {
            validate_triangulation(s, sub);
            ++found;
        } catch (const std::exception&) {
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return found;
}
}  // namespace

TEST_CASE("canonicalize_arc") {
    CHECK(canonicalize_arc(s32, Arc::bridging(3, 2)) == Arc::bridging(0, 0));
    CHECK_THROWS_AS(canonicalize_arc(s32, Arc::peripheral(Boundary::Outer, 0, 1)), ArcError);
    // a d = 1 loop is homotopic to the boundary segment, also for p = 1
    CHECK_THROWS_AS(canonicalize_arc(s11, Arc::peripheral(Boundary::Outer, 0, 1)), ArcError);
    CHECK(canonicalize_arc(s32, Arc::peripheral(Boundary::Outer, 4, 6)) == Arc::peripheral(Boundary::Outer, 1, 3));
}

TEST_CASE("crossing numbers") {
    CHECK(crossing_number(s11, Arc::bridging(0, 0), Arc::bridging(0, 2)) == 1);
    CHECK(crossing_number(s11, Arc::asymptotic(Boundary::Outer, 0, Spiral::Clockwise),
                          Arc::asymptotic(Boundary::Outer, 0, Spiral::Anticlockwise)) == kInfinite);
    for (const Model* m : {&m11(), &m32()}) {
        auto& arcs = m->g.arcs;
        for (auto& x : arcs)
            for (auto& y : arcs) CHECK(crossing_number(m->g.surf, x, y) == 0);
    }
}

TEST_CASE("crossing table agrees with the lift count and is symmetric") {
    for (const Surface& s : {s11, s32}) {
        auto arcs = enumerate_arcs(s, 1);
        for (auto& x : arcs)
            for (auto& y : arcs) {
                long c = crossing_number(s, x, y);
                CHECK(c == crossing_number(s, y, x));
                INFO(to_string(x), " vs ", to_string(y));
                CHECK(c == crossing_number_lifts(s, x, y));
            }
    }
}

TEST_CASE("crossings_in_3cycles_only") {
    auto& m = m11();
    CHECK(crossings_in_3cycles_only(m, Arc::bridging(0, 0), Arc::bridging(0, 1)));
    CHECK_FALSE(crossings_in_3cycles_only(m, Arc::bridging(0, 0), Arc::bridging(0, 2)));
    // (3,2) has an internal triangle, so some crossing pair meets only inside it
    auto& g = m32();
    auto arcs = enumerate_arcs(g.g.surf, 1);
    int found = 0;
    for (auto& x : arcs)
        for (auto& y : arcs)
            if (x.is_finite() && y.is_finite() && crossing_number(g.g.surf, x, y) > 0 &&
                crossings_in_3cycles_only(g, x, y))
                ++found;
    CHECK(found > 0);
}

TEST_CASE("validate_triangulation") {
    auto g = validate_triangulation(s11, {Arc::bridging(0, 0), Arc::bridging(0, 1)});
    CHECK(g.tris.size() == 2);
    CHECK_FALSE(g.has_internal_triangle());
    CHECK(m32().g.arcs.size() == 5);
    CHECK(m32().g.has_internal_triangle());
    CHECK_THROWS_AS(validate_triangulation(s11, {Arc::bridging(0, 0)}), WrongCount);
    CHECK_THROWS_AS(validate_triangulation(s11, {Arc::bridging(0, 0), Arc::bridging(0, 2)}), CrossingPair);
}

TEST_CASE("enumerate_arcs") {
    auto a = enumerate_arcs(s11, 0);
    std::set<Arc> got(a.begin(), a.end());
    std::set<Arc> want{Arc::bridging(0, 0),
                       Arc::asymptotic(Boundary::Outer, 0, Spiral::Clockwise),
                       Arc::asymptotic(Boundary::Outer, 0, Spiral::Anticlockwise),
                       Arc::asymptotic(Boundary::Inner, 0, Spiral::Clockwise),
                       Arc::asymptotic(Boundary::Inner, 0, Spiral::Anticlockwise),
                       Arc::band()};
    CHECK(got == want);
    for (const Surface& s : {s11, s32}) {
        auto all = enumerate_arcs(s, 2);
        CHECK(std::count_if(all.begin(), all.end(), [](const Arc& x) { return x.kind == Arc::Kind::Asymptotic; }) ==
              2 * (s.p + s.q));
    }
    auto b = enumerate_arcs(s32, 1);
    for (auto& x : m32().g.arcs) CHECK(std::find(b.begin(), b.end(), x) != b.end());
}

TEST_CASE("enumerate_triangulations") {
    auto ts = enumerate_triangulations(s11, 1);
    bool has_fixture = false;
    for (auto& t : ts) {
        CHECK(t.arcs.size() == 2);
        std::set<Arc> as(t.arcs.begin(), t.arcs.end());
        has_fixture |= as == std::set<Arc>{Arc::bridging(0, 0), Arc::bridging(0, 1)};
    }
    CHECK(has_fixture);
    for (auto& t : enumerate_triangulations(s32, 0)) CHECK(t.arcs.size() == 5);
    CHECK((int)enumerate_triangulations(s11, 1).size() == brute_force_triangulations(s11, 1));
    CHECK((int)enumerate_triangulations(s32, 0).size() == brute_force_triangulations(s32, 0));
}

TEST_CASE("maximal_cliques of a path graph") {
    std::vector<std::vector<char>> adj{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    auto c = maximal_cliques(adj);
    for (auto& x : c) std::sort(x.begin(), x.end());
    std::sort(c.begin(), c.end());
    CHECK(c == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
}
