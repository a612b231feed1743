#include <algorithm>

#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

namespace {
std::string str(const Model& m, const Arc& a) {
    auto s = string_of_arc(m, a);
    return s.in_triangulation ? "@" : to_string(m.P, s.word);
}
const Arc alpha = Arc::asymptotic(Boundary::Outer, 1, Spiral::Anticlockwise);
const Arc alpha_inner = Arc::asymptotic(Boundary::Inner, 0, Spiral::Anticlockwise);
}  // namespace

TEST_CASE("strings of the (3,2) fixture arcs") {
    auto& m = m32();
    CHECK(str(m, Arc::peripheral(Boundary::Outer, 1, 5)) == "h-dgfe");
    CHECK(str(m, alpha) == "(c-gf)*e");
    CHECK(str(m, alpha_inner) == "(gfc-)*");
    for (auto& a : m.g.arcs) CHECK(string_of_arc(m, a).in_triangulation);
    CHECK(to_string(m.P, band_of(m).word) == "(c-gf)^Z");
}

TEST_CASE("arc_of_string round trip") {
    for (const Model* m : {&m11(), &m32()}) {
        for (auto& w : enumerate_words(m->P, 8)) {
            Arc a = arc_of_string(*m, w);
            auto back = string_of_arc(*m, a);
            REQUIRE_FALSE(back.in_triangulation);
            CHECK(canonical_finite(m->P, back.word) == canonical_finite(m->P, w));
        }
    }
    auto& m = m32();
    CHECK(arc_of_string(m, test::w(m, "h-dgfe")) == Arc::peripheral(Boundary::Outer, 1, 5));
}

TEST_CASE("trivial word crosses exactly its own arc") {
    for (const Model* m : {&m11(), &m32()}) {
        for (int i = 0; i < m->P.n; ++i) {
            Arc a = arc_of_string(*m, Word::trivial(i));
            for (int j = 0; j < (int)m->g.arcs.size(); ++j)
                CHECK(crossing_number(m->g.surf, a, m->g.arcs[j]) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("asymptotic classification") {
    auto& m = m32();
    CHECK(classify_asymptotic(m.P, string_of_arc(m, alpha).word) == Asymptotic::Contracting);
    CHECK(classify_asymptotic(m.P, string_of_arc(m, alpha_inner).word) == Asymptotic::Expanding);
    // reversing the spiral inverts the period
    for (auto& a : enumerate_arcs(m.g.surf, 0)) {
        if (a.kind != Arc::Kind::Asymptotic) continue;
        Arc b = a;
        b.spiral = a.spiral == Spiral::Clockwise ? Spiral::Anticlockwise : Spiral::Clockwise;
        CHECK(classify_asymptotic(m.P, string_of_arc(m, a).word) !=
              classify_asymptotic(m.P, string_of_arc(m, b).word));
    }
}

TEST_CASE("truncation of an N-string") {
    auto& m = m32();
    Word al = string_of_arc(m, alpha).word;
    auto t0 = truncate(m, al, 0);
    CHECK(t0.word == Word::trivial(al.start));
    CHECK(to_string(m.P, truncate(m, al, 3).word) == "gfe");
    for (size_t n = 0; n < 8; ++n) {
        auto t = truncate(m, al, n);
        CHECK(t.word.length() == n);
        CHECK(canonical_finite(m.P, string_of_arc(m, t.arc).word) == canonical_finite(m.P, t.word));
    }
}

TEST_CASE("truncations approximate crossings of asymptotic arcs") {
    // the closing segment of a truncation lies in one triangle, so a peripheral arc meets it at most once
    for (const Model* m : {&m11(), &m32()}) {
        auto& s = m->g.surf;
        auto arcs = enumerate_arcs(s, 0);
        for (auto& a : arcs) {
            if (a.kind != Arc::Kind::Asymptotic) continue;
            Word al = string_of_arc(*m, a).word;
            for (auto& d : arcs) {
                long c = crossing_number(s, a, d);
                INFO(to_string(a), " vs ", to_string(d));
                if (d.kind == Arc::Kind::Peripheral) {
                    long lo = kInfinite;
                    for (size_t n = 6; n <= 20; ++n) {
                        long cn = crossing_number(s, truncate(*m, al, n).arc, d);
                        CHECK((cn == c || cn == c + 1));
                        lo = std::min(lo, cn);
                    }
                    CHECK(lo == c);
                }
                if (d.kind == Arc::Kind::Asymptotic && c == kInfinite) {
                    // finite truncations meet d more and more often
                    long prev = -1, first = -1;
                    for (size_t n = 6; n <= 30; ++n) {
                        auto t = truncate(*m, al, n);
                        if (t.arc.kind != Arc::Kind::Peripheral) {
                            CHECK(crossing_number(s, t.arc, d) == kInfinite);
                            continue;
                        }
                        long cn = crossing_number(s, t.arc, d);
                        CHECK(cn >= prev);
                        if (first < 0) first = cn;
                        prev = cn;
                    }
                    if (first >= 0) CHECK(prev >= first + 3);
                }
            }
        }
    }
}

TEST_CASE("band data") {
    auto b32 = band_of(m32());
    CHECK(to_string(m32().P, b32.band) == "c-gf");
    CHECK(b32.i0 == 0);
    CHECK(b32.s == 3);
    CHECK(band_of(m11()).s == 2);
}

TEST_CASE("factorize") {
    auto& m = m32();
    auto runs = factorize(test::w(m, "h-dgfe"));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].direct);
    CHECK(to_string(m.P, runs[0].letters) == "dgfe");
    CHECK_FALSE(runs[1].direct);
    CHECK(factorize(test::w(m, "dgf")).size() == 1);
    for (const Model* g : {&m11(), &m32()}) {
        for (auto& x : enumerate_words(g->P, 6)) {
            std::vector<Letter> cat;
            for (auto& r : factorize(x)) {
                for (auto& l : r.letters) CHECK(l.inv != r.direct);
                cat.insert(cat.end(), r.letters.begin(), r.letters.end());
            }
            CHECK(cat == x.pre);
        }
    }
}

TEST_CASE("word parsing and validity") {
    for (const Model* g : {&m11(), &m32()})
        for (auto& x : enumerate_words(g->P, 6)) {
            CHECK(is_valid(g->P, x));
            CHECK(parse_word(g->P, to_string(g->P, x)) == x);
        }
    auto& m = m32();
    CHECK_THROWS_AS(parse_word(m.P, "ce"), WordError);  // ce lies in I
    CHECK_THROWS_AS(parse_word(m.P, "zz"), WordError);
    CHECK(inverse(m.P, inverse(m.P, test::w(m, "h-dgfe"))) == test::w(m, "h-dgfe"));
}
