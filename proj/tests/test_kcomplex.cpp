#include "annulus/extensions.hpp"
#include "annulus/homalg.hpp"
#include "annulus/kcomplex.hpp"
#include "annulus/render.hpp"
#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

namespace {
StringComplexWindow window(const Model& m, const Word& w, int depth) {
    return string_complex(m.P, homotopy_string_of(m.P, w), depth);
}
}  // namespace

TEST_CASE("antipaths") {
    for (int a = 0; a < 2; ++a) {
        auto ap = antipath_from(m11().P, a);
        CHECK_FALSE(ap.periodic);
        CHECK(ap.arrows.size() == 1);
        CHECK(ap.at(1) == -1);
    }
    auto& P = m32().P;
    for (auto name : {"c", "d", "e"}) {
        auto ap = antipath_from(P, P.arrow_index(name));
        CHECK(ap.periodic);
        CHECK(ap.arrows.size() - ap.cycle_start == 3);
        for (int k = 0; k + 1 < 9; ++k) CHECK(P.in_rel(ap.at(k + 1), ap.at(k)));
    }
    CHECK_FALSE(antipath_from(P, P.arrow_index("f")).periodic);
}

TEST_CASE("homotopy strings") {
    auto& m = m32();
    auto bd = band_of(m);
    auto hb = homotopy_string_of(m.P, bd.word);
    CHECK(hb.band);
    CHECK(hb.core == bd.word);
    CHECK(hb.left.empty());
    CHECK(hb.right.empty());
    // the Kronecker algebra has no relations, so every tail has length at most one
    for (auto& x : enumerate_words(m11().P, 4)) {
        auto h = homotopy_string_of(m11().P, x);
        CHECK(h.left.arrows.size() <= 1);
        CHECK(h.right.arrows.size() <= 1);
    }
}

TEST_CASE("resolution of the Kronecker source simple") {
    auto& m = m11();
    auto X = window(m, Word::trivial(0), 2);
    CHECK(X.terms[0] == std::vector<int>{0});
    CHECK(X.terms[1] == std::vector<int>{1, 1});
    CHECK(X.terms[2].empty());
    auto c = check_complex(m.P, X, simple(m.P, 0));
    CHECK(c.ok());
}

TEST_CASE("string complexes resolve their modules") {
    for (const Model* m : {&m11(), &m32()}) {
        for (auto& x : enumerate_words(m->P, 5)) {
            auto X = window(*m, x, 4);
            CHECK(differential_squares_to_zero(m->P, X));
            auto c = check_complex(m->P, X, string_module(m->P, x));
            INFO(to_string(m->P, x));
            CHECK(c.ok());
        }
    }
}

TEST_CASE("band complexes") {
    for (const Model* m : {&m11(), &m32()}) {
        auto bd = band_of(*m);
        for (fe l : {1u, 2u}) {
            auto X1 = band_complex(m->P, bd.word, l, 1, 3);
            for (int n = 1; n <= 3; ++n) {
                auto X = band_complex(m->P, bd.word, l, n, 3);
                CHECK(check_complex(m->P, X, band_module(m->P, bd.band, l, n)).ok());
                for (int k = 0; k <= 3; ++k) CHECK(X.terms[k].size() == n * X1.terms[k].size());
            }
        }
        CHECK_THROWS(band_complex(m->P, bd.word, 0, 1, 3));
    }
}

TEST_CASE("standard maps between the Kronecker simples") {
    auto& m = m11();
    auto S1 = window(m, Word::trivial(0), 3), S2 = window(m, Word::trivial(1), 3);
    auto maps = find_standard_maps(m.P, S1, S2);
    CHECK(maps.basis.size() == 2);
    ExtOracle E(m.P);
    CHECK((int)maps.basis.size() == E.ext1(simple(m.P, 0), simple(m.P, 1)));
    // projective source
    CHECK(find_standard_maps(m.P, S2, S1).basis.empty());
    auto shallow = window(m, Word::trivial(0), 1);
    CHECK_THROWS_AS(find_standard_maps(m.P, shallow, S2), WindowTooShallow);
}

TEST_CASE("standard map count equals Ext") {
    for (const Model* m : {&m11(), &m32()}) {
        ExtOracle E(m->P);
        auto words = enumerate_words(m->P, 3);
        std::vector<StringComplexWindow> ws;
        for (auto& x : words) ws.push_back(window(*m, x, 3));
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = 0; j < words.size(); ++j) {
                auto maps = find_standard_maps(m->P, ws[i], ws[j]);
                CHECK((int)maps.basis.size() ==
                      E.ext1(string_module(m->P, words[i]), string_module(m->P, words[j])));
            }
    }
}

TEST_CASE("lifting Ext vanishing along the tube") {
    for (const Model* m : {&m11(), &m32()}) {
        ExtOracle E(m->P);
        auto bd = band_of(*m);
        for (auto& x : enumerate_words(m->P, 3))
            for (fe l : {1u, 2u}) CHECK(lift_predicate_check(E, x, bd.word, l, 2));
        // arcs missing the band give zero on both sides; crossings inside a 3-cycle also give zero
        for (auto& x : enumerate_words(m->P, 3)) {
            auto d = descriptor_of_word(*m, x);
            bool crosses = crossing_number(m->g.surf, d.arc, Arc::band()) > 0;
            Rep S = string_module(m->P, x), B = band_module(m->P, bd.band, 1, 2);
            bool zero = E.ext1(S, B) == 0 && E.ext1(B, S) == 0;
            if (!crosses) CHECK(zero);
            CHECK(zero == ext_vanishing_pair(*m, d, band_descriptor(1, 2)));
        }
    }
}

TEST_CASE("renderers") {
    auto& m = m11();
    auto X = window(m, Word::trivial(0), 2);
    CHECK(render_ascii(m.P, X).find("P(2) -b-> P(1) <-a- P(2)") != std::string::npos);
    auto svg = render_svg(m.P, X);
    CHECK(svg.rfind("<svg", 0) == 0);
    auto cover = cover_svg(m32(), {Arc::peripheral(Boundary::Outer, 1, 5)});
    CHECK(cover.find("<svg") != std::string::npos);
    CHECK(cover.find("</svg>") != std::string::npos);
}
