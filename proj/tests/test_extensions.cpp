#include "annulus/extensions.hpp"
#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

TEST_CASE("no overlap between distinct simples") {
    auto& m = m11();
    CHECK(find_overlap_extensions(m, Word::trivial(1), Word::trivial(0)).empty());
    CHECK(find_overlap_extensions(m, Word::trivial(0), Word::trivial(1)).empty());
}

TEST_CASE("arrow extensions of the Kronecker simples") {
    auto& m = m11();
    auto ws = find_arrow_extensions(m, Word::trivial(1), Word::trivial(0));
    REQUIRE(ws.size() == 2);
    for (auto& w : ws) {
        REQUIRE(w.middle.size() == 1);
        CHECK(w.middle[0].length() == 1);
        auto ses = standard_extension_to_ses(m, w);
        CHECK_FALSE(ses.symbolic);
        CHECK(ses.non_split);
        CHECK(ses.middle.dim == std::vector<int>{1, 1});
    }
    CHECK(to_string(m.P, ws[0].middle[0]) != to_string(m.P, ws[1].middle[0]));
    CHECK(find_arrow_extensions(m, Word::trivial(0), Word::trivial(1)).empty());
}

TEST_CASE("finite witnesses verify as exact sequences") {
    auto& m = m32();
    auto words = enumerate_words(m.P, 3);
    int seen = 0;
    for (auto& x : words)
        for (auto& y : words)
            for (auto& w : find_extensions(m, x, y)) {
                auto ses = standard_extension_to_ses(m, w);
                REQUIRE_FALSE(ses.symbolic);
                CHECK(ses.middle.total() == ses.sub.total() + ses.quot.total());
                CHECK(ses.non_split);
                ++seen;
            }
    CHECK(seen > 0);
}

TEST_CASE("gluing two spirals gives the band") {
    for (const Model* m : {&m11(), &m32()}) {
        std::vector<Word> asy;
        for (auto& a : enumerate_arcs(m->g.surf, 0))
            if (a.kind == Arc::Kind::Asymptotic) asy.push_back(string_of_arc(*m, a).word);
        int found = 0;
        for (auto& s : asy)
            for (auto& q : asy)
                for (auto& w : find_arrow_extensions(*m, s, q)) {
                    REQUIRE(w.middle.size() == 1);
                    CHECK(w.middle[0] == band_of(*m).word);
                    REQUIRE(w.flavor.size() == 1);
                    CHECK((w.flavor[0] == MiddleFlavor::Plus || w.flavor[0] == MiddleFlavor::Minus));
                    CHECK(standard_extension_to_ses(*m, w).symbolic);
                    ++found;
                }
        CHECK(found >= 2);
    }
}

TEST_CASE("band pairs") {
    auto& m = m11();
    using D = ModuleDescriptor;
    CHECK_FALSE(ext_vanishing_pair(m, band_descriptor(1, D::kPlusInf), band_descriptor(1, D::kMinusInf)));
    CHECK(ext_vanishing_pair(m, band_descriptor(1, D::kPlusInf), band_descriptor(1, D::kPlusInf)));
    CHECK_FALSE(ext_vanishing_pair(m, band_descriptor(2, 1), band_descriptor(2, 1)));
    CHECK_FALSE(ext_vanishing_pair(m, band_descriptor(2, 1), band_descriptor(2, 2)));
    CHECK(ext_vanishing_pair(m, band_descriptor(1, 1), band_descriptor(2, 1)));
    CHECK(ext_vanishing_pair(m, generic_descriptor(), band_descriptor(2, 1)));
}

TEST_CASE("consistency harness at length 6") {
    for (const Model* m : {&m11(), &m32()}) {
        auto rep = consistency_harness(*m, 6, {1, 2});
        CHECK(rep.pairs > 0);
        CHECK(rep.disagreements.empty());
    }
}

TEST_CASE("harness detects a corrupted crossing predicate") {
    // dropping the 3-cycle exception must be caught by the oracle
    auto& m = m32();
    ExtOracle E(m.P);
    auto words = enumerate_words(m.P, 4);
    int agree = 0, mutant_disagree = 0, total = 0;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            Rep X = string_module(m.P, words[i]), Y = string_module(m.P, words[j]);
            bool vanish = E.ext1(X, Y) == 0 && E.ext1(Y, X) == 0;
            auto dx = descriptor_of_word(m, words[i]), dy = descriptor_of_word(m, words[j]);
            agree += ext_vanishing_pair(m, dx, dy) == vanish;
            bool mutant = crossing_number(m.g.surf, dx.arc, dy.arc) == 0;
            mutant_disagree += mutant != vanish;
            ++total;
        }
    CHECK(agree == total);
    CHECK(mutant_disagree > 0);
}

TEST_CASE("overlaps with the band") {
    auto& m = m32();
    auto bw = band_of(m).word;
    int seen = 0;
    for (auto& x : enumerate_words(m.P, 4))
        for (int dir = 0; dir < 2; ++dir) {
            auto ws = dir ? find_overlap_extensions(m, x, bw) : find_overlap_extensions(m, bw, x);
            for (auto& w : ws) {
                CHECK(w.overlap_case ==
                      (dir ? ExtensionWitness::Case::BandToString : ExtensionWitness::Case::StringToBand));
                for (fe l : {1u, 2u}) {
                    auto ses = standard_extension_to_ses(m, w, l);
                    CHECK_FALSE(ses.symbolic);
                    CHECK(ses.non_split);
                    CHECK(ses.middle.total() == ses.sub.total() + ses.quot.total());
                }
                ++seen;
            }
        }
    CHECK(seen > 0);
}
