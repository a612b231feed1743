#include "annulus/homalg.hpp"
#include "annulus/kcomplex.hpp"
#include "common.hpp"

using namespace annulus;
using test::m11;
using test::m32;

TEST_CASE("string modules") {
    for (const Model* m : {&m11(), &m32()})
        for (int i = 0; i < m->P.n; ++i) CHECK(isomorphic(m->P, string_module(m->P, Word::trivial(i)), simple(m->P, i)));
    auto& P = m11().P;
    Rep Ma = string_module(P, test::w(m11(), "a"));
    CHECK(Ma.dim == std::vector<int>{1, 1});
    int a = P.arrow_index("a"), b = P.arrow_index("b");
    CHECK(Ma.mat[a](0, 0) == 1);
    CHECK(Ma.mat[b](0, 0) == 0);
    CHECK(satisfies_relations(P, Ma));
    auto& m = m32();
    CHECK(string_module(m.P, test::w(m, "h-dgfe")).total() == 6);
    for (auto& x : enumerate_words(m.P, 6)) {
        Rep M = string_module(m.P, x);
        CHECK(M.total() == (int)x.length() + 1);
        CHECK(satisfies_relations(m.P, M));
        CHECK(hom_dim(m.P, M, M) >= 1);
    }
}

TEST_CASE("band modules") {
    auto& P = m11().P;
    auto band = band_of(m11()).band;
    Rep B = band_module(P, band, 1, 1);
    CHECK(B.dim == std::vector<int>{1, 1});
    for (auto& x : B.mat) CHECK(x(0, 0) == 1);
    CHECK(hom_dim(P, B, B) == 1);
    CHECK_THROWS(band_module(P, band, 0, 1));
    CHECK_THROWS(band_module(P, band, 1, 0));
    for (const Model* m : {&m11(), &m32()}) {
        auto bd = band_of(*m).band;
        for (fe l : {1u, 2u, 3u}) {
            Rep one = band_module(m->P, bd, l, 1);
            for (int n = 2; n <= 3; ++n) {
                Rep Mn = band_module(m->P, bd, l, n);
                CHECK(satisfies_relations(m->P, Mn));
                for (int i = 0; i < m->P.n; ++i) CHECK(Mn.dim[i] == n * one.dim[i]);
            }
        }
    }
}

TEST_CASE("band module does not depend on the anchor") {
    for (const Model* m : {&m11(), &m32()}) {
        auto& P = m->P;
        ExtOracle E(P);
        auto bd = band_of(*m).band;
        auto words = enumerate_words(P, 4);
        for (fe l : {1u, 3u}) {
            Rep ref = band_module(P, bd, l, 1);
            for (size_t r = 1; r < bd.size(); ++r) {
                std::vector<Letter> rot(bd.begin() + r, bd.end());
                rot.insert(rot.end(), bd.begin(), bd.begin() + r);
                // moving the Jordan block onto a letter of the other direction inverts the parameter
                Rep M = band_module(P, rot, rot.back().inv == bd.back().inv ? l : finv(l), 1);
                CHECK(isomorphic(P, M, ref));
                for (auto& x : words) {
                    Rep S = string_module(P, x);
                    CHECK((E.ext1(S, M) == 0) == (E.ext1(S, ref) == 0));
                    CHECK((E.ext1(M, S) == 0) == (E.ext1(ref, S) == 0));
                }
            }
        }
    }
}

TEST_CASE("hom spaces") {
    for (const Model* m : {&m11(), &m32()}) {
        auto& P = m->P;
        for (int i = 0; i < P.n; ++i)
            for (int j = 0; j < P.n; ++j) CHECK(hom_dim(P, simple(P, i), simple(P, j)) == (i == j ? 1 : 0));
        auto B = enumerate_path_basis(P);
        for (int i = 0; i < P.n; ++i) {
            Rep Pi = projective_of_vertex(P, i);
            int loops = 0;
            for (auto& p : B) loops += p.start == i && p.end(P) == i;
            CHECK(hom_dim(P, Pi, Pi) == loops);
            auto H = hom_space(P, Pi, Pi);
            for (auto& f : H.basis) CHECK(is_homomorphism(P, Pi, Pi, f));
        }
    }
}

TEST_CASE("descriptors") {
    auto& m = m32();
    auto al = string_of_arc(m, Arc::asymptotic(Boundary::Outer, 1, Spiral::Anticlockwise)).word;
    auto d = descriptor_of_word(m, al);
    CHECK(d.kind == ModuleDescriptor::Kind::StringInfinite);
    CHECK(d.flavor == ModuleDescriptor::Flavor::DirectSum);
    auto e = descriptor_of_word(m, string_of_arc(m, Arc::asymptotic(Boundary::Inner, 0, Spiral::Anticlockwise)).word);
    CHECK(e.flavor == ModuleDescriptor::Flavor::Product);
    auto pr = band_descriptor(2, ModuleDescriptor::kPlusInf);
    CHECK(pr.kind == ModuleDescriptor::Kind::Band);
    CHECK(pr.n == ModuleDescriptor::kPlusInf);
    CHECK(generic_descriptor().kind == ModuleDescriptor::Kind::Generic);
    CHECK(descriptor_of_arc(m, m.g.arcs[0]).kind == ModuleDescriptor::Kind::Zero);
    CHECK(descriptor_of_word(m, test::w(m, "h-dgfe")).kind == ModuleDescriptor::Kind::StringFinite);
}
