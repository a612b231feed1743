#include "annulus/suites.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "annulus/cosilting.hpp"
#include "annulus/kcomplex.hpp"

namespace annulus {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

void note(SuiteResult& r, const std::string& s) {
    if (r.failures.size() < 8) r.failures.push_back(s);
}

std::string arcs_text(const std::vector<Arc>& T) {
    std::string s;
    for (auto& a : T) s += (s.empty() ? "" : " ") + to_string(a);
    return s;
}

}  // namespace

std::vector<SuiteResult> suite_extensions(const Model& m, int length_bound, const std::vector<fe>& lambdas) {
    auto t0 = clock_type::now();
    auto rep = consistency_harness(m, length_bound, lambdas, true);
    double secs = since(t0);
    SuiteResult a{"crossing", true, "", secs, {}}, b{"witnesses", true, "", secs, {}};
    long na = 0, nb = 0;
    for (auto& d : rep.disagreements) {
        if (d.rfind("crossing", 0) == 0)
            ++na, note(a, d);
        else
            ++nb, note(b, d);
    }
    a.pass = na == 0;
    b.pass = nb == 0;
    a.detail = std::to_string(rep.pairs) + " pairs, " + std::to_string(na) + " disagreements";
    b.detail = std::to_string(rep.pairs) + " pairs, " + std::to_string(nb) + " failures";
    return {a, b};
}

SuiteResult suite_id_gentle(const std::vector<const Model*>& models, int length_bound, long winding_bound,
                            int min_quotients) {
    auto t0 = clock_type::now();
    SuiteResult r{"id-gentle", true, "", 0, {}};
    long checks = 0, bad = 0, quotients = 0;
    for (auto* m : models) {
        std::vector<Presentation> Qs{m->P};
        for (auto& t : enumerate_asymptotic_triangulations(*m, winding_bound)) Qs.push_back(family_of(*m, t).quotient);
        quotients += (long)Qs.size() - 1;
        for (auto& Q : Qs) {
            ExtOracle E(Q);
            for (auto& w : enumerate_words(Q, length_bound)) {
                ++checks;
                bool c = id_le1_string(Q, w), o = E.id_le1(string_module(Q, w));
                if (c != o) ++bad, note(r, to_string(Q, w) + ": criterion " + std::to_string(c));
            }
        }
    }
    r.pass = bad == 0 && quotients >= min_quotients;
    r.detail = std::to_string(quotients) + " quotients, " + std::to_string(checks) + " strings, " +
               std::to_string(bad) + " disagreements";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_band_dims(const Model& m, const std::vector<fe>& lambdas, int max_n) {
    auto t0 = clock_type::now();
    SuiteResult r{"band-dims", true, "", 0, {}};
    ExtOracle E(m.P);
    auto bd = band_of(m);
    int n_checked = 0;
    for (fe l : lambdas)
        for (int n = 1; n <= max_n; ++n) {
            Rep M = band_module(m.P, bd.band, l, n);
            ++n_checked;
            bool pd = E.pd_le1(M), id = E.id_le1(M);
            if (!pd || !id) {
                r.pass = false;
                note(r, "M(" + std::to_string(l) + "," + std::to_string(n) + ") pd<=1 " + std::to_string(pd) +
                            " id<=1 " + std::to_string(id));
            }
        }
    r.detail = std::to_string(n_checked) + " band modules";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_annihilator(const Model& m, int length_bound, int family_size, long winding_bound) {
    auto t0 = clock_type::now();
    SuiteResult r{"annihilator", true, "", 0, {}};
    const Presentation& P = m.P;
    const Surface& S = m.g.surf;
    auto words = enumerate_words(P, length_bound);
    std::vector<Rep> reps;
    std::vector<Arc> arcs;
    std::vector<char> simple;
    for (auto& w : words) {
        reps.push_back(string_module(P, w));
        arcs.push_back(arc_of_string(m, w));
        simple.push_back(is_internal(S, arcs.back()));
    }
    // the degree-one statement concerns families of pairwise non-crossing internal arcs
    size_t n = words.size();
    std::vector<std::vector<char>> compat(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            compat[i][j] = simple[i] && simple[j] && (i == j || crossing_number(S, arcs[i], arcs[j]) == 0);
    int dimA = (int)enumerate_path_basis(P).size();
    long families = 0, compatible = 0, outside = 0, bad = 0;
    std::string first_outside;
    std::vector<int> pick;
    auto check = [&](bool comp) {
        std::vector<Word> ws;
        std::vector<Rep> rs;
        for (int i : pick) ws.push_back(words[i]), rs.push_back(reps[i]);
        ++families;
        IdealBasis J = annihilator_of_words(P, ws);
        std::string name;
        for (auto& w : ws) name += (name.empty() ? "" : " ") + to_string(P, w);
        if (!(J == annihilator_linear(P, rs))) return ++bad, note(r, "ideal differs: " + name);
        if (!comp) {
            if (!degree_one_generated(P, J) && outside++ == 0) first_outside = name;
            return;
        }
        ++compatible;
        if (!degree_one_generated(P, J)) return ++bad, note(r, "not generated in degree <= 1: " + name);
        Presentation Q = quotient_presentation(P, J);
        if (!check_gentle(Q)) return ++bad, note(r, "quotient not gentle: " + name);
        if ((int)enumerate_path_basis(Q).size() != dimA - (int)J.paths.size())
            return ++bad, note(r, "quotient dimension: " + name);
    };
    // all subsets of size 1..family_size in lexicographic order
    auto rec = [&](auto&& self, int from, bool comp) -> void {
        if (!pick.empty()) check(comp);
        if ((int)pick.size() == family_size) return;
        for (int i = from; i < (int)n; ++i) {
            bool c = comp;
            for (int j : pick) c = c && compat[i][j];
            c = c && compat[i][i];
            pick.push_back(i);
            self(self, i + 1, c);
            pick.pop_back();
        }
    };
    rec(rec, 0, true);
    long tris = 0;
    for (auto& t : enumerate_asymptotic_triangulations(m, winding_bound)) {
        ++tris;
        auto D = family_of(m, t);
        if (!(degree_le1(D.ann) == arrow_vertex_ann_criterion(m, t))) ++bad, note(r, "criterion: " + arcs_text(t.T));
        if (!check_gentle(D.quotient)) ++bad, note(r, "quotient not gentle: " + arcs_text(t.T));
        if ((int)enumerate_path_basis(D.quotient).size() != dimA - (int)D.ann.paths.size())
            ++bad, note(r, "quotient dimension: " + arcs_text(t.T));
    }
    r.pass = bad == 0;
    r.detail = std::to_string(families) + " families (" + std::to_string(compatible) + " non-crossing), " +
               std::to_string(tris) + " triangulations, " + std::to_string(bad) + " failures";
    if (outside)
        r.detail += ", " + std::to_string(outside) + " crossing families not degree-one generated (e.g. " +
                    first_outside + ")";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_completion(const Model& m, int samples, long winding_bound, std::uint32_t seed) {
    auto t0 = clock_type::now();
    SuiteResult r{"completion", true, "", 0, {}};
    const Surface& s = m.g.surf;
    std::mt19937 rng(seed);
    std::vector<Arc> pool;
    for (auto& a : enumerate_arcs(s, winding_bound))
        if (a.kind != Arc::Kind::Band) pool.push_back(a);
    long bad = 0, strict = 0;
    for (int it = 0; it < samples; ++it) {
        int k = std::uniform_int_distribution<int>(0, s.p + s.q)(rng);
        auto sh = pool;
        std::shuffle(sh.begin(), sh.end(), rng);
        std::vector<Arc> T;
        for (auto& a : sh) {
            if ((int)T.size() >= k) break;
            bool ok = true;
            for (auto& x : T)
                if (crossing_number(s, a, x) != 0) ok = false;
            if (ok) T.push_back(a);
        }
        ScalarSet P1, P2;
        for (fe l = 1; l < field_char(); ++l) {
            int c = (int)(rng() % 3);
            if (c == 0) P1.elems.insert(l);
            if (c == 1) P2.elems.insert(l);
        }
        auto t = make_partial(m, T, P1, P2);
        strict += t.strict;
        try {
            auto S = complete_partial(m, t, winding_bound);
            bool sub = true;
            for (auto& a : t.T)
                if (std::find(S.T.begin(), S.T.end(), a) == S.T.end()) sub = false;
            auto Dt = family_of(m, t), Ds = family_of(m, S);
            bool ann = Dt.ann == Ds.ann;
            bool rigid = is_rigid_system(m, Ds.family, Ds.quotient);
            if (!(sub && ann && rigid))
                ++bad, note(r, arcs_text(t.T) + ": subset " + std::to_string(sub) + " ann " + std::to_string(ann) +
                                   " rigid " + std::to_string(rigid));
        } catch (const CompletionBlocked& e) {
            ++bad, note(r, arcs_text(t.T) + ": blocked, " + e.what());
        }
    }
    r.pass = bad == 0;
    r.detail = std::to_string(samples) + " partials (" + std::to_string(strict) + " strict), " + std::to_string(bad) +
               " failures";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_cosilting(const Model& m, long winding_bound, int test_dim) {
    auto t0 = clock_type::now();
    SuiteResult r{"cosilting", true, "", 0, {}};
    auto ts = enumerate_asymptotic_triangulations(m, winding_bound);
    auto tests = test_modules(m, m.P, test_dim);
    std::set<std::vector<std::string>> Ns;
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    long nonstrict = 0, strict = 0, bad = 0;
    for (auto& t : ts) {
        auto D = family_of(m, t);
        if (t.strict) {
            ++strict;
            if (!is_rigid_system(m, D.family, D.quotient)) ++bad, note(r, "strict family not rigid: " + arcs_text(t.T));
            continue;
        }
        ++nonstrict;
        auto rep = verify_cosilting_finite(m, t, test_dim, winding_bound);
        if (!rep.ok()) {
            ++bad;
            note(r, arcs_text(t.T) + ": " + (rep.violations.empty() ? "" : rep.violations.front()));
        }
        std::vector<std::string> N;
        for (auto& d : D.family) N.push_back(label(m, d));
        std::sort(N.begin(), N.end());
        Ns.insert(N);
        auto tp = torsion_pair_of(m.P, module_of_family(m, D), tests);
        if (!tp.hom_orthogonal) ++bad, note(r, "torsion pair not orthogonal: " + arcs_text(t.T));
        pairs.insert({tp.X, tp.Y});
    }
    if ((long)Ns.size() != nonstrict) ++bad, note(r, "repeated N_t");
    if ((long)pairs.size() != nonstrict) ++bad, note(r, "repeated torsion pair");
    r.pass = bad == 0 && nonstrict > 0;
    r.detail = std::to_string(nonstrict) + " non-strict, " + std::to_string(strict) + " strict, " +
               std::to_string(tests.size()) + " test modules, " + std::to_string(pairs.size()) +
               " distinct torsion pairs, " + std::to_string(bad) + " failures";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_kcomplex(const Model& m, int map_length, int word_length, int depth, const std::vector<fe>& lambdas) {
    auto t0 = clock_type::now();
    SuiteResult r{"kcomplex", true, "", 0, {}};
    const Presentation& P = m.P;
    ExtOracle E(P);
    long bad = 0, map_pairs = 0, windows = 0, lifts = 0;
    auto mw = enumerate_words(P, map_length);
    std::vector<StringComplexWindow> win;
    std::vector<Rep> mods;
    for (auto& w : mw) {
        win.push_back(string_complex(P, homotopy_string_of(P, w), depth));
        mods.push_back(string_module(P, w));
    }
    for (size_t i = 0; i < mw.size(); ++i) {
        auto pm = E.prepare(mods[i]);
        for (size_t j = 0; j < mw.size(); ++j) {
            ++map_pairs;
            int e = E.ext1(pm, mods[j]);
            int s = (int)find_standard_maps(P, win[i], win[j]).basis.size();
            if (s != e)
                ++bad, note(r, to_string(P, mw[i]) + " -> " + to_string(P, mw[j]) + ": " + std::to_string(s) +
                                   " maps, ext " + std::to_string(e));
        }
    }
    auto ww = enumerate_words(P, word_length);
    for (auto& w : ww) {
        ++windows;
        auto c = check_complex(P, string_complex(P, homotopy_string_of(P, w), 4), string_module(P, w));
        if (!c.ok()) ++bad, note(r, "string window " + to_string(P, w));
    }
    auto bd = band_of(m);
    for (fe l : lambdas)
        for (int n = 1; n <= 3; ++n) {
            ++windows;
            auto c = check_complex(P, band_complex(P, bd.word, l, n, 4), band_module(P, bd.band, l, n));
            if (!c.ok()) ++bad, note(r, "band window " + std::to_string(l) + "," + std::to_string(n));
        }
    for (auto& w : ww)
        for (fe l : lambdas)
            for (int n = 2; n <= 3; ++n) {
                ++lifts;
                if (!lift_predicate_check(E, w, bd.word, l, n))
                    ++bad, note(r, "lift " + to_string(P, w) + " n=" + std::to_string(n));
            }
    r.pass = bad == 0;
    r.detail = std::to_string(map_pairs) + " map pairs, " + std::to_string(windows) + " windows, " +
               std::to_string(lifts) + " lift checks, " + std::to_string(bad) + " failures";
    r.seconds = since(t0);
    return r;
}

SuiteResult suite_fixture_facts(const Model& m) {
    auto t0 = clock_type::now();
    SuiteResult r{"fixture-facts", true, "", 0, {}};
    const Presentation& P = m.P;
    auto word_of = [&](const Arc& a) {
        auto s = string_of_arc(m, a);
        return s.in_triangulation ? std::string("@in-triangulation") : to_string(P, s.word);
    };
    auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
        if (got != want) r.pass = false, note(r, what + ": got " + got + ", want " + want);
    };
    expect("u_alpha", word_of(Arc::peripheral(Boundary::Outer, 1, 5)), "h-dgfe");
    expect("asymptotic (outer)", word_of(Arc::asymptotic(Boundary::Outer, 1, Spiral::Anticlockwise)), "(c-gf)*e");
    expect("asymptotic (inner)", word_of(Arc::asymptotic(Boundary::Inner, 0, Spiral::Anticlockwise)), "(gfc-)*");
    auto bd = band_of(m);
    expect("band", to_string(P, bd.band), "c-gf");
    expect("i0", std::to_string(bd.i0 + 1), "1");
    expect("s", std::to_string(bd.s), "3");
    int bridging = 0;
    for (auto& a : m.g.arcs) bridging += a.kind == Arc::Kind::Bridging;
    expect("s = bridging arcs", std::to_string(bd.s), std::to_string(bridging));
    expect("peripheral quotient vertices", std::to_string(cut_peripheral(P, m.g).alive_vertex_count()), "3");
    r.detail = r.pass ? "all facts reproduced" : std::to_string(r.failures.size()) + " facts differ";
    r.seconds = since(t0);
    return r;
}

std::string summary_line(const SuiteResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.detail << "  (" << r.seconds << " s)";
    return os.str();
}

}  // namespace annulus
