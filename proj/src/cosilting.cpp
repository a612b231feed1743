#include "annulus/cosilting.hpp"

#include <algorithm>

#include "annulus/io.hpp"

namespace annulus {

std::vector<fe> ScalarSet::elements() const {
    std::vector<fe> out;
    for (fe x = 1; x < field_char(); ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

bool ScalarSet::disjoint(const ScalarSet& o) const {
    for (fe x : elements())
        if (o.contains(x)) return false;
    return true;
}

PartialAsympTriangulation make_partial(const Model& m, std::vector<Arc> arcs, ScalarSet P1, ScalarSet P2) {
    const Surface& s = m.g.surf;
    for (auto& a : arcs) {
        if (a.kind == Arc::Kind::Band) throw ArcError("the band curve is not an arc of a triangulation");
        a = canonicalize_arc(s, a);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (crossing_number(s, arcs[i], arcs[j]) != 0) throw CrossingPair((int)i, (int)j);
    PartialAsympTriangulation t;
    t.T = arcs;
    t.strict = std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.kind == Arc::Kind::Asymptotic; });
    if (t.strict) {
        if (!P1.disjoint(P2)) throw std::invalid_argument("P1 and P2 must be disjoint");
        t.P1 = P1;
        t.P2 = P2;
    }
    return t;
}

namespace {

std::vector<Word> words_of(const Model& m, const std::vector<Arc>& T, bool strict) {
    std::vector<Word> ws;
    for (auto& a : T) {
        auto r = string_of_arc(m, a);
        if (!r.in_triangulation) ws.push_back(r.word);
    }
    if (strict) ws.push_back(band_of(m).word);
    return ws;
}

bool crosses_any(const Surface& s, const Arc& a, const std::vector<Arc>& S) {
    for (auto& x : S)
        if (crossing_number(s, a, x) != 0) return true;
    return false;
}

bool same_module(const ModuleDescriptor& x, const ModuleDescriptor& y) {
    using K = ModuleDescriptor::Kind;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case K::Band: return x.lambda == y.lambda && x.n == y.n;
        case K::Generic:
        case K::Zero: return true;
        default: return x.arc == y.arc;
    }
}

bool is_string(const ModuleDescriptor& d) {
    return d.kind == ModuleDescriptor::Kind::StringFinite || d.kind == ModuleDescriptor::Kind::StringInfinite;
}

}  // namespace

CosiltingDescriptor family_of(const Model& m, const PartialAsympTriangulation& t) {
    CosiltingDescriptor D;
    for (auto& a : t.T) D.family.push_back(descriptor_of_arc(m, a));
    if (t.strict) {
        for (fe l : t.P1.elements()) D.family.push_back(band_descriptor(l, ModuleDescriptor::kPlusInf));
        for (fe l : t.P2.elements()) D.family.push_back(band_descriptor(l, ModuleDescriptor::kMinusInf));
        D.family.push_back(generic_descriptor());
    }
    D.ann = annihilator_of_words(m.P, words_of(m, t.T, t.strict));
    D.quotient = quotient_presentation(m.P, D.ann);
    return D;
}

IdealBasis arrow_vertex_ann_criterion(const Model& m, const PartialAsympTriangulation& t) {
    const Presentation& P = m.P;
    std::vector<char> inT(P.n, 0), cut(P.arrows.size(), 0);
    for (auto& a : t.T) {
        int i = m.g.index_of(a);
        if (i >= 0) {
            inT[i] = 1;
            continue;
        }
        for (int x : end_arrows(m, a)) cut[x] = 1;
    }
    IdealBasis J;
    for (int i = 0; i < P.n; ++i)
        if (inT[i]) J.paths.push_back(Path{i, {}});
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        if (inT[P.arrows[a].src] || inT[P.arrows[a].tgt] || cut[a]) J.paths.push_back(Path{P.arrows[a].src, {a}});
    std::sort(J.paths.begin(), J.paths.end());
    return J;
}

IdealBasis degree_le1(const IdealBasis& J) {
    IdealBasis out;
    for (auto& p : J.paths)
        if (p.arrows.size() <= 1) out.paths.push_back(p);
    return out;
}

bool descriptor_over(const Model& m, const Presentation& Q, const ModuleDescriptor& d) {
    using K = ModuleDescriptor::Kind;
    switch (d.kind) {
        case K::Zero: return true;
        case K::Band:
        case K::Generic: return is_valid(Q, band_of(m).word);
        default: return is_valid(Q, d.word);
    }
}

bool ext_orthogonal_over(const Model& m, const Presentation& Q, const ModuleDescriptor& x,
                         const ModuleDescriptor& y) {
    using K = ModuleDescriptor::Kind;
    if (x.kind == K::Zero || y.kind == K::Zero) return true;
    if (ext_vanishing_pair(m, x, y)) return true;
    bool bx = !is_string(x), by = !is_string(y);
    if (bx && by) return false;
    // over A(Gamma) some extension exists; it survives in the quotient iff a middle term does
    Word wx = bx ? band_of(m).word : x.word, wy = by ? band_of(m).word : y.word;
    auto over_q = [&](const std::vector<ExtensionWitness>& ws) {
        for (auto& w : ws) {
            bool ok = true;
            for (auto& e : w.middle) ok = ok && is_valid(Q, e);
            if (ok) return true;
        }
        return false;
    };
    if (over_q(find_extensions(m, wx, wy)) || over_q(find_extensions(m, wy, wx))) return false;
    return true;
}

bool is_rigid_system(const Model& m, const std::vector<ModuleDescriptor>& family, const Presentation& Q) {
    for (auto& d : family) {
        if (!descriptor_over(m, Q, d)) return false;
        if (is_string(d) && !id_le1_string(Q, d.word)) return false;
    }
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i; j < family.size(); ++j)
            if (!ext_orthogonal_over(m, Q, family[i], family[j])) return false;
    return true;
}

MaximalityResult maximal_rigid(const Model& m, const std::vector<ModuleDescriptor>& family, const Presentation& Q,
                               long winding_bound) {
    MaximalityResult R;
    R.bound = winding_bound;
    auto addable = [&](const ModuleDescriptor& d) {
        for (auto& x : family)
            if (same_module(x, d)) return false;
        if (!descriptor_over(m, Q, d)) return false;
        if (is_string(d) && !id_le1_string(Q, d.word)) return false;
        if (!ext_orthogonal_over(m, Q, d, d)) return false;
        for (auto& x : family)
            if (!ext_orthogonal_over(m, Q, d, x)) return false;
        return true;
    };
    for (auto& a : enumerate_arcs(m.g.surf, winding_bound)) {
        if (a.kind == Arc::Kind::Band) continue;
        auto d = descriptor_of_arc(m, a);
        if (d.kind == ModuleDescriptor::Kind::Zero) continue;
        if (addable(d)) {
            R.maximal = false;
            R.addable = d;
            return R;
        }
    }
    std::vector<ModuleDescriptor> extra;
    for (fe l = 1; l < field_char(); ++l)
        for (long n : {ModuleDescriptor::kPlusInf, ModuleDescriptor::kMinusInf, 1L}) extra.push_back(band_descriptor(l, n));
    extra.push_back(generic_descriptor());
    for (auto& d : extra)
        if (addable(d)) {
            R.maximal = false;
            R.addable = d;
            return R;
        }
    return R;
}

bool is_maximal_rigid(const Model& m, const std::vector<ModuleDescriptor>& family, const Presentation& Q,
                      long winding_bound) {
    return maximal_rigid(m, family, Q, winding_bound).maximal;
}

AsympTriangulation complete_partial(const Model& m, const PartialAsympTriangulation& t, long winding_bound) {
    const Surface& s = m.g.surf;
    const Presentation& P = m.P;
    IdealBasis ann = family_of(m, t).ann;
    std::vector<Arc> S = t.T;
    auto add = [&](const Arc& a) {
        if (std::find(S.begin(), S.end(), a) != S.end() || crosses_any(s, a, S)) return false;
        S.push_back(a);
        return true;
    };
    for (auto& g : m.g.arcs) add(g);

    auto pool = enumerate_arcs(s, winding_bound);
    std::vector<char> cut(P.arrows.size(), 0);
    for (auto& a : t.T)
        if (m.g.index_of(a) < 0)
            for (int x : end_arrows(m, a)) cut[x] = 1;
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!ann.contains(Path{P.arrows[a].src, {a}}) || cut[a]) continue;
        if (ann.contains(Path{P.arrows[a].src, {}}) || ann.contains(Path{P.arrows[a].tgt, {}})) continue;
        bool found = false;
        for (auto& c : pool) {
            if (c.kind == Arc::Kind::Band || m.g.index_of(c) >= 0) continue;
            auto ea = end_arrows(m, c);
            if (std::find(ea.begin(), ea.end(), a) == ea.end()) continue;
            if (crosses_any(s, c, S)) continue;
            std::vector<Arc> S2 = S;
            S2.push_back(c);
            if (!(annihilator_of_words(P, words_of(m, S2, t.strict)) == ann)) continue;
            S.push_back(c);
            found = true;
            break;
        }
        if (!found)
            throw CompletionBlocked("no arc within winding " + std::to_string(winding_bound) + " cuts arrow " +
                                    P.arrows[a].name);
    }
    for (auto& c : pool)
        if (c.kind != Arc::Kind::Band) add(c);

    AsympTriangulation R;
    std::sort(S.begin(), S.end());
    R.T = S;
    R.bound = winding_bound;
    R.strict = std::any_of(S.begin(), S.end(), [](const Arc& a) { return a.kind == Arc::Kind::Asymptotic; });
    if (R.strict) {
        // a non-strict t completed to a strict s puts every scalar on the adic side
        R.P1 = t.strict ? t.P1 : ScalarSet::none();
        R.P2 = R.P1.complement();
    } else if ((int)S.size() != s.p + s.q) {
        throw CompletionBlocked("completion has " + std::to_string(S.size()) + " arcs");
    }
    return R;
}

std::vector<AsympTriangulation> enumerate_asymptotic_triangulations(const Model& m, long winding_bound) {
    const Surface& s = m.g.surf;
    std::vector<Arc> arcs;
    for (auto& a : enumerate_arcs(s, winding_bound))
        if (a.kind != Arc::Kind::Band) arcs.push_back(a);
    size_t n = arcs.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = crossing_number(s, arcs[i], arcs[j]) == 0;
    std::vector<AsympTriangulation> out;
    for (auto& c : maximal_cliques(adj)) {
        AsympTriangulation t;
        for (int i : c) t.T.push_back(arcs[i]);
        std::sort(t.T.begin(), t.T.end());
        t.bound = winding_bound;
        t.strict = std::any_of(t.T.begin(), t.T.end(), [](const Arc& a) { return a.kind == Arc::Kind::Asymptotic; });
        if (t.strict) {
            t.parameter_slot = true;
            t.P2 = ScalarSet::all();
        } else if ((int)t.T.size() != s.p + s.q) {
            continue;  // an artefact of the winding bound
        }
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const AsympTriangulation& x, const AsympTriangulation& y) {
        return std::tie(x.strict, x.T) < std::tie(y.strict, y.T);
    });
    return out;
}

std::vector<TestModule> test_modules(const Model& m, const Presentation& Q, int max_dim) {
    std::vector<TestModule> out;
    if (max_dim < 1) return out;
    for (auto& w : enumerate_words(Q, max_dim - 1)) out.push_back({to_string(Q, w), w, 0, 0, string_module(Q, w)});
    BandData bd = band_of(m);
    if (is_valid(Q, bd.word))
        for (int n = 1; n * bd.s <= max_dim; ++n)
            for (fe l = 1; l < field_char(); ++l)
                out.push_back({"M(" + std::to_string(l) + "," + std::to_string(n) + ")", bd.word, l, n,
                               band_module(Q, bd.band, l, n)});
    return out;
}

Rep module_of_family(const Model& m, const CosiltingDescriptor& d) {
    std::vector<Rep> parts;
    for (auto& x : d.family) {
        if (x.kind == ModuleDescriptor::Kind::Zero) continue;
        if (x.kind != ModuleDescriptor::Kind::StringFinite)
            throw std::invalid_argument("family is not finite-dimensional");
        parts.push_back(string_module(m.P, x.word));
    }
    if (parts.empty()) return zero_rep(m.P);
    return direct_sum(m.P, parts);
}

CosiltingReport verify_cosilting_finite(const Model& m, const PartialAsympTriangulation& t, int test_bound,
                                        long winding_bound) {
    if (t.strict) throw std::invalid_argument("verify_cosilting_finite needs a non-strict triangulation");
    const Presentation& P = m.P;
    CosiltingReport R;
    CosiltingDescriptor D = family_of(m, t);
    const Presentation& Q = D.quotient;
    R.rigid = is_rigid_system(m, D.family, Q);
    if (!R.rigid) R.violations.push_back("family is not rigid");
    auto mx = maximal_rigid(m, D.family, Q, winding_bound);
    R.maximal = mx.maximal;
    if (!mx.maximal) R.violations.push_back("can add " + label(m, *mx.addable));

    Rep C = module_of_family(m, D);
    auto tests = test_modules(m, Q, test_bound);
    R.tests = (int)tests.size();
    std::vector<Rep> reps;
    for (auto& x : tests) reps.push_back(x.M);
    ExtOracle E(Q);
    auto bad = cotilting_check(E, C, reps);
    R.cotilting = bad.empty();
    for (auto& v : bad)
        R.violations.push_back("cotilting " + tests[v.test].name + " cogen=" + std::to_string(v.cogen) +
                               " ext0=" + std::to_string(v.ext_vanishes));

    R.torsion_free = true;
    std::vector<int> Y;
    for (int i = 0; i < (int)tests.size(); ++i)
        if ((tests[i].n <= 1) && cogen_member(P, tests[i].M, C)) Y.push_back(i);
    for (int i : Y)
        for (int j : Y) {
            const TestModule &x = tests[i], &y = tests[j];
            if (x.word.kind == Word::Kind::ZPeriodic && y.word.kind == Word::Kind::ZPeriodic) continue;
            for (auto& w : find_extensions(m, x.word, y.word)) {
                std::vector<Rep> mid;
                bool finite = true;
                for (auto& e : w.middle) {
                    if (e.kind != Word::Kind::Finite) finite = false;
                    else mid.push_back(string_module(P, e));
                }
                if (!finite) continue;
                if (!cogen_member(P, direct_sum(P, mid), C)) {
                    R.torsion_free = false;
                    R.violations.push_back("not extension closed: " + to_string(m, w));
                }
            }
        }
    return R;
}

TorsionPair torsion_pair_of(const Presentation& P, const Rep& C, const std::vector<TestModule>& tests) {
    TorsionPair tp;
    for (int i = 0; i < (int)tests.size(); ++i) {
        if (hom_dim(P, tests[i].M, C) == 0) tp.X.push_back(i);
        if (cogen_member(P, tests[i].M, C)) tp.Y.push_back(i);
    }
    for (int x : tp.X)
        for (int y : tp.Y)
            if (hom_dim(P, tests[x].M, tests[y].M) != 0) tp.hom_orthogonal = false;
    return tp;
}

nlohmann::json triangulation_to_json(const Model&, const AsympTriangulation& t) {
    json j;
    j["T"] = json::array();
    for (auto& a : t.T) j["T"].push_back(arc_to_json(a));
    j["strict"] = t.strict;
    j["windingBound"] = t.bound;
    if (t.strict) {
        if (t.parameter_slot) {
            j["parameterSlot"] = "P(k*)";
        } else {
            j["P1"] = t.P1.elements();
            j["P2"] = t.P2.elements();
        }
    }
    return j;
}

}  // namespace annulus
