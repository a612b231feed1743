#include "annulus/extensions.hpp"

#include <algorithm>
#include <set>

namespace annulus {

namespace {

// A word seen as a walk; NString words are expanded to a window and stay open on the right.
struct View {
    int start = 0;
    std::vector<Letter> ls;
    std::vector<int> v;
    bool open = false;
    bool inverted = false;
    Word src;
    int orig(size_t p) const { return inverted ? (int)(ls.size() - p) : (int)p; }
};

View view_of(const Presentation& P, const Word& w) {
    View x;
    x.src = w;
    x.start = w.start;
    if (w.kind == Word::Kind::NString) {
        x.open = true;
        x.ls = expand(w, w.pre.size() + 3 * w.period.size() + 2);
    } else {
        x.ls = w.pre;
    }
    x.v.push_back(x.start);
    for (auto& l : x.ls) x.v.push_back(letter_tgt(P, l));
    return x;
}

std::vector<View> orientations(const Presentation& P, const Word& w) {
    std::vector<View> out{view_of(P, w)};
    if (w.kind == Word::Kind::Finite && !w.pre.empty()) {
        out.push_back(view_of(P, inverse(P, w)));
        out.back().inverted = true;
    }
    return out;
}

// Word made of `prefix` (walk letters from `start`) followed by the view from position k on.
Word splice(const Presentation& P, int start, const std::vector<Letter>& prefix, const View& x, size_t k) {
    Word w;
    w.start = start;
    w.pre = prefix;
    if (!x.open) {
        w.pre.insert(w.pre.end(), x.ls.begin() + k, x.ls.end());
        return w;
    }
    const Word& s = x.src;
    w.kind = Word::Kind::NString;
    if (k <= s.pre.size()) {
        w.pre.insert(w.pre.end(), s.pre.begin() + k, s.pre.end());
        w.period = s.period;
    } else {
        size_t r = (k - s.pre.size()) % s.period.size();
        w.period.assign(s.period.begin() + r, s.period.end());
        w.period.insert(w.period.end(), s.period.begin(), s.period.begin() + r);
    }
    return canonical_nstring(P, w);
}

MiddleFlavor flavor_of(const Presentation& P, const Word& w) {
    if (w.kind != Word::Kind::NString) return MiddleFlavor::Finite;
    return classify_asymptotic(P, w) == Asymptotic::Expanding ? MiddleFlavor::Product : MiddleFlavor::Sum;
}

std::string key_of(const Presentation& P, const ExtensionWitness& w) {
    std::vector<std::string> parts;
    for (auto& x : w.middle) parts.push_back(to_string(P, x.kind == Word::Kind::Finite ? canonical_finite(P, x) : x));
    std::sort(parts.begin(), parts.end());
    std::string k = std::to_string((int)w.kind) + ":" + std::to_string(w.arrow);
    for (auto& p : parts) k += "|" + p;
    return k;
}

void push_unique(const Presentation& P, std::vector<ExtensionWitness>& out, std::set<std::string>& seen,
                 ExtensionWitness w) {
    if (seen.insert(key_of(P, w)).second) out.push_back(std::move(w));
}

void overlap_strings(const Model& md, const Word& sub, const Word& quot, std::vector<ExtensionWitness>& out,
                     std::set<std::string>& seen) {
    const Presentation& P = md.P;
    std::vector<View> svs, qvs;
    if (quot.kind == Word::Kind::NString && sub.kind == Word::Kind::Finite) {
        svs = orientations(P, sub);
        qvs = {view_of(P, quot)};
    } else {
        svs = {view_of(P, sub)};
        qvs = orientations(P, quot);
    }
    for (auto& sv : svs)
        for (auto& qv : qvs) {
            size_t ns = sv.ls.size(), nq = qv.ls.size();
            size_t sguard = sv.open ? sv.src.period.size() : 0, qguard = qv.open ? qv.src.period.size() : 0;
            for (size_t i = 0; i <= ns; ++i)
                for (size_t j = 0; j <= nq; ++j) {
                    if (sv.v[i] != qv.v[j]) continue;
                    for (size_t len = 0; i + len <= ns && j + len <= nq; ++len) {
                        if (len > 0 && sv.ls[i + len - 1] != qv.ls[j + len - 1]) break;
                        if (i + len + sguard > ns && sv.open) break;
                        if (j + len + qguard > nq && qv.open) break;
                        bool sb = i > 0, sa = i + len < ns, qb = j > 0, qa = j + len < nq;
                        if (sb && !sv.ls[i - 1].inv) continue;
                        if (sa && sv.ls[i + len].inv) continue;
                        if (qb && qv.ls[j - 1].inv) continue;
                        if (qa && !qv.ls[j + len].inv) continue;
                        if (!sa && !qa) continue;
                        if (!sb && !qb) continue;
                        std::vector<Letter> mm(sv.ls.begin() + i, sv.ls.begin() + i + len);
                        ExtensionWitness w;
                        w.kind = ExtensionWitness::Kind::Overlap;
                        w.overlap_case = ExtensionWitness::Case::StringString;
                        w.sub = sub;
                        w.quot = quot;
                        w.m = Word::trivial(sv.v[i]);
                        w.m.pre = mm;
                        std::vector<Letter> p1(qv.ls.begin(), qv.ls.begin() + j);
                        p1.insert(p1.end(), mm.begin(), mm.end());
                        std::vector<Letter> p2(sv.ls.begin(), sv.ls.begin() + i);
                        p2.insert(p2.end(), mm.begin(), mm.end());
                        // with m trivial the flanks meet directly and may compose to a relation
                        Word e1 = splice(P, qv.start, p1, sv, i + len);
                        Word e2 = splice(P, sv.start, p2, qv, j + len);
                        if (!is_valid(P, e1) || !is_valid(P, e2)) continue;
                        w.middle = {e1, e2};
                        w.flavor = {flavor_of(P, e1), flavor_of(P, e2)};
                        if (!sv.open) {
                            w.support.resize(ns + 1);
                            for (size_t p = 0; p <= ns; ++p) {
                                auto& su = w.support[sv.orig(p)];
                                if (p <= i + len) su.push_back({1, (int)p});
                                if (p >= i) su.push_back({0, (int)(j + p - i)});
                            }
                        }
                        push_unique(P, out, seen, std::move(w));
                    }
                }
        }
}

void overlap_band(const Model& md, const Word& sub, const Word& quot, std::vector<ExtensionWitness>& out,
                  std::set<std::string>& seen) {
    const Presentation& P = md.P;
    bool band_is_quot = quot.kind == Word::Kind::ZPeriodic;
    const Word& str = band_is_quot ? sub : quot;
    const std::vector<Letter>& B = (band_is_quot ? quot : sub).period;
    if (str.kind != Word::Kind::Finite) return;
    size_t s = B.size();
    auto W = [&](size_t k) { return B[k % s]; };
    for (auto& xv : orientations(P, str)) {
        size_t n = xv.ls.size();
        for (size_t x = 0; x < s; ++x)
            for (size_t i = 0; i <= n; ++i) {
                if (xv.v[i] != letter_src(P, W(x))) continue;
                for (size_t len = 0; i + len <= n; ++len) {
                    if (len > 0 && xv.ls[i + len - 1] != W(x + len - 1)) break;
                    Letter before = W(x + s - 1), after = W(x + len);
                    bool xb = i > 0, xa = i + len < n;
                    if (band_is_quot) {  // string plays the submodule role
                        if (xb && !xv.ls[i - 1].inv) continue;
                        if (xa && xv.ls[i + len].inv) continue;
                        if (before.inv || !after.inv) continue;
                    } else {
                        if (xb && xv.ls[i - 1].inv) continue;
                        if (xa && !xv.ls[i + len].inv) continue;
                        if (!before.inv || after.inv) continue;
                    }
                    std::vector<Letter> e(xv.ls.begin(), xv.ls.begin() + i + len);
                    for (size_t k = 0; k < s; ++k) e.push_back(W(x + len + k));
                    e.insert(e.end(), xv.ls.begin() + i + len, xv.ls.end());
                    ExtensionWitness w;
                    w.kind = ExtensionWitness::Kind::Overlap;
                    w.overlap_case = band_is_quot ? ExtensionWitness::Case::BandToString
                                                  : ExtensionWitness::Case::StringToBand;
                    w.sub = sub;
                    w.quot = quot;
                    w.m = Word::trivial(xv.v[i]);
                    w.m.pre.assign(xv.ls.begin() + i, xv.ls.begin() + i + len);
                    Word eps = Word::trivial(xv.start);
                    eps.pre = e;
                    if (!is_valid(P, eps)) continue;
                    w.middle = {eps};
                    w.flavor = {MiddleFlavor::Finite};
                    if (band_is_quot) {
                        w.support.resize(n + 1);
                        for (size_t p = 0; p <= n; ++p) {
                            if (p <= i + len) w.support[xv.orig(p)].push_back({0, (int)p});
                            if (p >= i) w.support[xv.orig(p)].push_back({0, (int)(p + s)});
                        }
                    } else {
                        w.support.resize(s);
                        for (size_t t = 0; t <= s + len; ++t) w.support[(x + t) % s].push_back({0, (int)(i + t)});
                    }
                    push_unique(P, out, seen, std::move(w));
                }
            }
    }
}

bool junction_ok(const Presentation& P, const std::vector<Letter>& ls, size_t k) {
    return k == 0 || k >= ls.size() || letters_compatible(P, ls[k - 1], ls[k]);
}

std::vector<Letter> inverted(const Presentation& P, const std::vector<Letter>& ls) {
    (void)P;
    std::vector<Letter> r;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.push_back(it->inverse());
    return r;
}

}  // namespace

std::vector<ExtensionWitness> find_overlap_extensions(const Model& m, const Word& sub, const Word& quot) {
    require_valid(m.P, sub);
    require_valid(m.P, quot);
    std::vector<ExtensionWitness> out;
    std::set<std::string> seen;
    bool zs = sub.kind == Word::Kind::ZPeriodic, zq = quot.kind == Word::Kind::ZPeriodic;
    if (zs && zq) return out;
    if (zs || zq)
        overlap_band(m, sub, quot, out, seen);
    else
        overlap_strings(m, sub, quot, out, seen);
    return out;
}

std::vector<ExtensionWitness> find_arrow_extensions(const Model& md, const Word& sub, const Word& quot) {
    const Presentation& P = md.P;
    require_valid(P, sub);
    require_valid(P, quot);
    std::vector<ExtensionWitness> out;
    std::set<std::string> seen;
    if (sub.kind == Word::Kind::ZPeriodic || quot.kind == Word::Kind::ZPeriodic) return out;
    auto make = [&](int a, Word eps, MiddleFlavor fl, const View* Y = nullptr, size_t off = 0) {
        ExtensionWitness w;
        w.kind = ExtensionWitness::Kind::Arrow;
        w.sub = sub;
        w.quot = quot;
        w.arrow = a;
        w.middle = {eps};
        w.flavor = {fl};
        if (Y && !Y->open) {
            w.support.resize(Y->ls.size() + 1);
            for (size_t p = 0; p <= Y->ls.size(); ++p) w.support[Y->orig(p)].push_back({0, (int)(off + p)});
        }
        push_unique(P, out, seen, std::move(w));
    };
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!P.a_alive(a)) continue;
        Letter la{a, false};
        if (quot.kind == Word::Kind::Finite) {
            // quotient part, then a, then submodule part
            for (auto& X : orientations(P, quot)) {
                if (X.v.back() != P.arrows[a].src) continue;
                for (auto& Y : orientations(P, sub)) {
                    if (Y.start != P.arrows[a].tgt) continue;
                    std::vector<Letter> ls = X.ls;
                    ls.push_back(la);
                    size_t k = ls.size();
                    if (!junction_ok(P, ls, k - 1)) continue;
                    if (!Y.ls.empty() && !letters_compatible(P, la, Y.ls[0])) continue;
                    Word eps = splice(P, X.start, ls, Y, 0);
                    if (!is_valid(P, eps)) continue;
                    make(a, eps, flavor_of(P, eps), &Y, X.ls.size() + 1);
                }
            }
        } else if (sub.kind == Word::Kind::Finite) {
            // the quotient is an N-string: read the middle term backwards
            for (auto& Y : orientations(P, sub)) {
                if (Y.start != P.arrows[a].tgt || quot.start != P.arrows[a].src) continue;
                std::vector<Letter> ls = inverted(P, Y.ls);
                ls.push_back(la.inverse());
                View Q = view_of(P, quot);
                Word eps = splice(P, Y.v.back(), ls, Q, 0);
                if (!is_valid(P, eps)) continue;
                make(a, eps, flavor_of(P, eps));
            }
        } else {
            if (quot.start != P.arrows[a].src || sub.start != P.arrows[a].tgt) continue;
            BandData bd = band_of(md);
            size_t s = bd.band.size();
            size_t L = quot.pre.size() + sub.pre.size() + 3 * s;
            std::vector<Letter> R = inverted(P, expand(quot, L));
            size_t mid = R.size();
            R.push_back(la);
            auto tail = expand(sub, L);
            R.insert(R.end(), tail.begin(), tail.end());
            bool ok = true;
            for (size_t k = 1; k < R.size() && ok; ++k) ok = letters_compatible(P, R[k - 1], R[k]);
            for (size_t k = 0; k + s < R.size() && ok; ++k) ok = R[k] == R[k + s];
            if (!ok) continue;
            std::vector<Letter> per(R.begin() + mid, R.begin() + mid + s), inv_band = inverted(P, bd.band);
            MiddleFlavor fl = MiddleFlavor::Minus;
            bool found = false;
            for (size_t r = 0; r < s && !found; ++r) {
                std::vector<Letter> rot(per.begin() + r, per.end());
                rot.insert(rot.end(), per.begin(), per.begin() + r);
                if (rot == bd.band) found = true;
                if (rot == inv_band) found = true, fl = MiddleFlavor::Plus;
            }
            if (found) make(a, bd.word, fl);
        }
    }
    return out;
}

std::vector<ExtensionWitness> find_extensions(const Model& m, const Word& sub, const Word& quot) {
    auto out = find_overlap_extensions(m, sub, quot);
    auto ar = find_arrow_extensions(m, sub, quot);
    out.insert(out.end(), ar.begin(), ar.end());
    return out;
}

namespace {

Rep module_of(const Model& m, const Word& w, fe lambda) {
    if (w.kind == Word::Kind::ZPeriodic) return band_module(m.P, w.period, lambda, 1);
    return string_module(m.P, w);
}

Mat combine(const std::vector<std::vector<Mat>>& basis, const std::vector<fe>& c, int vertex) {
    Mat r = basis[0][vertex];
    r = scale(r, c[0]);
    for (size_t k = 1; k < basis.size(); ++k) r = r + scale(basis[k][vertex], c[k]);
    return r;
}

// (vertex, basis index) of each walk position of a string module
std::vector<std::pair<int, int>> positions(const Presentation& P, const Word& w) {
    std::vector<std::pair<int, int>> out;
    std::vector<int> seen(P.n, 0);
    if (w.kind == Word::Kind::ZPeriodic)
        for (auto& l : w.period) {
            int v = letter_src(P, l);
            out.push_back({v, seen[v]++});
        }
    else
        for (int v : vertices_of(P, w)) out.push_back({v, seen[v]++});
    return out;
}

// Maps sub -> middle sending each vertex of sub into the span of its allowed middle vertices.
HomSpace restrict_support(const Presentation& P, const ExtensionWitness& w, const std::vector<Rep>& parts,
                          const HomSpace& F) {
    std::vector<std::vector<int>> off(parts.size(), std::vector<int>(P.n, 0));
    for (size_t t = 1; t < parts.size(); ++t)
        for (int i = 0; i < P.n; ++i) off[t][i] = off[t - 1][i] + parts[t - 1].dim[i];
    std::vector<std::vector<std::pair<int, int>>> mid;
    for (auto& x : w.middle) mid.push_back(positions(P, x));
    auto sp = positions(P, w.sub);
    if (sp.size() != w.support.size()) throw std::logic_error("witness support has the wrong size");
    std::vector<std::vector<fe>> rows;
    for (size_t k = 0; k < sp.size(); ++k) {
        auto [v, col] = sp[k];
        int total = 0;
        for (auto& p : parts) total += p.dim[v];
        std::vector<char> ok(total, 0);
        for (auto [t, pos] : w.support[k]) {
            auto [mv, mi] = mid[t][pos];
            if (mv != v) throw std::logic_error("witness support changes vertex");
            ok[off[t][v] + mi] = 1;
        }
        for (int r = 0; r < total; ++r) {
            if (ok[r]) continue;
            std::vector<fe> row;
            for (auto& f : F.basis) row.push_back(f[v](r, col));
            rows.push_back(row);
        }
    }
    if (rows.empty()) return F;
    Mat C((int)rows.size(), F.dim);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int k = 0; k < F.dim; ++k) C((int)r, k) = rows[r][k];
    Mat ns = nullspace(C);
    HomSpace out;
    out.dim = ns.c;
    for (int c = 0; c < ns.c; ++c) {
        std::vector<fe> co(F.dim);
        for (int k = 0; k < F.dim; ++k) co[k] = ns(k, c);
        std::vector<Mat> f;
        for (int i = 0; i < P.n; ++i) f.push_back(combine(F.basis, co, i));
        out.basis.push_back(f);
    }
    return out;
}

}  // namespace

VerifiedSes standard_extension_to_ses(const Model& m, const ExtensionWitness& w, fe lambda, std::uint32_t seed) {
    const Presentation& P = m.P;
    VerifiedSes R;
    for (auto& x : w.middle)
        if (x.kind != Word::Kind::Finite) R.symbolic = true;
    if (w.sub.kind == Word::Kind::NString || w.quot.kind == Word::Kind::NString) R.symbolic = true;
    if (R.symbolic) return R;
    R.sub = module_of(m, w.sub, lambda);
    R.quot = module_of(m, w.quot, lambda);
    std::vector<Rep> parts;
    for (auto& x : w.middle) parts.push_back(string_module(P, x));
    R.middle = direct_sum(P, parts);
    for (int i = 0; i < P.n; ++i)
        if (R.middle.dim[i] != R.sub.dim[i] + R.quot.dim[i])
            throw ExactnessFailure("dimension vectors of the middle term are not additive");
    HomSpace F = hom_space(P, R.sub, R.middle), G = hom_space(P, R.middle, R.quot);
    if (!w.support.empty()) F = restrict_support(P, w, parts, F);
    if (F.dim == 0 || G.dim == 0) throw ExactnessFailure("no maps between the terms");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<fe> coef(0, field_char() - 1);
    for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<fe> c(F.dim);
        for (auto& x : c) x = coef(rng);
        std::vector<Mat> f(P.n);
        bool inj = true;
        for (int i = 0; i < P.n; ++i) {
            f[i] = combine(F.basis, c, i);
            if (rank(f[i]) != R.sub.dim[i]) inj = false;
        }
        if (!inj) continue;
        // g in the span of G with g f = 0
        int rows = 0;
        for (int i = 0; i < P.n; ++i) rows += R.quot.dim[i] * R.sub.dim[i];
        Mat S(rows, G.dim);
        for (int k = 0; k < G.dim; ++k) {
            int r = 0;
            for (int i = 0; i < P.n; ++i) {
                Mat gf = G.basis[k][i] * f[i];
                for (fe v : gf.a) S(r++, k) = v;
            }
        }
        Mat ns = nullspace(S);
        if (ns.c == 0) continue;
        for (int tries = 0; tries < 10; ++tries) {
            std::vector<fe> d(G.dim, 0);
            for (int k = 0; k < ns.c; ++k) {
                fe t = coef(rng);
                for (int j = 0; j < G.dim; ++j) d[j] = fadd(d[j], fmul(t, ns(j, k)));
            }
            std::vector<Mat> g(P.n);
            bool surj = true;
            for (int i = 0; i < P.n; ++i) {
                g[i] = combine(G.basis, d, i);
                if (rank(g[i]) != R.quot.dim[i]) surj = false;
            }
            if (!surj) continue;
            R.f = f;
            R.g = g;
            R.non_split = hom_dim(P, R.quot, R.middle) < hom_dim(P, R.quot, R.sub) + hom_dim(P, R.quot, R.quot);
            if (!R.non_split) throw ExactnessFailure("sequence splits");
            return R;
        }
    }
    throw ExactnessFailure("no exact sequence found through the middle term");
}

bool ext_vanishing_pair(const Model& m, const ModuleDescriptor& x, const ModuleDescriptor& y) {
    using K = ModuleDescriptor::Kind;
    if (x.kind == K::Zero || y.kind == K::Zero) return true;
    bool bx = x.kind == K::Band || x.kind == K::Generic, by = y.kind == K::Band || y.kind == K::Generic;
    if (bx && by) {
        if (x.kind == K::Generic || y.kind == K::Generic) return true;
        if (x.lambda != y.lambda) return true;
        bool fx = std::labs(x.n) < ModuleDescriptor::kPlusInf, fy = std::labs(y.n) < ModuleDescriptor::kPlusInf;
        if (fx || fy) return false;
        return x.n == y.n;
    }
    return crossings_in_3cycles_only(m, x.arc, y.arc);
}

HarnessReport consistency_harness(const Model& m, int length_bound, const std::vector<fe>& lambdas,
                                  bool check_witnesses) {
    const Presentation& P = m.P;
    ExtOracle E(P);
    struct Item {
        Word w;
        ModuleDescriptor d;
        Rep M;
        Prepared prep;
        fe lambda;
    };
    std::vector<Item> items;
    for (auto& w : enumerate_words(P, length_bound)) {
        Rep M = string_module(P, w);
        items.push_back({w, descriptor_of_word(m, w), M, E.prepare(M), 1});
    }
    BandData bd = band_of(m);
    for (fe l : lambdas) {
        Rep M = band_module(P, bd.band, l, 1);
        items.push_back({bd.word, band_descriptor(l, 1), M, E.prepare(M), l});
    }
    HarnessReport rep;
    auto name = [&](const Item& it) { return label(m, it.d); };
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = i + 1; j < items.size(); ++j) {
            const Item &x = items[i], &y = items[j];
            ++rep.pairs;
            int exy = E.ext1(x.prep, y.M), eyx = E.ext1(y.prep, x.M);
            bool pred = ext_vanishing_pair(m, x.d, y.d);
            if (pred != (exy == 0 && eyx == 0))
                rep.disagreements.push_back("crossing " + name(x) + " " + name(y) + " ext=" + std::to_string(exy) +
                                            "," + std::to_string(eyx));
            if (!check_witnesses) continue;
            bool both_bands = x.w.kind == Word::Kind::ZPeriodic && y.w.kind == Word::Kind::ZPeriodic;
            for (int dir = 0; dir < 2; ++dir) {
                const Item& q = dir ? y : x;  // Ext^1(M(q), M(s))
                const Item& s = dir ? x : y;
                int e = dir ? eyx : exy;
                std::vector<ExtensionWitness> ws;
                if (!both_bands) ws = find_extensions(m, s.w, q.w);
                if ((e != 0) != !ws.empty())
                    rep.disagreements.push_back("witness " + name(q) + " -> " + name(s) + " ext=" + std::to_string(e) +
                                                " witnesses=" + std::to_string(ws.size()));
                for (auto& w : ws) {
                    fe lam = q.w.kind == Word::Kind::ZPeriodic ? q.lambda : s.lambda;
                    try {
                        standard_extension_to_ses(m, w, lam);
                    } catch (const ExactnessFailure& ex) {
                        rep.disagreements.push_back("ses " + to_string(m, w) + ": " + ex.what());
                    }
                }
            }
        }
    return rep;
}

std::string to_string(const Model& m, const ExtensionWitness& w) {
    std::string s = "0 -> " + to_string(m.P, w.sub) + " -> ";
    for (size_t k = 0; k < w.middle.size(); ++k) s += (k ? " + " : "") + to_string(m.P, w.middle[k]);
    s += " -> " + to_string(m.P, w.quot) + " -> 0";
    if (w.kind == ExtensionWitness::Kind::Arrow) s += " [arrow " + m.P.arrows[w.arrow].name + "]";
    return s;
}

}  // namespace annulus
