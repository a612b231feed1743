#include "annulus/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "annulus/word.hpp"

namespace annulus {

int Presentation::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return (int)i;
    return -1;
}

int Presentation::alive_vertex_count() const {
    int c = 0;
    for (int i = 0; i < n; ++i) c += v_alive(i);
    return c;
}

int Presentation::alive_arrow_count() const {
    int c = 0;
    for (int a = 0; a < (int)arrows.size(); ++a) c += a_alive(a);
    return c;
}

std::string to_string(const Presentation& P, const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += P.arrows[*it].name;
    return s;
}

Presentation quiver_from_triangulation(const Triangulation& g, const std::vector<NameOverride>& names) {
    Presentation P;
    P.n = (int)g.arcs.size();
    std::map<std::pair<int, int>, int> id;
    for (int t = 0; t < (int)g.tris.size(); ++t)
        for (int k = 0; k < 3; ++k) {
            const Side& a = g.tris[t].s[k];
            const Side& b = g.tris[t].s[(k + 1) % 3];
            if (a.arc < 0 || b.arc < 0) continue;
            id[{t, k}] = (int)P.arrows.size();
            P.arrows.push_back({"", a.arc, b.arc, t, k});
        }
    for (int t = 0; t < (int)g.tris.size(); ++t) {
        if (!g.tris[t].internal) continue;
        P.rel.insert({id[{t, 1}], id[{t, 0}]});
        P.rel.insert({id[{t, 2}], id[{t, 1}]});
        P.rel.insert({id[{t, 0}], id[{t, 2}]});
    }
    std::set<std::string> used;
    for (auto& o : names) {
        int hit = -1;
        for (int a = 0; a < (int)P.arrows.size(); ++a) {
            auto& d = P.arrows[a];
            if (d.src == o.src && d.tgt == o.tgt && (o.tri < 0 || d.tri == o.tri) && d.name.empty()) {
                hit = a;
                break;
            }
        }
        if (hit < 0) throw std::invalid_argument("name override matches no arrow: " + o.name);
        if (!used.insert(o.name).second) throw std::invalid_argument("duplicate arrow name " + o.name);
        P.arrows[hit].name = o.name;
    }
    int next = 0;
    auto fresh = [&]() {
        for (;;) {
            std::string s = next < 26 ? std::string(1, char('a' + next)) : "x" + std::to_string(next);
            ++next;
            if (s != "e" && !used.count(s)) return s;  // "e" would clash with trivial words
        }
    };
    for (auto& d : P.arrows)
        if (d.name.empty()) {
            d.name = fresh();
            used.insert(d.name);
        }
    return P;
}

bool check_gentle(const Presentation& P) {
    int m = (int)P.arrows.size();
    for (auto [b, a] : P.rel) {
        if (a < 0 || b < 0 || a >= m || b >= m) return false;
        if (P.arrows[a].tgt != P.arrows[b].src) return false;
    }
    std::vector<int> in(P.n, 0), out(P.n, 0);
    for (int a = 0; a < m; ++a)
        if (P.a_alive(a)) {
            ++out[P.arrows[a].src];
            ++in[P.arrows[a].tgt];
        }
    for (int i = 0; i < P.n; ++i)
        if (in[i] > 2 || out[i] > 2) return false;
    for (int a = 0; a < m; ++a) {
        if (!P.a_alive(a)) continue;
        int succ_rel = 0, succ_free = 0, pred_rel = 0, pred_free = 0;
        for (int b = 0; b < m; ++b) {
            if (!P.a_alive(b)) continue;
            if (P.arrows[b].src == P.arrows[a].tgt) (P.in_rel(b, a) ? succ_rel : succ_free)++;
            if (P.arrows[b].tgt == P.arrows[a].src) (P.in_rel(a, b) ? pred_rel : pred_free)++;
        }
        if (succ_rel > 1 || succ_free > 1 || pred_rel > 1 || pred_free > 1) return false;
    }
    // relation-free successor graph must be acyclic
    std::vector<int> state(m, 0);
    std::function<bool(int)> cyc = [&](int a) {
        state[a] = 1;
        for (int b = 0; b < m; ++b) {
            if (!P.a_alive(b) || P.arrows[b].src != P.arrows[a].tgt || P.in_rel(b, a)) continue;
            if (state[b] == 1) return true;
            if (state[b] == 0 && cyc(b)) return true;
        }
        state[a] = 2;
        return false;
    };
    for (int a = 0; a < m; ++a)
        if (P.a_alive(a) && state[a] == 0 && cyc(a)) return false;
    return true;
}

bool is_basis_path(const Presentation& P, const Path& p) {
    if (p.start < 0 || p.start >= P.n || !P.v_alive(p.start)) return false;
    int v = p.start;
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        int a = p.arrows[k];
        if (a < 0 || a >= (int)P.arrows.size() || !P.a_alive(a) || P.arrows[a].src != v) return false;
        if (k > 0 && P.in_rel(a, p.arrows[k - 1])) return false;
        v = P.arrows[a].tgt;
    }
    return true;
}

std::vector<Path> enumerate_path_basis(const Presentation& P) {
    std::vector<Path> out;
    int limit = P.alive_arrow_count();
    std::vector<Path> layer;
    for (int i = 0; i < P.n; ++i)
        if (P.v_alive(i)) layer.push_back({i, {}});
    for (int len = 0; !layer.empty(); ++len) {
        if (len > limit) throw NonFiniteDimensional("relation-free cycle in the quiver");
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Path> nxt;
        for (auto& p : layer) {
            int v = p.end(P);
            for (int b = 0; b < (int)P.arrows.size(); ++b) {
                if (!P.a_alive(b) || P.arrows[b].src != v) continue;
                if (!p.arrows.empty() && P.in_rel(b, p.arrows.back())) continue;
                Path q = p;
                q.arrows.push_back(b);
                nxt.push_back(q);
            }
        }
        layer = std::move(nxt);
    }
    return out;
}

bool IdealBasis::contains(const Path& p) const { return std::binary_search(paths.begin(), paths.end(), p); }

namespace {

bool path_occurs(const Presentation& P, const Path& p, const Word& w) {
    if (p.arrows.empty()) {
        if (w.start == p.start) return true;
        std::vector<Letter> ls = w.kind == Word::Kind::Finite ? w.pre : expand(w, w.pre.size() + w.period.size());
        for (auto& l : ls)
            if (letter_tgt(P, l) == p.start) return true;
        return false;
    }
    size_t m = p.arrows.size();
    std::vector<Letter> ls;
    if (w.kind == Word::Kind::Finite)
        ls = w.pre;
    else
        ls = expand(w, w.pre.size() + w.period.size() * (m / std::max<size_t>(1, w.period.size()) + 2));
    for (size_t i = 0; i + m <= ls.size(); ++i) {
        bool dir = true, inv = true;
        for (size_t k = 0; k < m; ++k) {
            const Letter& l = ls[i + k];
            if (l.inv || l.arrow != p.arrows[k]) dir = false;
            if (!l.inv || l.arrow != p.arrows[m - 1 - k]) inv = false;
        }
        if (dir || inv) return true;
    }
    return false;
}

}  // namespace

IdealBasis annihilator_of_words(const Presentation& P, const std::vector<Word>& words) {
    for (auto& w : words) require_valid(P, w);
    IdealBasis J;
    for (auto& p : enumerate_path_basis(P)) {
        bool hit = false;
        for (auto& w : words)
            if (path_occurs(P, p, w)) {
                hit = true;
                break;
            }
        if (!hit) J.paths.push_back(p);
    }
    std::sort(J.paths.begin(), J.paths.end());
    return J;
}

bool degree_one_generated(const Presentation& P, const IdealBasis& J) {
    for (auto& p : J.paths) {
        if (p.arrows.empty()) continue;
        bool some = J.contains(Path{p.start, {}});
        int v = p.start;
        for (int a : p.arrows) {
            v = P.arrows[a].tgt;
            if (J.contains(Path{P.arrows[a].src, {a}}) || J.contains(Path{v, {}})) some = true;
        }
        if (!some) return false;
    }
    // converse: a basis path through an ideal arrow or vertex is in the ideal
    for (auto& p : enumerate_path_basis(P)) {
        if (J.contains(p)) continue;
        if (J.contains(Path{p.start, {}})) return false;
        for (int a : p.arrows)
            if (J.contains(Path{P.arrows[a].src, {a}}) || J.contains(Path{P.arrows[a].tgt, {}})) return false;
    }
    return true;
}

Presentation quotient_presentation(const Presentation& P, const IdealBasis& J) {
    Presentation Q = P;
    Q.vdead.assign(P.n, 0);
    Q.adead.assign(P.arrows.size(), 0);
    for (int i = 0; i < P.n; ++i) Q.vdead[i] = !P.v_alive(i) || J.contains(Path{i, {}});
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        Q.adead[a] = !P.a_alive(a) || J.contains(Path{P.arrows[a].src, {a}});
    for (auto& p : J.paths) {
        if (p.arrows.empty()) continue;
        bool killed = !Q.v_alive(p.start);
        for (int a : p.arrows) killed = killed || !Q.a_alive(a);
        if (!killed) throw IdealNotDegreeOne("ideal path " + to_string(P, p) + " has no arrow or vertex in the ideal");
    }
    return Q;
}

Presentation cut_peripheral(const Presentation& P, const Triangulation& g) {
    Presentation Q = P;
    if (Q.vdead.empty()) Q.vdead.assign(P.n, 0);
    for (int i = 0; i < P.n; ++i)
        if (g.arcs[i].kind == Arc::Kind::Peripheral) Q.vdead[i] = 1;
    return Q;
}

std::string to_dot(const Presentation& P) {
    std::ostringstream os;
    os << "digraph Q {\n  rankdir=LR;\n";
    for (int i = 0; i < P.n; ++i)
        if (P.v_alive(i)) os << "  v" << i << " [label=\"" << i + 1 << "\"];\n";
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        if (P.a_alive(a))
            os << "  v" << P.arrows[a].src << " -> v" << P.arrows[a].tgt << " [label=\"" << P.arrows[a].name << "\"];\n";
    for (auto [b, a] : P.rel) {
        if (!P.a_alive(a) || !P.a_alive(b)) continue;
        os << "  v" << P.arrows[a].src << " -> v" << P.arrows[b].tgt << " [style=dashed, arrowhead=none, label=\""
           << P.arrows[b].name << P.arrows[a].name << "=0\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace annulus
