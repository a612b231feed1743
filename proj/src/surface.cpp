#include "annulus/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace annulus {

Arc Arc::bridging(long outer, long inner) {
    Arc a;
    a.kind = Kind::Bridging;
    a.a = outer;
    a.b = inner;
    return a;
}
Arc Arc::peripheral(Boundary bd, long from, long to) {
    Arc a;
    a.kind = Kind::Peripheral;
    a.boundary = bd;
    a.a = from;
    a.b = to;
    return a;
}
Arc Arc::asymptotic(Boundary bd, long index, Spiral sp) {
    Arc a;
    a.kind = Kind::Asymptotic;
    a.boundary = bd;
    a.a = index;
    a.spiral = sp;
    return a;
}
Arc Arc::band() { return Arc{}; }

std::string to_string(const Arc& a) {
    std::ostringstream os;
    const char* bd = a.boundary == Boundary::Outer ? "outer" : "inner";
    switch (a.kind) {
        case Arc::Kind::Bridging: os << "B(" << a.a << "," << a.b << ")"; break;
        case Arc::Kind::Peripheral: os << "P(" << bd << "," << a.a << "," << a.b << ")"; break;
        case Arc::Kind::Asymptotic:
            os << "A(" << bd << "," << a.a << "," << (a.spiral == Spiral::Anticlockwise ? "acw" : "cw") << ")";
            break;
        case Arc::Kind::Band: os << "beta"; break;
    }
    return os.str();
}

CrossingPair::CrossingPair(int i_, int j_)
    : std::runtime_error("arcs " + std::to_string(i_) + " and " + std::to_string(j_) + " cross"), i(i_), j(j_) {}

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

namespace {

Arc canon(const Surface& s, const Arc& a, bool strict) {
    if (s.p < 1 || s.q < 1) throw ArcError("surface needs p,q >= 1");
    Arc r = a;
    switch (a.kind) {
        case Arc::Kind::Bridging: {
            long k = floordiv(a.a, s.p);
            r.a = a.a - k * s.p;
            r.b = a.b - k * s.q;
            r.boundary = Boundary::Outer;
            r.spiral = Spiral::Clockwise;
            break;
        }
        case Arc::Kind::Peripheral: {
            long n = s.period(a.boundary);
            long f = std::min(a.a, a.b), t = std::max(a.a, a.b);
            long d = t - f;
            if (d == 0) throw ArcError("degenerate peripheral arc");
            if (d == 1) throw ArcError("boundary digon: peripheral arc of length 1");
            if (strict && d > n) throw ArcError("peripheral lift cuts out a monogon or is not simple");
            long k = floordiv(f, n);
            r.a = f - k * n;
            r.b = t - k * n;
            r.spiral = Spiral::Clockwise;
            break;
        }
        case Arc::Kind::Asymptotic: {
            long n = s.period(a.boundary);
            r.a = a.a - floordiv(a.a, n) * n;
            r.b = 0;
            break;
        }
        case Arc::Kind::Band: r = Arc::band(); break;
    }
    return r;
}

}  // namespace

Arc canonicalize_arc(const Surface& s, const Arc& a) { return canon(s, a, true); }
Arc canonicalize_curve(const Surface& s, const Arc& a) { return canon(s, a, false); }

bool is_internal(const Surface& s, const Arc& a) {
    if (a.kind == Arc::Kind::Bridging) return true;
    if (a.kind != Arc::Kind::Peripheral) return false;
    long d = a.b - a.a;
    return d >= 2 && d <= s.period(a.boundary);
}

long winding(const Surface& s, const Arc& a) {
    if (a.kind != Arc::Kind::Bridging) return 0;
    return floordiv(a.b * s.p - a.a * s.q, (long)s.p * s.q);
}

// ---------------- crossing numbers ----------------

namespace {

long count_inside(long f, long t, long x, long n) {
    // #k with f < x + k n < t
    long c = 0;
    for (long k = floordiv(f - x, n) - 1; x + k * n < t + n; ++k)
        if (f < x + k * n && x + k * n < t) ++c;
    return c;
}

long interleave_count(long f1, long t1, long f2, long t2, long n) {
    long c = 0;
    long lo = floordiv(f1 - t2, n) - 1, hi = floordiv(t1 - f2, n) + 1;
    for (long k = lo; k <= hi; ++k) {
        long a = f2 + k * n, b = t2 + k * n;
        if ((f1 < a && a < t1 && t1 < b) || (a < f1 && f1 < b && b < t1)) ++c;
    }
    return c;
}

long foot(const Arc& br, Boundary bd) { return bd == Boundary::Outer ? br.a : br.b; }

}  // namespace

long crossing_number(const Surface& s, const Arc& x, const Arc& y) {
    using K = Arc::Kind;
    if (x == y) return 0;
    if (y.kind < x.kind) return crossing_number(s, y, x);
    // now x.kind <= y.kind in order Bridging < Peripheral < Asymptotic < Band
    if (y.kind == K::Band) return x.kind == K::Bridging ? 1 : 0;
    if (x.kind == K::Bridging && y.kind == K::Bridging) {
        long long pq = (long long)s.p * s.q;
        long long dx = (long long)x.a * s.q - (long long)y.a * s.q;
        long long dy = (long long)x.b * s.p - (long long)y.b * s.p;
        long lo = (long)floordiv((long)std::min(dx, dy), (long)pq) - 1;
        long hi = (long)floordiv((long)std::max(dx, dy), (long)pq) + 1;
        long c = 0;
        for (long k = lo; k <= hi; ++k) {
            long long u = dx - k * pq, v = dy - k * pq;
            if ((u < 0 && v > 0) || (u > 0 && v < 0)) ++c;
        }
        return c;
    }
    if (x.kind == K::Bridging && y.kind == K::Peripheral)
        return count_inside(y.a, y.b, foot(x, y.boundary), s.period(y.boundary));
    if (x.kind == K::Bridging && y.kind == K::Asymptotic) return kInfinite;
    if (x.kind == K::Peripheral && y.kind == K::Peripheral) {
        if (x.boundary != y.boundary) return 0;
        return interleave_count(x.a, x.b, y.a, y.b, s.period(x.boundary));
    }
    if (x.kind == K::Peripheral && y.kind == K::Asymptotic) {
        if (x.boundary != y.boundary) return 0;
        return count_inside(x.a, x.b, y.a, s.period(x.boundary));
    }
    // asymptotic x asymptotic
    if (x.boundary == y.boundary && x.spiral != y.spiral) return kInfinite;
    return 0;
}

long crossing_number_lifts(const Surface& s, const Arc& x, const Arc& y, long window) {
    if (x == y) return 0;
    if (x.kind == Arc::Kind::Band || y.kind == Arc::Kind::Band)
        return chords_cross(s, lift(s, x), lift(s, y)) ? 1 : 0;
    Chord cx = lift(s, x);
    long c = 0;
    bool edge = false;
    for (long k = -window; k <= window; ++k)
        if (chords_cross(s, cx, lift(s, y, k))) {
            ++c;
            if (k == -window || k == window) edge = true;
        }
    return edge ? kInfinite : c;
}

// ---------------- cover geometry ----------------

std::pair<int, long long> cover_key(const Surface& s, const CPt& pt) {
    switch (pt.t) {
        case 0: return {0, (long long)pt.v * s.q};
        case 1: return {1, 0};
        case 2: return {2, -(long long)pt.v * s.p};
        default: return {3, 0};
    }
}

long long cover_abscissa(const Surface& s, const CPt& pt) {
    if (pt.t == 0) return (long long)pt.v * s.q;
    if (pt.t == 2) return (long long)pt.v * s.p;
    throw std::logic_error("abscissa of a point at infinity");
}

CPt translate(const Surface& s, const CPt& pt, long k) {
    CPt r = pt;
    if (pt.t == 0) r.v += k * s.p;
    if (pt.t == 2) r.v += k * s.q;
    return r;
}

Chord translate(const Surface& s, const Chord& c, long k) { return {translate(s, c.x, k), translate(s, c.y, k)}; }

Chord lift(const Surface& s, const Arc& a, long k) {
    Chord c;
    switch (a.kind) {
        case Arc::Kind::Bridging: c = {{0, a.a}, {2, a.b}}; break;
        case Arc::Kind::Peripheral: {
            int t = a.boundary == Boundary::Outer ? 0 : 2;
            c = {{t, a.a}, {t, a.b}};
            break;
        }
        case Arc::Kind::Asymptotic: {
            int t = a.boundary == Boundary::Outer ? 0 : 2;
            c = {{t, a.a}, {a.spiral == Spiral::Anticlockwise ? 1 : 3, 0}};
            break;
        }
        case Arc::Kind::Band: c = {{3, 0}, {1, 0}}; break;
    }
    return translate(s, c, k);
}

bool cover_between(const Surface& s, const CPt& a, const CPt& x, const CPt& b) {
    auto ka = cover_key(s, a), kx = cover_key(s, x), kb = cover_key(s, b);
    if (ka < kb) return ka < kx && kx < kb;
    return kx > ka || kx < kb;
}

bool chords_cross(const Surface& s, const Chord& c1, const Chord& c2) {
    if (c1.x == c2.x || c1.x == c2.y || c1.y == c2.x || c1.y == c2.y) return false;
    return cover_between(s, c1.x, c2.x, c1.y) != cover_between(s, c1.x, c2.y, c1.y);
}

bool separates(const Surface& s, const Chord& c, const CPt& a, const CPt& b) {
    if (a == c.x || a == c.y || b == c.x || b == c.y) return false;
    return cover_between(s, c.x, a, c.y) != cover_between(s, c.x, b, c.y);
}

// ---------------- triangulations ----------------

int Triangulation::index_of(const Arc& a) const {
    for (size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i] == a) return (int)i;
    return -1;
}

std::pair<int, long> Triangulation::locate(const Chord& c) const {
    CPt u = c.x, v = c.y;
    if (u.t == 1 || u.t == 3 || v.t == 1 || v.t == 3) return {-2, 0};
    if (u.t == v.t) {
        if (v.v < u.v) std::swap(u, v);
        if (v.v - u.v == 1) return {-1, 0};
        Boundary bd = u.t == 0 ? Boundary::Outer : Boundary::Inner;
        long n = surf.period(bd);
        long k = floordiv(u.v, n);
        int idx = index_of(Arc::peripheral(bd, u.v - k * n, v.v - k * n));
        return {idx < 0 ? -2 : idx, k};
    }
    if (u.t == 2) std::swap(u, v);
    long k = floordiv(u.v, surf.p);
    int idx = index_of(Arc::bridging(u.v - k * surf.p, v.v - k * surf.q));
    return {idx < 0 ? -2 : idx, k};
}

Chord Triangulation::side_chord(int tri, int pos, long shift) const {
    const Triangle& t = tris[tri];
    return translate(surf, Chord{t.v[pos], t.v[(pos + 1) % 3]}, shift);
}

bool Triangulation::has_internal_triangle() const {
    for (auto& t : tris)
        if (t.internal) return true;
    return false;
}

Triangulation validate_triangulation(const Surface& s, const std::vector<Arc>& arcs_in) {
    Triangulation g;
    g.surf = s;
    for (auto& a : arcs_in) {
        Arc c = canonicalize_arc(s, a);
        if (!c.is_finite()) throw ArcError("triangulation arcs must be finite: " + to_string(c));
        if (g.index_of(c) >= 0) throw ArcError("duplicate arc " + to_string(c));
        g.arcs.push_back(c);
    }
    if ((long)g.arcs.size() != s.p + s.q)
        throw WrongCount("expected " + std::to_string(s.p + s.q) + " arcs, got " + std::to_string(g.arcs.size()));
    for (size_t i = 0; i < g.arcs.size(); ++i)
        for (size_t j = i + 1; j < g.arcs.size(); ++j)
            if (crossing_number(s, g.arcs[i], g.arcs[j]) != 0) throw CrossingPair((int)i, (int)j);

    long long pq = (long long)s.p * s.q;
    long span = 0;
    for (auto& a : g.arcs) {
        Chord c = lift(s, a);
        long long w = std::llabs(cover_abscissa(s, c.x) - cover_abscissa(s, c.y));
        span = std::max(span, (long)(w / pq) + 1);
    }
    long K = span + 3;
    std::map<CPt, std::set<CPt>> adj;
    auto add = [&](CPt u, CPt v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (long k = -K; k <= K; ++k)
        for (auto& a : g.arcs) {
            Chord c = lift(s, a, k);
            add(c.x, c.y);
        }
    for (long j = -(K + 1) * s.p; j <= (K + 1) * s.p; ++j) add({0, j}, {0, j + 1});
    for (long j = -(K + 1) * s.q; j <= (K + 1) * s.q; ++j) add({2, j}, {2, j + 1});

    std::set<std::array<CPt, 3>> seen;
    for (auto& a : g.arcs) {
        Chord c = lift(s, a, 0);
        for (auto& w : adj[c.x]) {
            if (!adj[c.y].count(w)) continue;
            std::array<CPt, 3> t{c.x, c.y, w};
            long long mn = std::min({cover_abscissa(s, t[0]), cover_abscissa(s, t[1]), cover_abscissa(s, t[2])});
            long m = (long)floordiv((long)mn, (long)pq);
            for (auto& v : t) v = translate(s, v, -m);
            std::sort(t.begin(), t.end(), [&](const CPt& l, const CPt& r) { return cover_key(s, l) < cover_key(s, r); });
            seen.insert(t);
        }
    }
    // Translates of a single triangle can appear once only after normalization.
    for (auto& t : seen) {
        Triangle tr;
        tr.v = t;
        tr.internal = true;
        for (int k = 0; k < 3; ++k) {
            auto [idx, sh] = g.locate(Chord{t[k], t[(k + 1) % 3]});
            if (idx == -2) throw FaceDecompositionFailure("triangle side is neither an arc nor a boundary segment");
            tr.s[k] = Side{idx, sh};
            if (idx < 0) tr.internal = false;
        }
        g.tris.push_back(tr);
    }
    if ((long)g.tris.size() != s.p + s.q)
        throw FaceDecompositionFailure("expected " + std::to_string(s.p + s.q) + " triangles, found " +
                                       std::to_string(g.tris.size()));
    g.incidences.assign(g.arcs.size(), {});
    for (size_t t = 0; t < g.tris.size(); ++t)
        for (int k = 0; k < 3; ++k)
            if (g.tris[t].s[k].arc >= 0) g.incidences[g.tris[t].s[k].arc].push_back({(int)t, k});
    for (auto& inc : g.incidences)
        if (inc.size() != 2) throw FaceDecompositionFailure("arc not bounded by exactly two triangles");
    return g;
}

std::vector<Arc> enumerate_arcs(const Surface& s, long bound) {
    std::vector<Arc> out;
    for (long o = 0; o < s.p; ++o)
        for (long i = -(bound + 2) * s.q - 2; i <= (bound + 2) * s.q + 2; ++i) {
            Arc a = Arc::bridging(o, i);
            long w = winding(s, a);
            if (w >= -bound && w <= bound) out.push_back(a);
        }
    for (Boundary bd : {Boundary::Outer, Boundary::Inner}) {
        long n = s.period(bd);
        for (long f = 0; f < n; ++f)
            for (long d = 2; d <= n; ++d) out.push_back(Arc::peripheral(bd, f, f + d));
    }
    for (Boundary bd : {Boundary::Outer, Boundary::Inner})
        for (long j = 0; j < s.period(bd); ++j)
            for (Spiral sp : {Spiral::Clockwise, Spiral::Anticlockwise}) out.push_back(Arc::asymptotic(bd, j, sp));
    out.push_back(Arc::band());
    std::stable_sort(out.begin(), out.end(), [&](const Arc& x, const Arc& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        long wx = winding(s, x), wy = winding(s, y);
        if (std::labs(wx) != std::labs(wy)) return std::labs(wx) < std::labs(wy);
        if (wx != wy) return wx < wy;
        return x < y;
    });
    return out;
}

namespace {
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (int u : p) {
        size_t c = 0;
        for (int v : p) c += adj[u][v];
        if (pivot < 0 || c > best) pivot = u, best = c;
    }
    for (int u : x) {
        size_t c = 0;
        for (int v : p) c += adj[u][v];
        if (pivot < 0 || c > best) pivot = u, best = c;
    }
    std::vector<int> cand;
    for (int v : p)
        if (!adj[pivot][v]) cand.push_back(v);
    for (int v : cand) {
        std::vector<int> np, nx;
        for (int w : p)
            if (adj[v][w]) np.push_back(w);
        for (int w : x)
            if (adj[v][w]) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}
}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<char>>& adj) {
    std::vector<std::vector<int>> out;
    std::vector<int> r, p;
    for (size_t i = 0; i < adj.size(); ++i) p.push_back((int)i);
    bron_kerbosch(adj, r, p, {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangulation> enumerate_triangulations(const Surface& s, long bound) {
    std::vector<Arc> fin;
    for (auto& a : enumerate_arcs(s, bound))
        if (a.is_finite()) fin.push_back(a);
    size_t n = fin.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) adj[i][j] = crossing_number(s, fin[i], fin[j]) == 0;
    std::vector<Triangulation> out;
    for (auto& c : maximal_cliques(adj)) {
        if ((long)c.size() != s.p + s.q) continue;
        std::vector<Arc> arcs;
        for (int i : c) arcs.push_back(fin[i]);
        out.push_back(validate_triangulation(s, arcs));
    }
    return out;
}

}  // namespace annulus
