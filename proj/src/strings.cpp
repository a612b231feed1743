#include "annulus/strings.hpp"

#include <algorithm>
#include <cstdlib>

namespace annulus {

Model make_model(const Triangulation& g, const std::vector<NameOverride>& names) {
    Model m;
    m.g = g;
    m.P = quiver_from_triangulation(g, names);
    for (int a = 0; a < (int)m.P.arrows.size(); ++a) {
        const ArrowDef& d = m.P.arrows[a];
        m.arrow_side.push_back({d.tri, d.pos});
        const Side& si = g.tris[d.tri].s[d.pos];
        const Side& sj = g.tris[d.tri].s[(d.pos + 1) % 3];
        auto k1 = std::make_tuple(si.arc, sj.arc, sj.shift - si.shift);
        auto k2 = std::make_tuple(sj.arc, si.arc, si.shift - sj.shift);
        if (m.step.count(k1) || m.step.count(k2)) throw std::logic_error("ambiguous triangle step");
        m.step[k1] = Letter{a, false};
        m.step[k2] = Letter{a, true};
    }
    return m;
}

namespace {

long shift_span(const Surface& s, const Chord& c) {
    if (c.x.t % 2 || c.y.t % 2) return 0;
    long long pq = (long long)s.p * s.q;
    return (long)(std::llabs(cover_abscissa(s, c.x) - cover_abscissa(s, c.y)) / pq) + 1;
}

long chord_base(const Surface& s, const Chord& c) {
    long long pq = (long long)s.p * s.q;
    long b = 0;
    for (const CPt* pt : {&c.x, &c.y})
        if (pt->t % 2 == 0) b = std::max(b, (long)(std::llabs(cover_abscissa(s, *pt)) / pq) + 1);
    return b;
}

Arc arc_of_chord(const Surface& s, CPt a, CPt b) {
    if (a.t == b.t) {
        Boundary bd = a.t == 0 ? Boundary::Outer : Boundary::Inner;
        return canonicalize_curve(s, Arc::peripheral(bd, std::min(a.v, b.v), std::max(a.v, b.v)));
    }
    if (a.t == 2) std::swap(a, b);
    return canonicalize_curve(s, Arc::bridging(a.v, b.v));
}

bool is_bridging(const Model& m, int arc) { return m.g.arcs[arc].kind == Arc::Kind::Bridging; }

int bridging_count(const Model& m) {
    int s = 0;
    for (int i = 0; i < (int)m.g.arcs.size(); ++i) s += is_bridging(m, i);
    return s;
}

Letter step_letter(const Model& m, const Crossing& a, const Crossing& b) {
    auto it = m.step.find({a.arc, b.arc, b.shift - a.shift});
    if (it == m.step.end()) throw std::logic_error("consecutive crossings do not share a triangle");
    return it->second;
}

std::vector<Letter> letters_of(const Model& m, const std::vector<Crossing>& seq, size_t from, size_t count) {
    std::vector<Letter> out;
    for (size_t k = from; k < from + count; ++k) out.push_back(step_letter(m, seq[k], seq[k + 1]));
    return out;
}

}  // namespace

std::vector<Crossing> crossing_sequence(const Model& m, const Arc& arc, size_t min_len) {
    const Surface& s = m.g.surf;
    Chord C = lift(s, arc);
    long span = 0;
    for (auto& a : m.g.arcs) span = std::max(span, shift_span(s, lift(s, a)));
    long base = span + chord_base(s, C) + shift_span(s, C) + 2;
    bool infinite = !arc.is_finite();
    long K = base + (infinite ? (long)min_len + 4 : 0);
    std::vector<Crossing> out;
    for (long k = -K; k <= K; ++k)
        for (int i = 0; i < (int)m.g.arcs.size(); ++i)
            if (chords_cross(s, C, lift(s, m.g.arcs[i], k))) out.push_back({i, k});
    const CPt A = C.x;
    auto before = [&](const Crossing& u, const Crossing& v) {
        if (u.arc == v.arc && u.shift == v.shift) return false;
        Chord cu = lift(s, m.g.arcs[u.arc], u.shift), cv = lift(s, m.g.arcs[v.arc], v.shift);
        const CPt& x = (cv.x == cu.x || cv.x == cu.y) ? cv.y : cv.x;
        return separates(s, cu, A, x);
    };
    std::sort(out.begin(), out.end(), before);
    if (infinite && arc.kind == Arc::Kind::Asymptotic) {
        // drop the tail that may miss chords beyond the window
        size_t keep = 0;
        while (keep < out.size() && std::labs(out[keep].shift) <= K - base) ++keep;
        out.resize(keep);
        if (out.size() < min_len) throw std::logic_error("crossing window too small");
    }
    return out;
}

StringOfArc string_of_arc(const Model& m, const Arc& arc0) {
    const Surface& s = m.g.surf;
    Arc arc = canonicalize_curve(s, arc0);
    StringOfArc r;
    if (arc.is_finite() && m.g.index_of(arc) >= 0) {
        r.in_triangulation = true;
        return r;
    }
    int nb = bridging_count(m);
    if (arc.kind == Arc::Kind::Band) {
        r.word = band_of(m).word;
        return r;
    }
    if (arc.is_finite()) {
        auto seq = crossing_sequence(m, arc);
        if (seq.empty()) throw std::logic_error("arc outside the triangulation crosses nothing");
        r.word = Word::trivial(seq[0].arc);
        r.word.pre = letters_of(m, seq, 0, seq.size() - 1);
        return r;
    }
    size_t need = 4 * (m.g.arcs.size() + 2);
    auto seq = crossing_sequence(m, arc, need);
    size_t f = 0;
    while (f < seq.size() && !is_bridging(m, seq[f].arc)) ++f;
    if (f + nb + 1 > seq.size()) throw std::logic_error("asymptotic arc never reaches a bridging arc");
    r.word.kind = Word::Kind::NString;
    r.word.start = seq[0].arc;
    r.word.pre = letters_of(m, seq, 0, f);
    r.word.period = letters_of(m, seq, f, nb);
    r.word = canonical_nstring(m.P, r.word);
    return r;
}

BandData band_of(const Model& m) {
    int nb = bridging_count(m);
    auto seq = crossing_sequence(m, Arc::band(), 0);
    size_t mid = seq.size() / 2;
    if (mid + nb + 1 > seq.size()) throw std::logic_error("band window too small");
    std::vector<Letter> per = letters_of(m, seq, mid, nb);
    int ndir = 0;
    for (auto& l : per) ndir += !l.inv;
    if (ndir == 0 || ndir == nb) throw std::logic_error("band word does not change orientation");
    BandData bd;
    bd.s = nb;
    bd.i0 = -1;
    for (int r = 0; r < nb; ++r) {
        std::vector<Letter> rot(per.begin() + r, per.end());
        rot.insert(rot.end(), per.begin(), per.begin() + r);
        if (rot.front().inv || !rot.back().inv) continue;
        int v = letter_src(m.P, rot.front());
        if (bd.i0 < 0 || v < bd.i0) {
            bd.i0 = v;
            bd.band = rot;
        }
    }
    bd.word.kind = Word::Kind::ZPeriodic;
    bd.word.start = bd.i0;
    bd.word.period = bd.band;
    return bd;
}

namespace {

struct Walk {
    std::vector<Crossing> chords;
    std::vector<std::pair<int, long>> tris;  // lifted triangle between consecutive chords
};

Walk walk_word(const Model& m, const Word& w, size_t len) {
    Walk out;
    out.chords.push_back({w.start, 0});
    for (auto& l : expand(w, len)) {
        auto [t, k] = m.arrow_side[l.arrow];
        const Triangle& tr = m.g.tris[t];
        const Side& a = tr.s[k];
        const Side& b = tr.s[(k + 1) % 3];
        Crossing cur = out.chords.back();
        const Side& from = l.inv ? b : a;
        const Side& to = l.inv ? a : b;
        if (cur.arc != from.arc) throw WordError("word not realizable");
        long T = cur.shift - from.shift;
        out.tris.push_back({t, T});
        out.chords.push_back({to.arc, to.shift + T});
    }
    return out;
}

// Vertex opposite the chord in the adjacent lifted triangle other than `skip`.
std::vector<CPt> opposite_vertices(const Model& m, const Crossing& c, std::pair<int, long> skip) {
    std::vector<CPt> out;
    for (auto [t, pos] : m.g.incidences[c.arc]) {
        long T = c.shift - m.g.tris[t].s[pos].shift;
        if (t == skip.first && T == skip.second) continue;
        out.push_back(translate(m.g.surf, m.g.tris[t].v[(pos + 2) % 3], T));
    }
    return out;
}

}  // namespace

Arc arc_of_string(const Model& m, const Word& w) {
    require_valid(m.P, w);
    const Surface& s = m.g.surf;
    if (w.kind == Word::Kind::ZPeriodic) return Arc::band();
    if (w.kind == Word::Kind::Finite) {
        Walk wk = walk_word(m, w, w.pre.size());
        std::pair<int, long> none{-1, 0};
        if (w.pre.empty()) {
            auto v = opposite_vertices(m, wk.chords[0], none);
            if (v.size() != 2) throw std::logic_error("arc side not shared by two triangles");
            return arc_of_chord(s, v[0], v[1]);
        }
        auto a = opposite_vertices(m, wk.chords.front(), wk.tris.front());
        auto b = opposite_vertices(m, wk.chords.back(), wk.tris.back());
        if (a.size() != 1 || b.size() != 1) throw std::logic_error("ambiguous word endpoints");
        return arc_of_chord(s, a[0], b[0]);
    }
    size_t n = w.pre.size(), p = w.period.size();
    Walk wk = walk_word(m, w, n + p);
    auto a = wk.tris.empty() ? opposite_vertices(m, wk.chords[0], {-1, 0})
                             : opposite_vertices(m, wk.chords.front(), wk.tris.front());
    if (a.size() != 1) throw std::logic_error("ambiguous asymptotic endpoint");
    long d = wk.chords[n + p].shift - wk.chords[n].shift;
    if (wk.chords[n + p].arc != wk.chords[n].arc || d == 0) throw WordError("period does not wrap around the annulus");
    Boundary bd = a[0].t == 0 ? Boundary::Outer : Boundary::Inner;
    return canonicalize_curve(s, Arc::asymptotic(bd, a[0].v, d > 0 ? Spiral::Anticlockwise : Spiral::Clockwise));
}

Asymptotic classify_asymptotic(const Presentation& P, const Word& w) {
    if (w.kind != Word::Kind::NString) throw WordError("classification needs an N-string");
    Word c = canonical_nstring(P, w);
    return c.period.back().inv ? Asymptotic::Contracting : Asymptotic::Expanding;
}

Truncation truncate(const Model& m, const Word& w, size_t n) {
    Truncation t;
    t.word = Word::trivial(w.start);
    t.word.pre = expand(w, n);
    t.arc = arc_of_string(m, t.word);
    return t;
}

std::vector<int> end_arrows(const Model& m, const Arc& arc0) {
    const Surface& s = m.g.surf;
    Arc arc = canonicalize_curve(s, arc0);
    std::vector<int> out;
    if (arc.kind == Arc::Kind::Band) return out;
    if (arc.is_finite() && m.g.index_of(arc) >= 0) return out;
    Chord C = lift(s, arc);
    auto seq = crossing_sequence(m, arc, arc.is_finite() ? 0 : 1);
    std::map<std::pair<int, int>, int> by_side;
    for (int a = 0; a < (int)m.arrow_side.size(); ++a) by_side[m.arrow_side[a]] = a;
    auto at_end = [&](const Crossing& c, const CPt& end) {
        for (auto [t, pos] : m.g.incidences[c.arc]) {
            long T = c.shift - m.g.tris[t].s[pos].shift;
            if (!(translate(s, m.g.tris[t].v[(pos + 2) % 3], T) == end)) continue;
            if (m.g.tris[t].internal) out.push_back(by_side.at({t, (pos + 1) % 3}));
            return;
        }
        throw std::logic_error("end triangle not found");
    };
    at_end(seq.front(), C.x);
    if (arc.is_finite()) at_end(seq.back(), C.y);
    return out;
}

namespace {

long occurrences(const Word& w, int arrow) {
    long c = 0;
    for (auto& l : w.pre) c += l.arrow == arrow;
    for (auto& l : w.period)
        if (l.arrow == arrow) {
            if (w.kind == Word::Kind::NString) return kInfinite;
            ++c;
        }
    return c;
}

}  // namespace

bool crossings_in_3cycles_only(const Model& m, const Arc& x0, const Arc& y0) {
    const Surface& s = m.g.surf;
    Arc x = canonicalize_curve(s, x0), y = canonicalize_curve(s, y0);
    bool in_g = (x.is_finite() && m.g.index_of(x) >= 0) || (y.is_finite() && m.g.index_of(y) >= 0);
    long total = (is_internal(s, x) || !x.is_finite()) && (is_internal(s, y) || !y.is_finite())
                     ? crossing_number(s, x, y)
                     : crossing_number_lifts(s, x, y);
    if (total == 0) return true;
    if (total == kInfinite || in_g) return false;  // an arc of the triangulation has no string to cut through
    Word wx = string_of_arc(m, x).word, wy = string_of_arc(m, y).word;
    long count = 0;
    for (int a : end_arrows(m, y)) {
        long o = occurrences(wx, a);
        if (o == kInfinite) return false;
        count += o;
    }
    for (int a : end_arrows(m, x)) {
        long o = occurrences(wy, a);
        if (o == kInfinite) return false;
        count += o;
    }
    return count == total;
}

}  // namespace annulus
