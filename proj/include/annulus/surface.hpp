#pragma once
#include <array>
#include <compare>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace annulus {

enum class Boundary { Outer, Inner };
enum class Spiral { Clockwise, Anticlockwise };

struct Surface {
    int p = 1, q = 1;
    int period(Boundary b) const { return b == Boundary::Outer ? p : q; }
};

// Universal cover: outer lift j at (j/p, 0), inner lift j at (j/q, 1).
// Anticlockwise spirals run to +inf, clockwise ones to -inf.
struct Arc {
    enum class Kind { Bridging, Peripheral, Asymptotic, Band };
    Kind kind = Kind::Band;
    Boundary boundary = Boundary::Outer;
    long a = 0, b = 0;  // bridging: outer, inner; peripheral: from, to; asymptotic: index in a
    Spiral spiral = Spiral::Clockwise;

    static Arc bridging(long outer, long inner);
    static Arc peripheral(Boundary bd, long from, long to);
    static Arc asymptotic(Boundary bd, long index, Spiral sp);
    static Arc band();

    bool is_finite() const { return kind == Kind::Bridging || kind == Kind::Peripheral; }
    auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

struct ArcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongCount : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CrossingPair : std::runtime_error {
    int i, j;
    CrossingPair(int i_, int j_);
};
struct FaceDecompositionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long floordiv(long a, long b);

// Canonical representative of an internal arc; rejects non-simple peripheral lifts.
Arc canonicalize_arc(const Surface& s, const Arc& a);
// Canonical representative of a possibly self-crossing finite curve (peripheral d >= 2).
Arc canonicalize_curve(const Surface& s, const Arc& a);
bool is_internal(const Surface& s, const Arc& a);
long winding(const Surface& s, const Arc& a);

constexpr long kInfinite = std::numeric_limits<long>::max();

long crossing_number(const Surface& s, const Arc& x, const Arc& y);
// Independent count over pairs of lifts in a window of translates; kInfinite when
// crossings reach the window edge.
long crossing_number_lifts(const Surface& s, const Arc& x, const Arc& y, long window = 40);

// ---- cover geometry ----
struct CPt {
    int t = 0;   // 0 lower, 1 +inf, 2 upper, 3 -inf
    long v = 0;  // lift index for lower/upper
    auto operator<=>(const CPt&) const = default;
};
struct Chord {
    CPt x, y;
};

std::pair<int, long long> cover_key(const Surface& s, const CPt& pt);
long long cover_abscissa(const Surface& s, const CPt& pt);  // scaled by p*q
CPt translate(const Surface& s, const CPt& pt, long k);
Chord translate(const Surface& s, const Chord& c, long k);
Chord lift(const Surface& s, const Arc& a, long k = 0);
bool cover_between(const Surface& s, const CPt& a, const CPt& x, const CPt& b);
bool chords_cross(const Surface& s, const Chord& c1, const Chord& c2);
bool separates(const Surface& s, const Chord& c, const CPt& a, const CPt& b);

// ---- triangulations ----
struct Side {
    int arc = -1;  // -1 = boundary segment
    long shift = 0;
};

struct Triangle {
    std::array<CPt, 3> v;   // counterclockwise in the cover
    std::array<Side, 3> s;  // s[k] joins v[k] and v[k+1]
    bool internal = false;
};

struct Triangulation {
    Surface surf;
    std::vector<Arc> arcs;
    std::vector<Triangle> tris;
    std::vector<std::vector<std::pair<int, int>>> incidences;  // per arc: (triangle, side)

    int index_of(const Arc& a) const;
    // arc index and shift of a lifted chord; arc = -1 for boundary segments, -2 if absent
    std::pair<int, long> locate(const Chord& c) const;
    Chord side_chord(int tri, int pos, long shift) const;
    bool has_internal_triangle() const;
};

Triangulation validate_triangulation(const Surface& s, const std::vector<Arc>& arcs);
std::vector<Arc> enumerate_arcs(const Surface& s, long winding_bound);
std::vector<Triangulation> enumerate_triangulations(const Surface& s, long winding_bound);

// All maximal cliques of a compatibility graph (Bron-Kerbosch with pivoting).
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<char>>& adj);

}  // namespace annulus
