#pragma once
#include <map>
#include <optional>
#include <tuple>

#include "annulus/algebra.hpp"
#include "annulus/word.hpp"

namespace annulus {

// A triangulation together with its quiver, as used by every word-level operation.
struct Model {
    Triangulation g;
    Presentation P;
    // (arc i, arc j, shift of j minus shift of i) -> (arrow, inverse?) for the walk i -> j
    std::map<std::tuple<int, int, long>, Letter> step;
    // arrow -> (triangle, pos)
    std::vector<std::pair<int, int>> arrow_side;
};

Model make_model(const Triangulation& g, const std::vector<NameOverride>& names = {});

struct StringOfArc {
    bool in_triangulation = false;
    Word word;
};

// Lifted chords of the triangulation crossed by the arc, from its first endpoint onward.
struct Crossing {
    int arc;
    long shift;
};
std::vector<Crossing> crossing_sequence(const Model& m, const Arc& arc, size_t min_len = 0);

StringOfArc string_of_arc(const Model& m, const Arc& arc);
Arc arc_of_string(const Model& m, const Word& w);

enum class Asymptotic { Expanding, Contracting };
Asymptotic classify_asymptotic(const Presentation& P, const Word& w);

struct Truncation {
    Word word;
    Arc arc;
};
Truncation truncate(const Model& m, const Word& w, size_t n);

struct BandData {
    Word word;  // ZPeriodic
    std::vector<Letter> band;  // walk order a_1..a_s
    int i0;
    int s;
};
BandData band_of(const Model& m);

// Arrows of internal triangles cut off by the ends of the arc: the arc ends at the corner
// between the two sides joined by the arrow. Empty for the band.
std::vector<int> end_arrows(const Model& m, const Arc& arc);

bool crossings_in_3cycles_only(const Model& m, const Arc& x, const Arc& y);

}  // namespace annulus
