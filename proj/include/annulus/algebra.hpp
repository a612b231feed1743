#pragma once
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "annulus/surface.hpp"

namespace annulus {

struct ArrowDef {
    std::string name;
    int src = 0, tgt = 0;
    int tri = -1, pos = -1;  // originating triangle side, -1 if not from a triangulation
};

// Quiver with length-2 monomial relations. Quotients keep the indexing and mark dead parts.
struct Presentation {
    int n = 0;
    std::vector<ArrowDef> arrows;
    std::set<std::pair<int, int>> rel;  // (b, a): the composite b after a lies in I
    std::vector<char> vdead, adead;

    bool v_alive(int i) const { return vdead.empty() || !vdead[i]; }
    bool a_alive(int a) const {
        return (adead.empty() || !adead[a]) && v_alive(arrows[a].src) && v_alive(arrows[a].tgt);
    }
    bool in_rel(int b, int a) const { return rel.count({b, a}) > 0; }
    int arrow_index(const std::string& name) const;
    int alive_vertex_count() const;
    int alive_arrow_count() const;
};

// Arrows listed in traversal order; composition is right to left.
struct Path {
    int start = 0;
    std::vector<int> arrows;
    auto operator<=>(const Path&) const = default;
    int end(const Presentation& P) const { return arrows.empty() ? start : P.arrows[arrows.back()].tgt; }
};

std::string to_string(const Presentation& P, const Path& p);

struct NonFiniteDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdealNotDegreeOne : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NameOverride {
    int src, tgt;
    int tri = -1;  // disambiguates parallel arrows
    std::string name;
};

Presentation quiver_from_triangulation(const Triangulation& g, const std::vector<NameOverride>& names = {});
bool check_gentle(const Presentation& P);
// Trivial paths first (by vertex), then nontrivial paths by length and lexicographically.
std::vector<Path> enumerate_path_basis(const Presentation& P);
bool is_basis_path(const Presentation& P, const Path& p);

struct IdealBasis {
    std::vector<Path> paths;  // sorted
    bool contains(const Path& p) const;
    bool operator==(const IdealBasis& o) const { return paths == o.paths; }
};

struct Word;
IdealBasis annihilator_of_words(const Presentation& P, const std::vector<Word>& words);
// True iff every basis path in the ideal has one of its arrows (or vertices) in it.
bool degree_one_generated(const Presentation& P, const IdealBasis& J);
Presentation quotient_presentation(const Presentation& P, const IdealBasis& J);
Presentation cut_peripheral(const Presentation& P, const Triangulation& g);

std::string to_dot(const Presentation& P);

}  // namespace annulus
