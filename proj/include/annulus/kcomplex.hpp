#pragma once
#include <map>

#include "annulus/homalg.hpp"
#include "annulus/representations.hpp"

namespace annulus {

// a_0, a_1, ... with a_{k+1} a_k in I. Periodic tails repeat from cycle_start.
struct AntipathDescriptor {
    std::vector<int> arrows;
    bool periodic = false;
    int cycle_start = 0;
    bool empty() const { return arrows.empty(); }
    int at(int k) const;  // k-th arrow, following the cycle; -1 past a finite end
};

AntipathDescriptor antipath_from(const Presentation& P, int arrow);

// Core word with an antipath hanging off each end. `left` hangs off the walk start, `right` off the end.
// Trimmed ends (no extension arrow) drop the outer inverse or direct run of the original word.
struct HomotopyString {
    Word core;
    AntipathDescriptor left, right;
    bool band = false;
};

HomotopyString homotopy_string_of(const Presentation& P, const Word& w);
std::string to_string(const Presentation& P, const HomotopyString& h);

// Linear combination of basis paths; an entry (r, c) of a map between sums of projectives holds
// paths from the vertex of r to the vertex of c.
using PathComb = std::map<Path, fe>;

struct PathMatrix {
    int rows = 0, cols = 0;
    std::vector<PathComb> e;
    PathMatrix() = default;
    PathMatrix(int r, int c) : rows(r), cols(c), e((size_t)r * c) {}
    PathComb& operator()(int r, int c) { return e[(size_t)r * cols + c]; }
    const PathComb& operator()(int r, int c) const { return e[(size_t)r * cols + c]; }
    bool is_zero() const;
};

// B after A
PathMatrix compose(const Presentation& P, const PathMatrix& B, const PathMatrix& A);

struct UnfoldedNode {
    int degree = 0, vertex = 0;
};
struct UnfoldedEdge {
    int from = 0, to = 0;  // the map goes from node `from` (lower degree) to node `to`
    std::string label;
};

// Complex of projectives in degrees -depth..0. terms[k] lists the vertices of the summands of degree -k;
// d[k] (k >= 1) maps degree -k to degree -k+1.
struct StringComplexWindow {
    int depth = 0;
    std::vector<std::vector<int>> terms;
    std::vector<PathMatrix> d;
    bool open = false;  // truncated infinite core, cohomology is not meaningful at the cut
    std::vector<UnfoldedNode> nodes;
    std::vector<UnfoldedEdge> edges;
};

struct WindowTooShallow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core_tops bounds the number of degree-0 summands taken from an infinite core.
StringComplexWindow string_complex(const Presentation& P, const HomotopyString& h, int depth, int core_tops = 8);
StringComplexWindow band_complex(const Presentation& P, const Word& band, fe lambda, int n, int depth = 1);

bool differential_squares_to_zero(const Presentation& P, const StringComplexWindow& X);
// dim H^{-k} for k < depth; H^0 as a representation.
int cohomology_dim(const Presentation& P, const StringComplexWindow& X, int k);
Rep top_cohomology(const Presentation& P, const StringComplexWindow& X);
bool isomorphic(const Presentation& P, const Rep& X, const Rep& Y, std::uint32_t seed = 7);

struct ComplexCheck {
    bool d_squared_zero = false, h0_iso = false, exact_below = false;
    bool ok() const { return d_squared_zero && h0_iso && exact_below; }
};
// Exactness is checked in degrees -1 .. -(depth-1).
ComplexCheck check_complex(const Presentation& P, const StringComplexWindow& X, const Rep& M);

struct StandardMapWitness {
    enum class Kind { GraphMap, SingletonSingle, SingletonDouble, QuasiGraph };
    Kind kind = Kind::GraphMap;
    // nonzero components: (degree of the source, source summand, target summand, path combination)
    struct Component {
        int degree, src, tgt;
        PathComb paths;
    };
    std::vector<Component> components;
};

struct StandardMaps {
    int chain_dim = 0, null_dim = 0;
    std::vector<StandardMapWitness> basis;  // one representative per class of a basis of Hom_K
};

// Basis of Hom_K(X, Y[1]) computed on the windows; both need depth >= 2.
StandardMaps find_standard_maps(const Presentation& P, const StringComplexWindow& X, const StringComplexWindow& Y);
std::string to_string(StandardMapWitness::Kind k);

// Ext^1(M(w), M(lambda,n)) vanishes iff Ext^1(M(w), M(lambda,1)) does, in both directions.
bool lift_predicate_check(const ExtOracle& E, const Word& w, const Word& band, fe lambda, int n);

std::string render_ascii(const Presentation& P, const StringComplexWindow& X);
std::string render_svg(const Presentation& P, const StringComplexWindow& X);

}  // namespace annulus
