#pragma once
#include <optional>
#include <set>

#include "annulus/extensions.hpp"

namespace annulus {

// Subset of k* = F_l^*; cofinite sets store their complement.
struct ScalarSet {
    bool cofinite = false;
    std::set<fe> elems;

    static ScalarSet none() { return {}; }
    static ScalarSet all() { return {true, {}}; }
    bool contains(fe x) const { return cofinite != (elems.count(x % field_char()) > 0); }
    ScalarSet complement() const { return {!cofinite, elems}; }
    std::vector<fe> elements() const;  // expanded over the current field
    bool disjoint(const ScalarSet& o) const;
    bool operator==(const ScalarSet& o) const { return elements() == o.elements(); }
};

struct PartialAsympTriangulation {
    std::vector<Arc> T;  // canonical, sorted
    bool strict = false;
    ScalarSet P1, P2;
};

// Maximal within the certificate bound. Strict results of the enumeration leave (P1, P2)
// as a free parameter over subsets of k*.
struct AsympTriangulation : PartialAsympTriangulation {
    long bound = 0;
    bool parameter_slot = false;
};

struct CompletionBlocked : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks pairwise compatibility and sets the strict flag.
PartialAsympTriangulation make_partial(const Model& m, std::vector<Arc> arcs, ScalarSet P1 = {},
                                       ScalarSet P2 = {});

struct CosiltingDescriptor {
    std::vector<ModuleDescriptor> family;
    IdealBasis ann;
    Presentation quotient;
};

CosiltingDescriptor family_of(const Model& m, const PartialAsympTriangulation& t);

// Vertices and arrows of the annihilator read off the arcs of an asymptotic triangulation.
IdealBasis arrow_vertex_ann_criterion(const Model& m, const PartialAsympTriangulation& t);
// Degree <= 1 part of an ideal basis.
IdealBasis degree_le1(const IdealBasis& J);

// Ext^1 between two descriptors over the quotient vanishes in both directions.
bool ext_orthogonal_over(const Model& m, const Presentation& Q, const ModuleDescriptor& x,
                         const ModuleDescriptor& y);
bool descriptor_over(const Model& m, const Presentation& Q, const ModuleDescriptor& d);
bool is_rigid_system(const Model& m, const std::vector<ModuleDescriptor>& family, const Presentation& Q);

struct MaximalityResult {
    bool maximal = true;
    long bound = 0;
    std::optional<ModuleDescriptor> addable;
};
// Searches arcs within the winding bound, the band families and G for a module that can be added.
MaximalityResult maximal_rigid(const Model& m, const std::vector<ModuleDescriptor>& family,
                               const Presentation& Q, long winding_bound);
bool is_maximal_rigid(const Model& m, const std::vector<ModuleDescriptor>& family, const Presentation& Q,
                      long winding_bound);

AsympTriangulation complete_partial(const Model& m, const PartialAsympTriangulation& t, long winding_bound);

std::vector<AsympTriangulation> enumerate_asymptotic_triangulations(const Model& m, long winding_bound);

// Finite-dimensional test modules over a presentation: strings and bands M(lambda,n) up to total dimension.
struct TestModule {
    std::string name;
    Word word;  // ZPeriodic for bands
    fe lambda = 0;
    int n = 0;
    Rep M;
};
std::vector<TestModule> test_modules(const Model& m, const Presentation& Q, int max_dim);

struct CosiltingReport {
    bool rigid = false, maximal = false, cotilting = false, torsion_free = false;
    int tests = 0;
    std::vector<std::string> violations;
    bool ok() const { return rigid && maximal && cotilting && torsion_free; }
};
// Only for non-strict t (M(t) finite-dimensional).
CosiltingReport verify_cosilting_finite(const Model& m, const PartialAsympTriangulation& t, int test_bound,
                                        long winding_bound);

Rep module_of_family(const Model& m, const CosiltingDescriptor& d);

struct TorsionPair {
    std::vector<int> X, Y;  // indices into the test list
    bool hom_orthogonal = true;
};
TorsionPair torsion_pair_of(const Presentation& P, const Rep& C, const std::vector<TestModule>& tests);

nlohmann::json triangulation_to_json(const Model& m, const AsympTriangulation& t);

}  // namespace annulus
