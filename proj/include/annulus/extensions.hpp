#pragma once
#include <random>

#include "annulus/homalg.hpp"
#include "annulus/strings.hpp"

namespace annulus {

enum class MiddleFlavor { Finite, Sum, Product, Plus, Minus };

// 0 -> M(sub) -> middle -> M(quot) -> 0
struct ExtensionWitness {
    enum class Kind { Overlap, Arrow };
    enum class Case { StringString, BandToString, StringToBand };
    Kind kind = Kind::Overlap;
    Case overlap_case = Case::StringString;
    Word sub, quot;
    Word m;          // common factor (overlap extensions)
    int arrow = -1;  // arrow extensions
    std::vector<Word> middle;
    std::vector<MiddleFlavor> flavor;
    // where each vertex of sub (walk position, or period position for a band) may land:
    // pairs (middle term, walk position)
    std::vector<std::vector<std::pair<int, int>>> support;
};

// Overlap extensions with sub and quot given as walks; a ZPeriodic argument stands for M(lambda,1).
std::vector<ExtensionWitness> find_overlap_extensions(const Model& m, const Word& sub, const Word& quot);
std::vector<ExtensionWitness> find_arrow_extensions(const Model& m, const Word& sub, const Word& quot);
std::vector<ExtensionWitness> find_extensions(const Model& m, const Word& sub, const Word& quot);

struct ExactnessFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifiedSes {
    bool symbolic = false;
    Rep sub, middle, quot;
    std::vector<Mat> f, g;
    bool non_split = false;
};
// Finite-dimensional witnesses are checked for exactness and non-splitness; bands use lambda.
VerifiedSes standard_extension_to_ses(const Model& m, const ExtensionWitness& w, fe lambda = 1,
                                      std::uint32_t seed = 12345);

bool ext_vanishing_pair(const Model& m, const ModuleDescriptor& x, const ModuleDescriptor& y);

struct HarnessReport {
    long pairs = 0;
    std::vector<std::string> disagreements;
};
HarnessReport consistency_harness(const Model& m, int length_bound, const std::vector<fe>& lambdas,
                                  bool check_witnesses = true);

std::string to_string(const Model& m, const ExtensionWitness& w);

}  // namespace annulus
