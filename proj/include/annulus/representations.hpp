#pragma once
#include <json.hpp>
#include <optional>

#include "annulus/field.hpp"
#include "annulus/word.hpp"

namespace annulus {

// Finite-dimensional representation; mat[a] is dim[tgt] x dim[src].
struct Rep {
    std::vector<int> dim;
    std::vector<Mat> mat;
    int total() const;
};

Rep zero_rep(const Presentation& P);
bool satisfies_relations(const Presentation& P, const Rep& M);
Rep direct_sum(const Presentation& P, const std::vector<Rep>& parts);
Rep simple(const Presentation& P, int i);

Rep string_module(const Presentation& P, const Word& w);
// Classical band representation on the walk a_1..a_s: J_n(lambda) on a_s, identities elsewhere.
Rep band_module(const Presentation& P, const std::vector<Letter>& band, fe lambda, int n);

struct HomSpace {
    int dim = 0;
    std::vector<std::vector<Mat>> basis;  // per basis element, one matrix per vertex
};
HomSpace hom_space(const Presentation& P, const Rep& M, const Rep& N);
int hom_dim(const Presentation& P, const Rep& M, const Rep& N);
// Matrix M_p of a path (identity for trivial paths).
Mat path_matrix(const Presentation& P, const Rep& M, const Path& p);
bool is_homomorphism(const Presentation& P, const Rep& M, const Rep& N, const std::vector<Mat>& f);

struct ModuleDescriptor {
    enum class Kind { StringFinite, StringInfinite, Band, Generic, Zero };
    enum class Flavor { DirectSum, Product };
    Kind kind = Kind::Zero;
    Arc arc;
    Word word;
    Flavor flavor = Flavor::DirectSum;
    fe lambda = 1;
    long n = 1;  // band: positive finite, or kPlusInf / kMinusInf
    static constexpr long kPlusInf = 1L << 40;
    static constexpr long kMinusInf = -(1L << 40);
};

struct Model;
ModuleDescriptor descriptor_of_word(const Model& m, const Word& w);
ModuleDescriptor descriptor_of_arc(const Model& m, const Arc& a);
ModuleDescriptor band_descriptor(fe lambda, long n);
ModuleDescriptor generic_descriptor();
std::string label(const Model& m, const ModuleDescriptor& d);

nlohmann::json rep_to_json(const Presentation& P, const Rep& M);

}  // namespace annulus
