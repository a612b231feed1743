#pragma once
#include <memory>

#include "annulus/representations.hpp"

namespace annulus {

Rep projective_of_vertex(const Presentation& P, int i);
Rep injective_of_vertex(const Presentation& P, int i);
Rep regular_rep(const Presentation& P);

// Projective cover data of a module, reused across Ext computations.
struct Prepared {
    Rep M;
    std::vector<int> top;  // vertex of each top generator
    Rep proj;              // direct sum of P(top[g])
    std::vector<Mat> pi;   // proj -> M per vertex
    Rep omega;             // kernel of pi
    std::vector<Mat> incl; // omega -> proj per vertex
};

class ExtOracle {
public:
    explicit ExtOracle(const Presentation& P);
    const Presentation& presentation() const { return P_; }

    Prepared prepare(const Rep& M) const;
    int ext1(const Prepared& M, const Rep& N) const;
    int ext1(const Rep& M, const Rep& N) const { return ext1(prepare(M), N); }
    int ext2(const Rep& M, const Rep& N) const;
    int ext_dim(const Rep& M, const Rep& N, int degree) const;
    bool id_le1(const Rep& M) const;
    bool pd_le1(const Rep& M) const;
    const Rep& projective(int i) const { return proj_[i]; }

private:
    Presentation P_;
    std::vector<Rep> proj_;
    std::vector<std::vector<std::vector<Path>>> paths_;  // per projective: paths ending at each vertex
    std::vector<Prepared> simple_omega_;                 // prepared syzygy of each simple
};

bool cogen_member(const Presentation& P, const Rep& X, const Rep& C);

struct CotiltingViolation {
    int test;
    bool cogen;
    bool ext_vanishes;
};
std::vector<CotiltingViolation> cotilting_check(const ExtOracle& E, const Rep& C, const std::vector<Rep>& tests);

IdealBasis annihilator_linear(const Presentation& P, const std::vector<Rep>& family);

// Combinatorial injective-dimension criterion for string modules.
bool id_le1_string(const Presentation& P, const Word& w);

}  // namespace annulus
