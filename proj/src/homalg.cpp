#include "annulus/homalg.hpp"

#include <algorithm>

namespace annulus {

namespace {

Rep rep_with_dims(const Presentation& P, const std::vector<int>& dim) {
    Rep M;
    M.dim = dim;
    for (auto& d : P.arrows) M.mat.emplace_back(dim[d.tgt], dim[d.src]);
    return M;
}

// P(i) together with the basis path list at each vertex.
Rep build_projective(const Presentation& P, int i, std::vector<std::vector<Path>>& at) {
    at.assign(P.n, {});
    for (auto& p : enumerate_path_basis(P))
        if (p.start == i) at[p.end(P)].push_back(p);
    std::vector<int> dim(P.n);
    for (int j = 0; j < P.n; ++j) dim[j] = (int)at[j].size();
    Rep M = rep_with_dims(P, dim);
    for (int j = 0; j < P.n; ++j)
        for (int c = 0; c < dim[j]; ++c) {
            const Path& p = at[j][c];
            for (int a = 0; a < (int)P.arrows.size(); ++a) {
                if (!P.a_alive(a) || P.arrows[a].src != j) continue;
                if (!p.arrows.empty() && P.in_rel(a, p.arrows.back())) continue;
                Path q = p;
                q.arrows.push_back(a);
                auto& dst = at[P.arrows[a].tgt];
                auto it = std::find(dst.begin(), dst.end(), q);
                if (it != dst.end()) M.mat[a]((int)(it - dst.begin()), c) = 1;
            }
        }
    return M;
}

}  // namespace

Rep projective_of_vertex(const Presentation& P, int i) {
    std::vector<std::vector<Path>> at;
    return build_projective(P, i, at);
}

Rep injective_of_vertex(const Presentation& P, int i) {
    std::vector<std::vector<Path>> at(P.n);
    for (auto& p : enumerate_path_basis(P))
        if (p.end(P) == i) at[p.start].push_back(p);
    std::vector<int> dim(P.n);
    for (int j = 0; j < P.n; ++j) dim[j] = (int)at[j].size();
    Rep M = rep_with_dims(P, dim);
    // dual basis: the arrow x sends the functional of x q' to that of q'
    for (int j = 0; j < P.n; ++j)
        for (int c = 0; c < dim[j]; ++c) {
            const Path& q = at[j][c];
            if (q.arrows.empty()) continue;
            int x = q.arrows.front();
            Path rest{P.arrows[x].tgt, std::vector<int>(q.arrows.begin() + 1, q.arrows.end())};
            auto& dst = at[rest.start];
            auto it = std::find(dst.begin(), dst.end(), rest);
            if (it != dst.end()) M.mat[x]((int)(it - dst.begin()), c) = 1;
        }
    return M;
}

Rep regular_rep(const Presentation& P) {
    std::vector<Rep> parts;
    for (int i = 0; i < P.n; ++i)
        if (P.v_alive(i)) parts.push_back(projective_of_vertex(P, i));
    return direct_sum(P, parts);
}

ExtOracle::ExtOracle(const Presentation& P) : P_(P) {
    proj_.resize(P.n);
    paths_.resize(P.n);
    for (int i = 0; i < P.n; ++i) {
        if (P.v_alive(i))
            proj_[i] = build_projective(P, i, paths_[i]);
        else
            proj_[i] = zero_rep(P), paths_[i].assign(P.n, {});
    }
    for (int i = 0; i < P.n; ++i)
        simple_omega_.push_back(P.v_alive(i) ? prepare(prepare(simple(P, i)).omega) : prepare(zero_rep(P)));
}

Prepared ExtOracle::prepare(const Rep& M) const {
    const Presentation& P = P_;
    Prepared R;
    R.M = M;
    std::vector<std::pair<int, int>> gens;  // (vertex, basis index)
    for (int i = 0; i < P.n; ++i) {
        if (!M.dim[i]) continue;
        Mat rad(M.dim[i], 0);
        for (int a = 0; a < (int)P.arrows.size(); ++a)
            if (P.a_alive(a) && P.arrows[a].tgt == i && M.mat[a].c) rad = hstack(rad, M.mat[a]);
        Mat aug = hstack(rad, Mat::identity(M.dim[i]));
        auto piv = rref(aug);
        for (int c : piv)
            if (c >= rad.c) gens.push_back({i, c - rad.c});
    }
    std::vector<Rep> parts;
    for (auto [i, k] : gens) {
        R.top.push_back(i);
        parts.push_back(proj_[i]);
    }
    R.proj = direct_sum(P, parts);
    R.pi.resize(P.n);
    for (int j = 0; j < P.n; ++j) {
        Mat pj(M.dim[j], R.proj.dim[j]);
        int col = 0;
        for (auto [i, k] : gens)
            for (auto& p : paths_[i][j]) {
                Mat v(M.dim[i], 1);
                v(k, 0) = 1;
                Mat img = path_matrix(P, M, p) * v;
                for (int r = 0; r < M.dim[j]; ++r) pj(r, col) = img(r, 0);
                ++col;
            }
        R.pi[j] = pj;
    }
    std::vector<int> kd(P.n);
    R.incl.resize(P.n);
    for (int j = 0; j < P.n; ++j) {
        R.incl[j] = R.pi[j].r ? nullspace(R.pi[j]) : Mat::identity(R.proj.dim[j]);
        kd[j] = R.incl[j].c;
    }
    R.omega = rep_with_dims(P, kd);
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!P.a_alive(a)) continue;
        int s = P.arrows[a].src, t = P.arrows[a].tgt;
        if (!kd[s] || !kd[t]) continue;
        R.omega.mat[a] = solve(R.incl[t], R.proj.mat[a] * R.incl[s]);
    }
    return R;
}

int ExtOracle::ext1(const Prepared& M, const Rep& N) const {
    int hp = 0;
    for (int i : M.top) hp += N.dim[i];
    return hom_dim(P_, M.omega, N) - hp + hom_dim(P_, M.M, N);
}

int ExtOracle::ext2(const Rep& M, const Rep& N) const { return ext1(prepare(prepare(M).omega), N); }

int ExtOracle::ext_dim(const Rep& M, const Rep& N, int degree) const {
    if (degree == 1) return ext1(M, N);
    if (degree == 2) return ext2(M, N);
    throw std::invalid_argument("only degrees 1 and 2 are supported");
}

bool ExtOracle::id_le1(const Rep& M) const {
    for (int i = 0; i < P_.n; ++i)
        if (P_.v_alive(i) && ext1(simple_omega_[i], M) != 0) return false;
    return true;
}

bool ExtOracle::pd_le1(const Rep& M) const {
    Prepared om = prepare(prepare(M).omega);
    for (int i = 0; i < P_.n; ++i)
        if (P_.v_alive(i) && ext1(om, simple(P_, i)) != 0) return false;
    return true;
}

bool cogen_member(const Presentation& P, const Rep& X, const Rep& C) {
    if (X.total() == 0) return true;
    HomSpace H = hom_space(P, X, C);
    for (int i = 0; i < P.n; ++i) {
        if (!X.dim[i]) continue;
        Mat st(0, X.dim[i]);
        for (auto& f : H.basis) st = vstack(st, f[i]);
        if (rank(st) != X.dim[i]) return false;
    }
    return true;
}

std::vector<CotiltingViolation> cotilting_check(const ExtOracle& E, const Rep& C, const std::vector<Rep>& tests) {
    std::vector<CotiltingViolation> out;
    for (int t = 0; t < (int)tests.size(); ++t) {
        bool cg = cogen_member(E.presentation(), tests[t], C);
        bool ev = E.ext1(tests[t], C) == 0;
        if (cg != ev) out.push_back({t, cg, ev});
    }
    return out;
}

IdealBasis annihilator_linear(const Presentation& P, const std::vector<Rep>& family) {
    IdealBasis J;
    for (auto& p : enumerate_path_basis(P)) {
        bool zero = true;
        for (auto& M : family) {
            if (!M.dim[p.start] || !M.dim[p.end(P)]) continue;
            if (!path_matrix(P, M, p).is_zero()) {
                zero = false;
                break;
            }
        }
        if (zero) J.paths.push_back(p);
    }
    std::sort(J.paths.begin(), J.paths.end());
    return J;
}

namespace {

// No arrow a with l after a in I.
bool no_relation_before(const Presentation& P, int l) {
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        if (P.a_alive(a) && P.in_rel(l, a)) return false;
    return true;
}

}  // namespace

bool id_le1_string(const Presentation& P, const Word& w) {
    require_valid(P, w);
    if (w.kind == Word::Kind::ZPeriodic) return true;
    std::vector<Letter> ls = expand(w, w.pre.size() + w.period.size());
    for (int l = 0; l < (int)P.arrows.size(); ++l) {
        if (!P.a_alive(l) || P.arrows[l].tgt != w.start) continue;
        if (!ls.empty() && !letters_compatible(P, Letter{l, false}, ls.front())) continue;
        if (!no_relation_before(P, l)) return false;
    }
    if (w.kind != Word::Kind::Finite) return true;
    int end = word_end(P, w);
    for (int l = 0; l < (int)P.arrows.size(); ++l) {
        if (!P.a_alive(l) || P.arrows[l].tgt != end) continue;
        if (!ls.empty() && !letters_compatible(P, ls.back(), Letter{l, true})) continue;
        if (!no_relation_before(P, l)) return false;
    }
    return true;
}

}  // namespace annulus
