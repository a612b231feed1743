#include "annulus/representations.hpp"

#include "annulus/strings.hpp"

namespace annulus {

int Rep::total() const {
    int t = 0;
    for (int d : dim) t += d;
    return t;
}

Rep zero_rep(const Presentation& P) {
    Rep M;
    M.dim.assign(P.n, 0);
    M.mat.assign(P.arrows.size(), Mat(0, 0));
    return M;
}

bool satisfies_relations(const Presentation& P, const Rep& M) {
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        const Mat& x = M.mat[a];
        if (x.r != M.dim[P.arrows[a].tgt] || x.c != M.dim[P.arrows[a].src]) return false;
        if (!P.a_alive(a) && !x.is_zero()) return false;
    }
    for (int i = 0; i < P.n; ++i)
        if (!P.v_alive(i) && M.dim[i]) return false;
    for (auto [b, a] : P.rel)
        if (!(M.mat[b] * M.mat[a]).is_zero()) return false;
    return true;
}

Rep direct_sum(const Presentation& P, const std::vector<Rep>& parts) {
    Rep S;
    S.dim.assign(P.n, 0);
    for (auto& M : parts)
        for (int i = 0; i < P.n; ++i) S.dim[i] += M.dim[i];
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        Mat x(S.dim[P.arrows[a].tgt], S.dim[P.arrows[a].src]);
        int ro = 0, co = 0;
        for (auto& M : parts) {
            const Mat& y = M.mat[a];
            for (int r = 0; r < y.r; ++r)
                for (int c = 0; c < y.c; ++c) x(ro + r, co + c) = y(r, c);
            ro += y.r;
            co += y.c;
        }
        S.mat.push_back(x);
    }
    return S;
}

Rep simple(const Presentation& P, int i) { return string_module(P, Word::trivial(i)); }

namespace {

Rep empty_with_dims(const Presentation& P, const std::vector<int>& dim) {
    Rep M;
    M.dim = dim;
    for (auto& d : P.arrows) M.mat.emplace_back(dim[d.tgt], dim[d.src]);
    return M;
}

}  // namespace

Rep string_module(const Presentation& P, const Word& w) {
    if (w.kind != Word::Kind::Finite) throw WordError("string modules need finite words");
    require_valid(P, w);
    auto vs = vertices_of(P, w);
    std::vector<int> dim(P.n, 0), idx;
    for (int v : vs) idx.push_back(dim[v]++);
    Rep M = empty_with_dims(P, dim);
    for (size_t j = 0; j < w.pre.size(); ++j) {
        const Letter& l = w.pre[j];
        if (!l.inv)
            M.mat[l.arrow](idx[j + 1], idx[j]) = 1;
        else
            M.mat[l.arrow](idx[j], idx[j + 1]) = 1;
    }
    return M;
}

Rep band_module(const Presentation& P, const std::vector<Letter>& band, fe lambda, int n) {
    if (lambda % field_char() == 0) throw std::invalid_argument("band parameter must be nonzero");
    if (n < 1) throw std::invalid_argument("band dimension must be positive");
    size_t s = band.size();
    std::vector<int> dim(P.n, 0), blk;
    for (size_t j = 0; j < s; ++j) {
        int v = letter_src(P, band[j]);
        blk.push_back(dim[v]);
        dim[v] += n;
    }
    Rep M = empty_with_dims(P, dim);
    for (size_t j = 0; j < s; ++j) {
        const Letter& l = band[j];
        size_t k = (j + 1) % s;
        Mat B = Mat::identity(n);
        if (j + 1 == s) {
            B = scale(B, lambda % field_char());
            for (int r = 0; r + 1 < n; ++r) B(r, r + 1) = 1;
        }
        int from = l.inv ? blk[k] : blk[j], to = l.inv ? blk[j] : blk[k];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) M.mat[l.arrow](to + r, from + c) = B(r, c);
    }
    return M;
}

namespace {

Mat hom_system(const Presentation& P, const Rep& M, const Rep& N, std::vector<int>& off) {
    off.assign(P.n + 1, 0);
    for (int i = 0; i < P.n; ++i) off[i + 1] = off[i] + N.dim[i] * M.dim[i];
    int rows = 0;
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        if (P.a_alive(a)) rows += N.dim[P.arrows[a].tgt] * M.dim[P.arrows[a].src];
    Mat E(rows, off[P.n]);
    int row = 0;
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!P.a_alive(a)) continue;
        int s = P.arrows[a].src, t = P.arrows[a].tgt;
        const Mat& Nx = N.mat[a];
        const Mat& Mx = M.mat[a];
        int ms = M.dim[s], mt = M.dim[t];
        for (int r = 0; r < N.dim[t]; ++r)
            for (int c = 0; c < ms; ++c, ++row) {
                for (int k = 0; k < N.dim[s]; ++k)
                    if (Nx(r, k)) E(row, off[s] + k * ms + c) = fadd(E(row, off[s] + k * ms + c), Nx(r, k));
                for (int k = 0; k < mt; ++k)
                    if (Mx(k, c)) E(row, off[t] + r * mt + k) = fsub(E(row, off[t] + r * mt + k), Mx(k, c));
            }
    }
    return E;
}

}  // namespace

HomSpace hom_space(const Presentation& P, const Rep& M, const Rep& N) {
    std::vector<int> off;
    Mat E = hom_system(P, M, N, off);
    Mat ns = nullspace(E);
    HomSpace H;
    H.dim = ns.c;
    for (int k = 0; k < ns.c; ++k) {
        std::vector<Mat> f;
        for (int i = 0; i < P.n; ++i) {
            Mat fi(N.dim[i], M.dim[i]);
            for (int r = 0; r < fi.r; ++r)
                for (int c = 0; c < fi.c; ++c) fi(r, c) = ns(off[i] + r * M.dim[i] + c, k);
            f.push_back(fi);
        }
        H.basis.push_back(f);
    }
    return H;
}

int hom_dim(const Presentation& P, const Rep& M, const Rep& N) {
    std::vector<int> off;
    Mat E = hom_system(P, M, N, off);
    return E.c - rank(E);
}

Mat path_matrix(const Presentation&, const Rep& M, const Path& p) {
    Mat X = Mat::identity(M.dim[p.start]);
    for (int a : p.arrows) X = M.mat[a] * X;
    return X;
}

bool is_homomorphism(const Presentation& P, const Rep& M, const Rep& N, const std::vector<Mat>& f) {
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!P.a_alive(a)) continue;
        int s = P.arrows[a].src, t = P.arrows[a].tgt;
        if (!(N.mat[a] * f[s] == f[t] * M.mat[a])) return false;
    }
    return true;
}

ModuleDescriptor descriptor_of_word(const Model& m, const Word& w) {
    ModuleDescriptor d;
    d.word = w;
    switch (w.kind) {
        case Word::Kind::Finite:
            d.kind = ModuleDescriptor::Kind::StringFinite;
            d.arc = arc_of_string(m, w);
            break;
        case Word::Kind::NString:
            d.kind = ModuleDescriptor::Kind::StringInfinite;
            d.arc = arc_of_string(m, w);
            d.flavor = classify_asymptotic(m.P, w) == Asymptotic::Expanding ? ModuleDescriptor::Flavor::Product
                                                                            : ModuleDescriptor::Flavor::DirectSum;
            break;
        case Word::Kind::ZPeriodic:
            d.kind = ModuleDescriptor::Kind::Band;
            d.arc = Arc::band();
            break;
    }
    return d;
}

ModuleDescriptor descriptor_of_arc(const Model& m, const Arc& a) {
    auto r = string_of_arc(m, a);
    if (r.in_triangulation) {
        ModuleDescriptor d;
        d.kind = ModuleDescriptor::Kind::Zero;
        d.arc = canonicalize_curve(m.g.surf, a);
        return d;
    }
    return descriptor_of_word(m, r.word);
}

ModuleDescriptor band_descriptor(fe lambda, long n) {
    if (lambda % field_char() == 0) throw std::invalid_argument("band parameter must be nonzero");
    if (n == 0) throw std::invalid_argument("band dimension must be nonzero");
    ModuleDescriptor d;
    d.kind = ModuleDescriptor::Kind::Band;
    d.arc = Arc::band();
    d.lambda = lambda % field_char();
    d.n = n;
    return d;
}

ModuleDescriptor generic_descriptor() {
    ModuleDescriptor d;
    d.kind = ModuleDescriptor::Kind::Generic;
    d.arc = Arc::band();
    return d;
}

std::string label(const Model& m, const ModuleDescriptor& d) {
    switch (d.kind) {
        case ModuleDescriptor::Kind::Zero: return "0";
        case ModuleDescriptor::Kind::StringFinite: return "M(" + to_string(m.P, d.word) + ")";
        case ModuleDescriptor::Kind::StringInfinite:
            return std::string(d.flavor == ModuleDescriptor::Flavor::Product ? "Mprod(" : "Msum(") +
                   to_string(m.P, d.word) + ")";
        case ModuleDescriptor::Kind::Band: {
            std::string n = d.n == ModuleDescriptor::kPlusInf    ? "+inf"
                            : d.n == ModuleDescriptor::kMinusInf ? "-inf"
                                                                 : std::to_string(d.n);
            return "M(" + std::to_string(d.lambda) + "," + n + ")";
        }
        case ModuleDescriptor::Kind::Generic: return "G";
    }
    return "?";
}

nlohmann::json rep_to_json(const Presentation& P, const Rep& M) {
    nlohmann::json j;
    for (int i = 0; i < P.n; ++i) j["dim"][std::to_string(i + 1)] = M.dim[i];
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < M.mat[a].r; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < M.mat[a].c; ++c) row.push_back(M.mat[a](r, c));
            rows.push_back(row);
        }
        j["mats"][P.arrows[a].name] = rows;
    }
    return j;
}

}  // namespace annulus
