#include "annulus/kcomplex.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "annulus/strings.hpp"

namespace annulus {

int AntipathDescriptor::at(int k) const {
    if (k < (int)arrows.size()) return arrows[k];
    if (!periodic) return -1;
    int len = (int)arrows.size() - cycle_start;
    return arrows[cycle_start + (k - cycle_start) % len];
}

AntipathDescriptor antipath_from(const Presentation& P, int arrow) {
    AntipathDescriptor A;
    if (arrow < 0 || arrow >= (int)P.arrows.size() || !P.a_alive(arrow))
        throw std::invalid_argument("antipath needs a live arrow");
    A.arrows.push_back(arrow);
    for (;;) {
        int last = A.arrows.back(), nxt = -1;
        for (int b = 0; b < (int)P.arrows.size(); ++b)
            if (P.a_alive(b) && P.arrows[b].src == P.arrows[last].tgt && P.in_rel(b, last)) {
                nxt = b;
                break;
            }
        if (nxt < 0) break;
        auto it = std::find(A.arrows.begin(), A.arrows.end(), nxt);
        if (it != A.arrows.end()) {
            A.periodic = true;
            A.cycle_start = (int)(it - A.arrows.begin());
            break;
        }
        A.arrows.push_back(nxt);
    }
    return A;
}

namespace {

// arrows a out of the walk start with a^-1 prepended still a string
std::vector<int> left_candidates(const Presentation& P, const Word& w) {
    std::vector<int> out;
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        if (!P.a_alive(a) || P.arrows[a].src != w.start) continue;
        if (!w.pre.empty() && !letters_compatible(P, Letter{a, true}, w.pre.front())) continue;
        out.push_back(a);
    }
    return out;
}

std::vector<int> right_candidates(const Presentation& P, const Word& w) {
    std::vector<int> out;
    int e = word_end(P, w);
    for (int c = 0; c < (int)P.arrows.size(); ++c) {
        if (!P.a_alive(c) || P.arrows[c].src != e) continue;
        if (!w.pre.empty() && !letters_compatible(P, w.pre.back(), Letter{c, false})) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

HomotopyString homotopy_string_of(const Presentation& P, const Word& w) {
    require_valid(P, w);
    HomotopyString h;
    h.core = w;
    if (w.kind == Word::Kind::ZPeriodic) {
        h.band = true;
        return h;
    }
    auto L = left_candidates(P, w);
    if (!L.empty()) h.left = antipath_from(P, L.front());
    if (w.kind == Word::Kind::NString) {
        if (L.empty()) {
            auto runs = factorize(w);
            if (!runs.empty() && !runs.front().direct && runs.front().letters.size() <= w.pre.size()) {
                size_t cut = runs.front().letters.size();
                for (size_t k = 0; k < cut; ++k) h.core.start = letter_tgt(P, h.core.pre[k]);
                h.core.pre.erase(h.core.pre.begin(), h.core.pre.begin() + cut);
            }
        }
        return h;
    }
    auto R = right_candidates(P, w);
    if (w.pre.empty() && !h.left.empty()) std::erase(R, h.left.arrows.front());
    if (!R.empty()) h.right = antipath_from(P, R.front());
    Word c = w;
    if (h.right.empty())
        while (!c.pre.empty() && !c.pre.back().inv) c.pre.pop_back();
    if (h.left.empty()) {
        size_t k = 0;
        while (k < c.pre.size() && c.pre[k].inv) c.start = letter_tgt(P, c.pre[k++]);
        c.pre.erase(c.pre.begin(), c.pre.begin() + k);
    }
    h.core = c;
    return h;
}

std::string to_string(const Presentation& P, const HomotopyString& h) {
    auto tail = [&](const AntipathDescriptor& A) {
        std::string s;
        for (size_t k = 0; k < A.arrows.size(); ++k) {
            if (A.periodic && (int)k == A.cycle_start) s += "(";
            s += P.arrows[A.arrows[k]].name;
            if (k + 1 < A.arrows.size()) s += ",";
        }
        if (A.periodic) s += ")*";
        return s;
    };
    std::string s = "[" + tail(h.right) + "] " + to_string(P, h.core) + " [" + tail(h.left) + "]";
    return s;
}

bool PathMatrix::is_zero() const {
    for (auto& c : e)
        for (auto& [p, x] : c)
            if (x % field_char()) return false;
    return true;
}

namespace {

// first p then q, or nullopt when the composite is zero in A
std::optional<Path> concat(const Presentation& P, const Path& p, const Path& q) {
    if (p.end(P) != q.start) throw std::logic_error("path endpoints do not match");
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    if (!is_basis_path(P, r)) return std::nullopt;
    return r;
}

void add_to(PathComb& c, const Path& p, fe x) {
    fe& y = c[p];
    y = fadd(y, x);
    if (!y) c.erase(p);
}

}  // namespace

PathMatrix compose(const Presentation& P, const PathMatrix& B, const PathMatrix& A) {
    if (B.cols != A.rows) throw std::invalid_argument("path matrix size mismatch");
    PathMatrix C(B.rows, A.cols);
    for (int r = 0; r < B.rows; ++r)
        for (int m = 0; m < B.cols; ++m)
            for (auto& [bp, bx] : B(r, m))
                for (int c = 0; c < A.cols; ++c)
                    for (auto& [ap, ax] : A(m, c))
                        if (auto q = concat(P, bp, ap)) add_to(C(r, c), *q, fmul(bx, ax));
    return C;
}

namespace {

Path reversed_run(const Presentation& P, const std::vector<Letter>& inv_run) {
    // an inverse run walked from u to v is the path from v to u
    Path p{letter_tgt(P, inv_run.back()), {}};
    for (auto it = inv_run.rbegin(); it != inv_run.rend(); ++it) p.arrows.push_back(it->arrow);
    return p;
}

Path direct_run(const Presentation& P, const std::vector<Letter>& run) {
    Path p{letter_src(P, run.front()), {}};
    for (auto& l : run) p.arrows.push_back(l.arrow);
    return p;
}

Path checked(const Presentation& P, Path p) {
    if (!is_basis_path(P, p)) throw std::logic_error("differential entry is zero in the algebra");
    return p;
}

struct Builder {
    const Presentation& P;
    StringComplexWindow X;
    // summand index within a degree, and the node it came from
    std::vector<std::vector<int>> node_of;

    Builder(const Presentation& P_, int depth) : P(P_) {
        X.depth = depth;
        X.terms.assign(depth + 1, {});
        node_of.assign(depth + 1, {});
    }
    int add(int k, int v) {
        X.terms[k].push_back(v);
        X.nodes.push_back({-k, v});
        node_of[k].push_back((int)X.nodes.size() - 1);
        return (int)X.terms[k].size() - 1;
    }
    struct Entry {
        int k, src, tgt;
        Path p;
        fe x;
    };
    std::vector<Entry> entries;
    void link(int k, int src, int tgt, Path p, fe x = 1, bool edge = true) {
        entries.push_back({k, src, tgt, checked(P, std::move(p)), x});
        if (edge) X.edges.push_back({node_of[k][src], node_of[k - 1][tgt], to_string(P, entries.back().p)});
    }
    StringComplexWindow finish() {
        X.d.assign(X.depth + 1, PathMatrix());
        for (int k = 1; k <= X.depth; ++k) X.d[k] = PathMatrix((int)X.terms[k - 1].size(), (int)X.terms[k].size());
        for (auto& e : entries)
            if (e.k <= X.depth) add_to(X.d[e.k](e.tgt, e.src), e.p, e.x);
        return X;
    }
};

}  // namespace

StringComplexWindow string_complex(const Presentation& P, const HomotopyString& h, int depth, int core_tops) {
    if (h.band) throw std::invalid_argument("bands use band_complex");
    if (depth < 1) throw WindowTooShallow("window depth must be at least 1");
    Word w = h.core;
    bool open = w.kind == Word::Kind::NString;
    if (open) {
        // walk far enough to see core_tops tops, then stop right after an inverse run
        auto ls = expand(w, w.pre.size() + (size_t)(core_tops + 2) * w.period.size() * 2);
        std::vector<Letter> cut;
        int tops = 0;
        for (size_t k = 0; k < ls.size(); ++k) {
            cut.push_back(ls[k]);
            bool ends_inverse_run = ls[k].inv && (k + 1 == ls.size() || !ls[k + 1].inv);
            if (ends_inverse_run && ++tops >= core_tops) break;
        }
        w = Word{Word::Kind::Finite, w.start, cut, {}};
    }
    auto runs = factorize(w);

    Builder b(P, depth);
    std::vector<int> tops;
    // walk start
    size_t r0 = 0;
    std::optional<Path> lead;  // q_0 path from the first top back to the walk start
    if (!runs.empty() && !runs[0].direct) {
        lead = reversed_run(P, runs[0].letters);
        r0 = 1;
        tops.push_back(b.add(0, lead->start));
    } else {
        tops.push_back(b.add(0, w.start));
        lead = Path{w.start, {}};
    }
    // middle: direct run to a valley, inverse run up to the next top
    std::optional<Path> tail;  // p_n from the last top to the walk end
    for (size_t r = r0; r < runs.size(); r += 2) {
        Path p = direct_run(P, runs[r].letters);
        if (r + 1 >= runs.size()) {
            tail = p;
            break;
        }
        Path q = reversed_run(P, runs[r + 1].letters);
        int v = b.add(1, p.end(P));
        int t = b.add(0, q.start);
        b.link(1, v, tops.back(), p);
        b.link(1, v, t, q);
        tops.push_back(t);
    }
    if (!tail) tail = Path{b.X.terms[0][tops.back()], {}};

    auto hang = [&](const AntipathDescriptor& A, int top, const Path& first) {
        if (A.empty()) return;
        int prev = top;
        for (int k = 0; k < depth; ++k) {
            int a = A.at(k);
            if (a < 0) break;
            int s = b.add(k + 1, P.arrows[a].tgt);
            Path p = k == 0 ? first : Path{P.arrows[a].src, {}};
            p.arrows.push_back(a);
            b.link(k + 1, s, prev, p);
            prev = s;
        }
    };
    hang(h.left, tops.front(), *lead);
    if (!open) hang(h.right, tops.back(), *tail);
    b.X.open = open;
    return b.finish();
}

StringComplexWindow band_complex(const Presentation& P, const Word& band, fe lambda, int n, int depth) {
    if (band.kind != Word::Kind::ZPeriodic) throw std::invalid_argument("band_complex needs a band");
    if (lambda % field_char() == 0) throw std::invalid_argument("band parameter must be nonzero");
    if (n < 1) throw std::invalid_argument("band dimension must be positive");
    if (depth < 1) throw WindowTooShallow("window depth must be at least 1");
    const auto& L = band.period;
    size_t s = L.size();
    // rotate to start at a top: the previous letter inverse, the next direct
    size_t rot = s;
    for (size_t i = 0; i < s; ++i)
        if (L[(i + s - 1) % s].inv && !L[i].inv) {
            rot = i;
            break;
        }
    if (rot == s) throw std::invalid_argument("band needs direct and inverse letters");
    std::vector<Letter> ls(L.begin() + rot, L.end());
    ls.insert(ls.end(), L.begin(), L.begin() + rot);
    size_t marked = (s - 1 + s - rot) % s;  // the letter carrying the Jordan block
    Word lin{Word::Kind::Finite, letter_src(P, ls.front()), ls, {}};
    auto runs = factorize(lin);
    int m = (int)runs.size() / 2;

    Builder b(P, depth);
    std::vector<Path> pp(m), qq(m);
    std::vector<bool> mark_p(m, false), mark_q(m, false);
    size_t pos = 0;
    for (int j = 0; j < m; ++j) {
        pp[j] = direct_run(P, runs[2 * j].letters);
        mark_p[j] = marked >= pos && marked < pos + runs[2 * j].letters.size();
        pos += runs[2 * j].letters.size();
        qq[j] = reversed_run(P, runs[2 * j + 1].letters);
        mark_q[j] = marked >= pos && marked < pos + runs[2 * j + 1].letters.size();
        pos += runs[2 * j + 1].letters.size();
    }
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < m; ++j) {
            b.add(0, pp[j].start);
            b.add(1, pp[j].end(P));
        }
    // copy c of the j-th top (or valley) sits at index c*m + j
    auto T = [&](int j, int c) { return c * m + j; };
    lambda %= field_char();
    for (int j = 0; j < m; ++j) {
        int nj = (j + 1) % m;
        for (int c = 0; c < n; ++c) {
            bool edge = c == 0;
            if (mark_p[j]) {
                b.link(1, T(j, c), T(j, c), pp[j], lambda, edge);
                if (c + 1 < n) b.link(1, T(j, c + 1), T(j, c), pp[j], 1, false);
            } else {
                b.link(1, T(j, c), T(j, c), pp[j], 1, edge);
            }
            // the sign on the q entries keeps the cokernel at parameter lambda rather than -lambda
            fe neg = field_char() - 1;
            if (mark_q[j]) {
                b.link(1, T(j, c), T(nj, c), qq[j], fmul(neg, finv(lambda)), edge);
                if (c + 1 < n) b.link(1, T(j, c), T(nj, c + 1), qq[j], neg, false);
            } else {
                b.link(1, T(j, c), T(nj, c), qq[j], neg, edge);
            }
        }
    }
    return b.finish();
}

namespace {

struct PathIndex {
    // paths[j][i]: basis paths from j to i
    std::vector<std::vector<std::vector<Path>>> paths;
    std::map<Path, int> pos;
    explicit PathIndex(const Presentation& P) : paths(P.n, std::vector<std::vector<Path>>(P.n)) {
        for (auto& p : enumerate_path_basis(P)) {
            auto& v = paths[p.start][p.end(P)];
            pos[p] = (int)v.size();
            v.push_back(p);
        }
    }
};

std::vector<int> sum_dims(const Presentation& P, const PathIndex& I, const std::vector<int>& verts) {
    std::vector<int> dim(P.n, 0);
    for (int v : verts)
        for (int x = 0; x < P.n; ++x) dim[x] += (int)I.paths[v][x].size();
    return dim;
}

// block offset of summand s at vertex x
int offset(const PathIndex& I, const std::vector<int>& verts, int s, int x) {
    int o = 0;
    for (int k = 0; k < s; ++k) o += (int)I.paths[verts[k]][x].size();
    return o;
}

Rep proj_sum(const Presentation& P, const PathIndex& I, const std::vector<int>& verts) {
    Rep M;
    M.dim = sum_dims(P, I, verts);
    for (auto& a : P.arrows) M.mat.emplace_back(M.dim[a.tgt], M.dim[a.src]);
    for (int ai = 0; ai < (int)P.arrows.size(); ++ai) {
        if (!P.a_alive(ai)) continue;
        int x = P.arrows[ai].src, y = P.arrows[ai].tgt;
        for (int s = 0; s < (int)verts.size(); ++s) {
            int ox = offset(I, verts, s, x), oy = offset(I, verts, s, y);
            auto& src = I.paths[verts[s]][x];
            for (int c = 0; c < (int)src.size(); ++c)
                if (auto q = concat(P, src[c], Path{x, {ai}})) M.mat[ai](oy + I.pos.at(*q), ox + c) = 1;
        }
    }
    return M;
}

// the map of a path matrix at vertex x
Mat at_vertex(const Presentation& P, const PathIndex& I, const PathMatrix& D, const std::vector<int>& src,
              const std::vector<int>& tgt, int x) {
    int rows = sum_dims(P, I, tgt)[x], cols = sum_dims(P, I, src)[x];
    Mat A(rows, cols);
    for (int c = 0; c < D.cols; ++c) {
        int oc = offset(I, src, c, x);
        auto& basis = I.paths[src[c]][x];
        for (int r = 0; r < D.rows; ++r) {
            int orow = offset(I, tgt, r, x);
            for (auto& [p, coef] : D(r, c))
                for (int k = 0; k < (int)basis.size(); ++k)
                    if (auto q = concat(P, p, basis[k])) {
                        fe& y = A(orow + I.pos.at(*q), oc + k);
                        y = fadd(y, coef);
                    }
        }
    }
    return A;
}

}  // namespace

bool differential_squares_to_zero(const Presentation& P, const StringComplexWindow& X) {
    for (int k = 2; k <= X.depth; ++k)
        if (!compose(P, X.d[k - 1], X.d[k]).is_zero()) return false;
    return true;
}

int cohomology_dim(const Presentation& P, const StringComplexWindow& X, int k) {
    if (k < 1 || k >= X.depth) throw WindowTooShallow("cohomology degree outside the window");
    PathIndex I(P);
    int h = 0;
    for (int x = 0; x < P.n; ++x) {
        if (!P.v_alive(x)) continue;
        Mat out = at_vertex(P, I, X.d[k], X.terms[k], X.terms[k - 1], x);
        Mat in = at_vertex(P, I, X.d[k + 1], X.terms[k + 1], X.terms[k], x);
        h += out.c - rank(out) - rank(in);
    }
    return h;
}

Rep top_cohomology(const Presentation& P, const StringComplexWindow& X) {
    PathIndex I(P);
    Rep Y = proj_sum(P, I, X.terms[0]);
    Rep H;
    H.dim.assign(P.n, 0);
    std::vector<Mat> proj(P.n), lift(P.n);
    for (int x = 0; x < P.n; ++x) {
        Mat im = X.depth >= 1 ? colspace(at_vertex(P, I, X.d[1], X.terms[1], X.terms[0], x)) : Mat(Y.dim[x], 0);
        int r = im.c;
        Mat full = hstack(im, Mat::identity(Y.dim[x]));
        Mat red = full;
        auto piv = rref(red);
        Mat basis(Y.dim[x], 0), comp(Y.dim[x], 0);
        for (int p : piv) {
            Mat col(Y.dim[x], 1);
            for (int i = 0; i < Y.dim[x]; ++i) col(i, 0) = full(i, p);
            basis = hstack(basis, col);
            if (p >= r) comp = hstack(comp, col);
        }
        H.dim[x] = comp.c;
        Mat inv = basis.c ? inverse(basis) : Mat(0, 0);
        Mat pr(comp.c, Y.dim[x]);
        for (int i = 0; i < comp.c; ++i)
            for (int j = 0; j < Y.dim[x]; ++j) pr(i, j) = inv(r + i, j);
        proj[x] = pr;
        lift[x] = comp;
    }
    for (int a = 0; a < (int)P.arrows.size(); ++a) {
        int s = P.arrows[a].src, t = P.arrows[a].tgt;
        if (!P.a_alive(a))
            H.mat.emplace_back(H.dim[t], H.dim[s]);
        else
            H.mat.push_back(proj[t] * Y.mat[a] * lift[s]);
    }
    return H;
}

bool isomorphic(const Presentation& P, const Rep& X, const Rep& Y, std::uint32_t seed) {
    if (X.dim != Y.dim) return false;
    if (X.total() == 0) return true;
    auto H = hom_space(P, X, Y);
    if (H.dim == 0) return false;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<fe> u(0, field_char() - 1);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Mat> f;
        for (int x = 0; x < P.n; ++x) f.emplace_back(Y.dim[x], X.dim[x]);
        for (auto& g : H.basis) {
            fe c = u(rng);
            for (int x = 0; x < P.n; ++x) f[x] = f[x] + scale(g[x], c);
        }
        bool ok = true;
        for (int x = 0; x < P.n && ok; ++x)
            if (X.dim[x] && !is_invertible(f[x])) ok = false;
        if (ok) return true;
    }
    return false;
}

ComplexCheck check_complex(const Presentation& P, const StringComplexWindow& X, const Rep& M) {
    ComplexCheck c;
    c.d_squared_zero = differential_squares_to_zero(P, X);
    c.h0_iso = isomorphic(P, top_cohomology(P, X), M);
    c.exact_below = true;
    for (int k = 1; k < X.depth; ++k)
        if (cohomology_dim(P, X, k) != 0) c.exact_below = false;
    return c;
}

std::string to_string(StandardMapWitness::Kind k) {
    switch (k) {
        case StandardMapWitness::Kind::GraphMap: return "graph";
        case StandardMapWitness::Kind::SingletonSingle: return "single";
        case StandardMapWitness::Kind::SingletonDouble: return "double";
        case StandardMapWitness::Kind::QuasiGraph: return "quasi-graph";
    }
    return "?";
}

namespace {

// coordinates of maps of a fixed shape: for each degree k in [lo, hi], components from X^{-k} to Y^{-k+shift}
struct MapSpace {
    struct Slot {
        int k, c, r;
        const std::vector<Path>* paths;
        int base;
    };
    std::vector<Slot> slots;
    std::map<std::tuple<int, int, int>, int> slot_of;
    int size = 0;
    MapSpace(const PathIndex& I, const StringComplexWindow& X, const StringComplexWindow& Y, int lo, int hi,
             int shift) {
        for (int k = lo; k <= hi; ++k) {
            int ky = k - shift;
            if (k > X.depth || ky < 0 || ky > Y.depth) continue;
            for (int c = 0; c < (int)X.terms[k].size(); ++c)
                for (int r = 0; r < (int)Y.terms[ky].size(); ++r) {
                    auto* ps = &I.paths[Y.terms[ky][r]][X.terms[k][c]];
                    if (ps->empty()) continue;
                    slot_of[{k, c, r}] = (int)slots.size();
                    slots.push_back({k, c, r, ps, size});
                    size += (int)ps->size();
                }
        }
    }
    // coordinate of path p in component (k, c, r), or -1
    int index(const PathIndex& I, int k, int c, int r, const Path& p) const {
        auto it = slot_of.find({k, c, r});
        if (it == slot_of.end()) return -1;
        return slots[it->second].base + I.pos.at(p);
    }
};

}  // namespace

StandardMaps find_standard_maps(const Presentation& P, const StringComplexWindow& X, const StringComplexWindow& Y) {
    int D = X.depth;
    if (D < 2) throw WindowTooShallow("standard maps need windows of depth at least 2");
    if (Y.depth < D) throw WindowTooShallow("target window shallower than the source window");
    PathIndex I(P);
    MapSpace F(I, X, Y, 1, D, 1);  // f^{-k}: X^{-k} -> Y^{-k+1}
    MapSpace H(I, X, Y, 0, D, 0);  // h^{-k}: X^{-k} -> Y^{-k}
    MapSpace C(I, X, Y, 2, D, 2);  // constraints in Hom(X^{-k}, Y^{-k+2})

    Mat Cm(C.size, F.size);
    for (auto& s : F.slots)
        for (int j = 0; j < (int)s.paths->size(); ++j) {
            const Path& beta = (*s.paths)[j];
            int col = s.base + j;
            // - d_Y f^{-k}
            if (s.k >= 2)
                for (int t = 0; t < (int)Y.terms[s.k - 2].size(); ++t)
                    for (auto& [dp, dx] : Y.d[s.k - 1](t, s.r))
                        if (auto q = concat(P, dp, beta)) {
                            int row = C.index(I, s.k, s.c, t, *q);
                            Cm(row, col) = fsub(Cm(row, col), dx);
                        }
            // + f^{-k} d_X
            if (s.k + 1 <= D)
                for (int c2 = 0; c2 < (int)X.terms[s.k + 1].size(); ++c2)
                    for (auto& [dp, dx] : X.d[s.k + 1](s.c, c2))
                        if (auto q = concat(P, beta, dp)) {
                            int row = C.index(I, s.k + 1, c2, s.r, *q);
                            Cm(row, col) = fadd(Cm(row, col), dx);
                        }
        }

    Mat Hm(F.size, H.size);
    for (auto& s : H.slots)
        for (int j = 0; j < (int)s.paths->size(); ++j) {
            const Path& eta = (*s.paths)[j];
            int col = s.base + j;
            if (s.k >= 1)
                for (int t = 0; t < (int)Y.terms[s.k - 1].size(); ++t)
                    for (auto& [dp, dx] : Y.d[s.k](t, s.r))
                        if (auto q = concat(P, dp, eta)) {
                            int row = F.index(I, s.k, s.c, t, *q);
                            Hm(row, col) = fadd(Hm(row, col), dx);
                        }
            if (s.k + 1 <= D)
                for (int c2 = 0; c2 < (int)X.terms[s.k + 1].size(); ++c2)
                    for (auto& [dp, dx] : X.d[s.k + 1](s.c, c2))
                        if (auto q = concat(P, eta, dp)) {
                            int row = F.index(I, s.k + 1, c2, s.r, *q);
                            Hm(row, col) = fadd(Hm(row, col), dx);
                        }
        }
    if (!(Cm * Hm).is_zero()) throw std::logic_error("null-homotopic maps fail the chain condition");

    StandardMaps out;
    Mat Z = nullspace(Cm);
    Mat B = colspace(Hm);
    out.chain_dim = Z.c;
    out.null_dim = B.c;

    // sparse basis of the chain maps
    Mat Zt = transpose(Z);
    rref(Zt);
    std::vector<Mat> cand;
    for (int i = 0; i < Zt.r; ++i) {
        Mat v(F.size, 1);
        for (int j = 0; j < F.size; ++j) v(j, 0) = Zt(i, j);
        cand.push_back(v);
    }
    auto components = [&](const Mat& v) {
        std::vector<StandardMapWitness::Component> comps;
        for (auto& s : F.slots) {
            PathComb pc;
            for (int j = 0; j < (int)s.paths->size(); ++j)
                if (v(s.base + j, 0)) pc[(*s.paths)[j]] = v(s.base + j, 0);
            if (!pc.empty()) comps.push_back({-s.k, s.c, s.r, pc});
        }
        return comps;
    };
    std::vector<size_t> order(cand.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return components(cand[a]).size() < components(cand[b]).size();
    });

    Mat span = B;
    int rk = rank(B);
    for (size_t i : order) {
        Mat next = hstack(span, cand[i]);
        int r2 = rank(next);
        if (r2 == rk) continue;
        StandardMapWitness w;
        w.components = components(cand[i]);
        bool identity = false;
        for (auto& c : w.components)
            for (auto& [p, x] : c.paths)
                if (p.arrows.empty()) identity = true;
        bool shared = false;
        for (size_t j = 0; j < cand.size() && !shared; ++j) {
            if (j == i) continue;
            if (rank(hstack(B, cand[j])) == rank(B)) continue;
            if (rank(hstack(hstack(B, cand[i]), cand[j])) == rank(hstack(B, cand[i]))) shared = true;
        }
        if (identity || w.components.size() > 2)
            w.kind = StandardMapWitness::Kind::GraphMap;
        else if (shared)
            w.kind = StandardMapWitness::Kind::QuasiGraph;
        else
            w.kind = w.components.size() == 1 ? StandardMapWitness::Kind::SingletonSingle
                                              : StandardMapWitness::Kind::SingletonDouble;
        out.basis.push_back(std::move(w));
        span = next;
        rk = r2;
    }
    return out;
}

bool lift_predicate_check(const ExtOracle& E, const Word& w, const Word& band, fe lambda, int n) {
    const Presentation& P = E.presentation();
    Rep M = string_module(P, w);
    Rep B1 = band_module(P, band.period, lambda, 1), Bn = band_module(P, band.period, lambda, n);
    auto pm = E.prepare(M);
    bool fwd = (E.ext1(pm, Bn) == 0) == (E.ext1(pm, B1) == 0);
    bool bwd = (E.ext1(Bn, M) == 0) == (E.ext1(B1, M) == 0);
    return fwd && bwd;
}

namespace {

std::string proj_name(int v) { return "P(" + std::to_string(v + 1) + ")"; }

// nodes in printed order (right to left along the walk) forming a chain, when possible
std::vector<int> chain_order(const StringComplexWindow& X) {
    int n = (int)X.nodes.size();
    std::vector<std::vector<int>> adj(n);
    for (auto& e : X.edges) adj[e.from].push_back(e.to), adj[e.to].push_back(e.from);
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (!adj[i].empty() && adj[i].size() == 1) start = i;
    if (start < 0) start = 0;
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int cur = start; cur >= 0 && !seen[cur];) {
        seen[cur] = 1;
        order.push_back(cur);
        int nxt = -1;
        for (int y : adj[cur])
            if (!seen[y]) {
                nxt = y;
                break;
            }
        cur = nxt;
    }
    return order;
}

const UnfoldedEdge* edge_between(const StringComplexWindow& X, int a, int b) {
    for (auto& e : X.edges)
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return &e;
    return nullptr;
}

}  // namespace

std::string render_ascii(const Presentation&, const StringComplexWindow& X) {
    auto order = chain_order(X);
    std::string deg, line;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& nd = X.nodes[order[i]];
        std::string tok = proj_name(nd.vertex);
        while (deg.size() < line.size()) deg += ' ';
        deg += std::to_string(nd.degree);
        line += tok;
        if (i + 1 < order.size()) {
            auto* e = edge_between(X, order[i], order[i + 1]);
            std::string lab = e ? e->label : "?";
            line += (e && e->from == order[i]) ? " -" + lab + "-> " : " <-" + lab + "- ";
        }
    }
    std::ostringstream os;
    os << deg << "\n" << line << "\n";
    if (X.edges.size() >= order.size() && order.size() > 1) os << "(closed up into a cycle)\n";
    return os.str();
}

std::string render_svg(const Presentation&, const StringComplexWindow& X) {
    auto order = chain_order(X);
    int lo = 0;
    for (auto& nd : X.nodes) lo = std::min(lo, nd.degree);
    int W = 40 + 110 * (int)order.size(), Hgt = 80 + 70 * (-lo);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hgt << "\">\n";
    auto xy = [&](size_t i) {
        const auto& nd = X.nodes[order[i]];
        return std::pair<int, int>{40 + 110 * (int)i, 40 + 70 * (-nd.degree)};
    };
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        auto* e = edge_between(X, order[i], order[i + 1]);
        auto [x1, y1] = xy(i);
        auto [x2, y2] = xy(i + 1);
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"black\"/>\n";
        if (e)
            os << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 - 6 << "\" font-size=\"12\">" << e->label
               << (e->from == order[i] ? " &#8594;" : " &#8592;") << "</text>\n";
    }
    for (size_t i = 0; i < order.size(); ++i) {
        auto [x, y] = xy(i);
        const auto& nd = X.nodes[order[i]];
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\"/>\n";
        os << "<text x=\"" << x - 14 << "\" y=\"" << y + 18 << "\" font-size=\"12\">" << proj_name(nd.vertex)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace annulus
