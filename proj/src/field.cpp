#include "annulus/field.hpp"

#include <sstream>

namespace annulus {

namespace {
std::uint32_t g_char = 7;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

void set_field(std::uint32_t l) {
    if (!is_prime(l) || l > 65521) throw std::invalid_argument("field characteristic must be a prime below 65536");
    g_char = l;
}

std::uint32_t field_char() { return g_char; }

fe finv(fe a) {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat
    fe r = 1, b = a;
    std::uint32_t e = g_char - 2;
    while (e) {
        if (e & 1) r = fmul(r, b);
        b = fmul(b, b);
        e >>= 1;
    }
    return r;
}

fe fnorm(long long v) {
    long long m = v % (long long)g_char;
    if (m < 0) m += g_char;
    return (fe)m;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (fe v : a)
        if (v) return false;
    return true;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.c != y.r) throw std::invalid_argument("matrix shape mismatch in product");
    Mat z(x.r, y.c);
    const std::uint64_t p = field_char();
    std::vector<std::uint64_t> acc(y.c);
    for (int i = 0; i < x.r; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < x.c; ++k) {
            fe v = x(i, k);
            if (!v) continue;
            const fe* row = &y.a[(size_t)k * y.c];
            for (int j = 0; j < y.c; ++j) acc[j] += (std::uint64_t)v * row[j];
            if ((k & 1023) == 1023)
                for (auto& t : acc) t %= p;
        }
        for (int j = 0; j < y.c; ++j) z(i, j) = (fe)(acc[j] % p);
    }
    return z;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.r != y.r || x.c != y.c) throw std::invalid_argument("matrix shape mismatch in sum");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = fadd(z.a[i], y.a[i]);
    return z;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.r != y.r || x.c != y.c) throw std::invalid_argument("matrix shape mismatch in difference");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = fsub(z.a[i], y.a[i]);
    return z;
}

Mat scale(const Mat& x, fe s) {
    Mat z = x;
    for (auto& v : z.a) v = fmul(v, s);
    return z;
}

Mat transpose(const Mat& x) {
    Mat z(x.c, x.r);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
    return z;
}

Mat hstack(const Mat& x, const Mat& y) {
    if (x.r != y.r) throw std::invalid_argument("hstack row mismatch");
    Mat z(x.r, x.c + y.c);
    for (int i = 0; i < x.r; ++i) {
        for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.c; ++j) z(i, x.c + j) = y(i, j);
    }
    return z;
}

Mat vstack(const Mat& x, const Mat& y) {
    if (x.c != y.c) throw std::invalid_argument("vstack column mismatch");
    Mat z(x.r + y.r, x.c);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
    return z;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.c && row < m.r; ++col) {
        int sel = -1;
        for (int i = row; i < m.r; ++i)
            if (m(i, col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.c; ++j) std::swap(m(sel, j), m(row, j));
        fe inv = finv(m(row, col));
        fe* pr = &m.a[(size_t)row * m.c];
        for (int j = col; j < m.c; ++j) pr[j] = fmul(pr[j], inv);
        for (int i = 0; i < m.r; ++i) {
            if (i == row) continue;
            fe f = m(i, col);
            if (!f) continue;
            fe* pi = &m.a[(size_t)i * m.c];
            fe nf = fneg(f);
            for (int j = col; j < m.c; ++j)
                if (pr[j]) pi[j] = fadd(pi[j], fmul(nf, pr[j]));
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

int rank(Mat m) { return (int)rref(m).size(); }

Mat nullspace(const Mat& m) {
    Mat e = m;
    auto piv = rref(e);
    std::vector<char> is_piv(m.c, 0);
    for (int c : piv) is_piv[c] = 1;
    int nfree = m.c - (int)piv.size();
    Mat ns(m.c, nfree);
    int k = 0;
    for (int f = 0; f < m.c; ++f) {
        if (is_piv[f]) continue;
        ns(f, k) = 1;
        for (size_t r = 0; r < piv.size(); ++r) ns(piv[r], k) = fneg(e((int)r, f));
        ++k;
    }
    return ns;
}

Mat colspace(const Mat& m) {
    Mat t = transpose(m);
    auto piv = rref(t);
    Mat out(m.r, (int)piv.size());
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < m.r; ++i) out(i, (int)k) = t((int)k, i);
    return out;
}

Mat solve(const Mat& m, const Mat& b) {
    Mat aug = hstack(m, b);
    auto piv = rref(aug);
    Mat x(m.c, b.c);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= m.c) throw std::runtime_error("inconsistent linear system");
        for (int j = 0; j < b.c; ++j) x(piv[r], j) = aug((int)r, m.c + j);
    }
    return x;
}

bool is_invertible(const Mat& m) { return m.r == m.c && rank(m) == m.r; }

Mat inverse(const Mat& m) {
    if (!is_invertible(m)) throw std::domain_error("singular matrix");
    return solve(m, Mat::identity(m.r));
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.r; ++i) {
        os << (i ? ";" : "");
        for (int j = 0; j < m.c; ++j) os << (j ? " " : "") << m(i, j);
    }
    os << "]";
    return os.str();
}

}  // namespace annulus
