#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace annulus {

// Prime field F_l, l set once at startup (default 7).
using fe = std::uint32_t;

void set_field(std::uint32_t l);
std::uint32_t field_char();

inline fe fadd(fe a, fe b) {
    fe s = a + b;
    return s >= field_char() ? s - field_char() : s;
}
inline fe fsub(fe a, fe b) { return a >= b ? a - b : a + field_char() - b; }
inline fe fmul(fe a, fe b) { return (fe)((std::uint64_t)a * b % field_char()); }
inline fe fneg(fe a) { return a == 0 ? 0 : field_char() - a; }
fe finv(fe a);
fe fnorm(long long v);

struct Mat {
    int r = 0, c = 0;
    std::vector<fe> a;
    Mat() = default;
    Mat(int r_, int c_) : r(r_), c(c_), a((size_t)r_ * c_, 0) {}
    fe& operator()(int i, int j) { return a[(size_t)i * c + j]; }
    fe operator()(int i, int j) const { return a[(size_t)i * c + j]; }
    static Mat identity(int n);
    bool is_zero() const;
    bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat scale(const Mat& x, fe s);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);
// Columns form a basis of {x : m x = 0}.
Mat nullspace(const Mat& m);
// Columns form a basis of the column space.
Mat colspace(const Mat& m);
// Solve m x = b (b a column block); throws if inconsistent.
Mat solve(const Mat& m, const Mat& b);
bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);

std::string to_string(const Mat& m);

}  // namespace annulus
