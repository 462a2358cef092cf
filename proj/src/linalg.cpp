#include "klq/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace klq {

namespace {

struct Int64Overflow {};

inline long long mul_ck(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}
inline long long sub_ck(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}

// Bareiss forward elimination; entries remain minors of the input, each
// division is exact. Column skipping handles rank-deficient columns.
template <class T, class Mul, class Sub>
int bareiss_rank(std::vector<T>& a, int rows, int cols, Mul mul, Sub sub) {
    auto at = [&](int r, int c) -> T& { return a[static_cast<size_t>(r) * cols + c]; };
    T prev = T(1);
    int piv_row = 0;
    for (int col = 0; col < cols && piv_row < rows; ++col) {
        // smallest nonzero pivot keeps the minors small
        int best = -1;
        for (int r = piv_row; r < rows; ++r) {
            if (at(r, col) == T(0)) continue;
            if (best < 0) { best = r; continue; }
            T x = at(r, col) < T(0) ? T(-at(r, col)) : at(r, col);
            T y = at(best, col) < T(0) ? T(-at(best, col)) : at(best, col);
            if (x < y) best = r;
        }
        if (best < 0) continue;
        if (best != piv_row)
            for (int c = col; c < cols; ++c) std::swap(at(best, c), at(piv_row, c));
        const T p = at(piv_row, col);
        for (int r = piv_row + 1; r < rows; ++r) {
            const T f = at(r, col);
            if (f == T(0)) {
                if (prev != T(1))
                    for (int c = col + 1; c < cols; ++c)
                        at(r, c) = mul(at(r, c), p) / prev;
                else
                    for (int c = col + 1; c < cols; ++c)
                        at(r, c) = mul(at(r, c), p);
            } else {
                for (int c = col + 1; c < cols; ++c)
                    at(r, c) = sub(mul(at(r, c), p), mul(f, at(piv_row, c))) / prev;
            }
            at(r, col) = T(0);
        }
        prev = p;
        ++piv_row;
    }
    return piv_row;
}

} // namespace

int exact_rank(const IntMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        std::vector<long long> a = m.a;
        return bareiss_rank<long long>(a, m.rows, m.cols, mul_ck, sub_ck);
    } catch (const Int64Overflow&) {
        std::vector<Int> a(m.a.begin(), m.a.end());
        return bareiss_rank<Int>(
            a, m.rows, m.cols, [](const Int& x, const Int& y) { return Int(x * y); },
            [](const Int& x, const Int& y) { return Int(x - y); });
    }
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
    const int rows = m.rows, cols = m.cols;
    // rational RREF; only run on small systems (solution bases, rank checks
    // of evaluation maps), so plain cpp_rational arithmetic is fine
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = Rat(m.at(r, c));

    std::vector<int> pivot_col;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][c] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[pr]);
        const Rat inv = Rat(1) / a[pr][c];
        for (int j = c; j < cols; ++j) a[pr][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][c] == 0) continue;
            const Rat f = a[r][c];
            for (int j = c; j < cols; ++j) a[r][j] -= f * a[pr][j];
        }
        pivot_col.push_back(c);
        ++pr;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -a[k][free];
        // clear denominators for an integer basis vector
        Int scale = 1;
        for (const Rat& x : v) {
            Int den = boost::multiprecision::denominator(x);
            Int g = boost::multiprecision::gcd(scale, den);
            scale = scale / g * den;
        }
        std::vector<Int> iv(cols);
        for (int c = 0; c < cols; ++c) {
            Rat scaled = v[c] * Rat(scale);
            iv[c] = boost::multiprecision::numerator(scaled);
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

int exact_rank_rational(const std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<Int> a(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        Int lcm = 1;
        for (int c = 0; c < cols; ++c) {
            Int den = boost::multiprecision::denominator(m[r][c]);
            Int g = boost::multiprecision::gcd(lcm, den);
            lcm = lcm / g * den;
        }
        for (int c = 0; c < cols; ++c) {
            Rat scaled = m[r][c] * Rat(lcm);
            a[static_cast<size_t>(r) * cols + c] = boost::multiprecision::numerator(scaled);
        }
    }
    return bareiss_rank<Int>(
        a, rows, cols, [](const Int& x, const Int& y) { return Int(x * y); },
        [](const Int& x, const Int& y) { return Int(x - y); });
}

} // namespace klq
