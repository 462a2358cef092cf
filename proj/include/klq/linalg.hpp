#pragma once

#include <cstdint>
#include <vector>

#include "klq/bigint.hpp"

namespace klq {

// Row-major dense integer matrix used by the exact elimination routines.
// Entries come from moment-graph labels, so they start tiny; the int64
// elimination path covers nearly every instance and the cpp_int path is
// the correctness backstop.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Exact rank via fraction-free (Bareiss) elimination with row pivoting.
// Never uses floating point; overflow in the int64 path silently retries
// with arbitrary-precision integers.
int exact_rank(const IntMat& m);

// Basis of the right kernel {v : Mv = 0}, integer-scaled, deterministic:
// free columns are taken in increasing column order. Each basis vector is
// the column-echelon solution with 1 at its free column, scaled by the
// pivot product to clear denominators.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

// Exact rank of a matrix of rationals (rows are scaled to integers first).
int exact_rank_rational(const std::vector<std::vector<Rat>>& m);

} // namespace klq
