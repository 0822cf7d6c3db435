#include "toric/lattice.hpp"

#include <limits>

namespace toric {

std::vector<std::vector<bigint>> integer_kernel_exact(const IntMatrix& A) {
    const std::size_t m = A.rows, n = A.cols;

    // M starts as A, U as the identity; column operations keep A*U = M.
    std::vector<std::vector<bigint>> M(m, std::vector<bigint>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M[i][j] = A.at(i, j);
    std::vector<std::vector<bigint>> U(n, std::vector<bigint>(n, 0));
    for (std::size_t j = 0; j < n; ++j) U[j][j] = 1;

    auto col_axpy = [&](std::size_t dst, std::size_t src, const bigint& q) {
        // column dst -= q * column src
        for (std::size_t i = 0; i < m; ++i) M[i][dst] -= q * M[i][src];
        for (std::size_t i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(M[i][a], M[i][b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
    };

    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < m && pivot_col < n; ++r) {
        // Euclidean elimination in row r over columns >= pivot_col
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = pivot_col; j < n; ++j) {
                if (M[r][j] == 0) continue;
                if (best == n || abs(M[r][j]) < abs(M[r][best])) best = j;
            }
            if (best == n) break; // row r already zero on active columns
            bool others = false;
            for (std::size_t j = pivot_col; j < n; ++j) {
                if (j == best || M[r][j] == 0) continue;
                bigint q = M[r][j] / M[r][best];
                if (q != 0) col_axpy(j, best, q);
                if (M[r][j] != 0) others = true;
            }
            if (!others) {
                col_swap(pivot_col, best);
                ++pivot_col;
                break;
            }
        }
    }

    std::vector<std::vector<bigint>> basis;
    for (std::size_t j = pivot_col; j < n; ++j) {
        std::vector<bigint> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = U[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<long long>> integer_kernel(const IntMatrix& A) {
    auto exact = integer_kernel_exact(A);
    std::vector<std::vector<long long>> out;
    out.reserve(exact.size());
    const bigint lo = std::numeric_limits<long long>::min();
    const bigint hi = std::numeric_limits<long long>::max();
    for (auto& v : exact) {
        std::vector<long long> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < lo || v[i] > hi)
                throw resource_error("kernel basis entry exceeds machine width");
            w[i] = static_cast<long long>(v[i]);
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace toric
