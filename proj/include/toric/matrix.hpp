#ifndef TORIC_MATRIX_HPP
#define TORIC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Dense row-major integer matrix. Entries stay machine-width; exact
// lattice computations widen internally.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    long long& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const IntMatrix& o) const = default;
};

inline std::vector<long long> matvec(const IntMatrix& A, const std::vector<long long>& v) {
    if (v.size() != A.cols)
        throw validation_error("matvec: size mismatch");
    std::vector<long long> out(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < A.cols; ++j)
            s += A.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

// Sum of each column; the grading vector of a toric ideal.
inline std::vector<long long> column_sums(const IntMatrix& A) {
    std::vector<long long> w(A.cols, 0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            w[j] += A.at(i, j);
    return w;
}

} // namespace toric

#endif
