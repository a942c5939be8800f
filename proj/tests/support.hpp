#ifndef SPTRI_TESTS_SUPPORT_HPP
#define SPTRI_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "sptri/snf.hpp"

namespace sptri::testing {

/// Independent rank oracle: dense fraction-free (Bareiss) elimination over
/// the integers.  Deliberately shares no code with the library's sparse
/// elimination.
inline int bareiss_rank(const IntegerMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, 0));
    for (const auto& [rc, val] : m.entries()) a[rc.first][rc.second] = val;

    Integer prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Determinant of a square dense matrix by Bareiss elimination.
inline Integer bareiss_det(const std::vector<std::vector<Integer>>& input) {
    auto a = input;
    int n = static_cast<int>(a.size());
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
            }
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline IntegerMatrix random_sparse_matrix(std::mt19937& rng, int max_dim) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> density(3, 8);
    int rows = dim(rng), cols = dim(rng);
    IntegerMatrix m(rows, cols);
    int keep_one_in = density(rng);
    std::uniform_int_distribution<int> keep(1, keep_one_in);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (keep(rng) == 1) m.set(r, c, entry(rng));
        }
    }
    return m;
}

} // namespace sptri::testing

#endif
