#include "qsp/linalg.hpp"

#include <stdexcept>

namespace qsp {

Matrix zero_matrix(size_t rows, size_t cols) { return Matrix(rows, std::vector<CycNum>(cols)); }

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t = zero_matrix(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    size_t inner = b.size();
    size_t cols = inner ? b[0].size() : 0;
    Matrix r = zero_matrix(a.size(), cols);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<int> rref(Matrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        CycNum inv = cyc_inverse(a[r][c]);
        for (size_t j = c; j < cols; ++j)
            if (!a[r][j].is_zero()) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CycNum f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

Matrix inverse(const Matrix& a) {
    size_t n = a.size();
    Matrix aug = zero_matrix(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = CycNum(1L);
    }
    auto piv = rref(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != static_cast<int>(n - 1)))
        throw std::domain_error("inverse: singular matrix");
    Matrix r = zero_matrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

}  // namespace qsp
