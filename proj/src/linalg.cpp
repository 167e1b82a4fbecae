#include "hha/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hha {

namespace {

void check_square(const Mat& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix must be square");
}

}  // namespace

Rat det_bareiss(Mat a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Rat prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
    check_square(a);
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("rhs length mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        const Rat piv = a[k][k];
        for (std::size_t j = k; j < n; ++j) a[k][j] /= piv;
        b[k] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rat f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

std::optional<Vec> kernel_vector(Mat a) {
    check_square(a);
    const std::size_t n = a.size();
    // row echelon with column pivots recorded
    std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[row], a[p]);
        const Rat piv = a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = static_cast<std::ptrdiff_t>(row);
        ++row;
    }
    // first free column gives a kernel vector
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != -1) continue;
        Vec v(n, 0);
        v[col] = 1;
        for (std::size_t c = 0; c < col; ++c)
            if (pivot_of_col[c] != -1)
                v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][col];
        return v;
    }
    return std::nullopt;
}

}  // namespace hha
