#include "polymat/linalg.hpp"

#include <stdexcept>

namespace polymat::linalg {

int rank(RatMat a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            Rat factor = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Bareiss-style fraction-free elimination keeps entries integral and small.
int rank(IntMat a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

RatMat inverse(RatMat a) {
    const std::size_t n = a.size();
    for (auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("inverse: matrix not square");
        row.resize(2 * n, Rat(0));
    }
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        std::swap(a[p], a[c]);
        Rat inv = Rat(1) / a[c][c];
        for (std::size_t j = c; j < 2 * n; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rat factor = a[i][c];
            for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= factor * a[c][j];
        }
    }
    RatMat out(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

std::vector<Rat> solve(RatMat a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) throw std::invalid_argument("solve: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            Rat factor = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
            b[i] -= factor * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace polymat::linalg
