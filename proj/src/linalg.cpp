#include "polyroots/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace polyroots {

namespace {

// In-place LU with partial pivoting. Returns the permutation sign, or 0 when
// the matrix is singular.
int lu_decompose(ComplexMatrix& a, std::vector<std::size_t>& perm) {
    const std::size_t n = a.size();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("lu: matrix is not square");
        perm[i] = i;
    }
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(a[i][k]);
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best == 0.0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(perm[piv], perm[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i][k] / a[k][k];
            a[i][k] = f;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return sign;
}

}  // namespace

Complex determinant(ComplexMatrix a) {
    if (a.empty()) return 1.0;
    std::vector<std::size_t> perm;
    const int sign = lu_decompose(a, perm);
    if (sign == 0) return 0.0;
    Complex det = double(sign);
    for (std::size_t i = 0; i < a.size(); ++i) det *= a[i][i];
    return det;
}

bool lu_solve(ComplexMatrix a, std::vector<Complex> b, std::vector<Complex>& x) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("lu_solve: size mismatch");
    std::vector<std::size_t> perm;
    if (lu_decompose(a, perm) == 0) return false;
    x.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= a[i][j] * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return true;
}

}  // namespace polyroots
