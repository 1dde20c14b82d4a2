#include "arboreal/bareiss.hpp"

#include <utility>

namespace arboreal {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw DomainError("determinant of a non-square matrix");
}

}  // namespace

Int bareiss_det(Matrix<Int> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) require_square(n, row.size());
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

Rat determinant(const Matrix<Rat>& m) {
    const std::size_t n = m.size();
    Matrix<Int> im(n);
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        require_square(n, m[i].size());
        Int l = 1;
        for (const Rat& x : m[i]) l = lcm(l, x.get_den());
        scale *= l;
        im[i].reserve(n);
        for (const Rat& x : m[i]) im[i].push_back(x.get_num() * (l / x.get_den()));
    }
    Rat r(bareiss_det(std::move(im)), scale);
    r.canonicalize();
    return r;
}

QuadElem determinant(Matrix<QuadElem> m) {
    const std::size_t n = m.size();
    QuadElem det(1);
    for (std::size_t k = 0; k < n; ++k) {
        require_square(n, m[k].size());
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return QuadElem(0);
        if (p != k) {
            std::swap(m[k], m[p]);
            det = -det;
        }
        det *= m[k][k];
        const QuadElem inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            const QuadElem f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace arboreal
