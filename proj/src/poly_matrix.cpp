#include "keller/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace keller {

PolyMatrix::PolyMatrix(std::size_t nrows, std::size_t ncols, std::size_t nvars)
    : nrows_(nrows), ncols_(ncols), nvars_(nvars), entries_(nrows * ncols, Polynomial(nvars)) {
    if (nrows == 0 || ncols == 0) throw std::invalid_argument("PolyMatrix: empty dimension");
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(nvars, Rational(1)));
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= nrows_ || j >= ncols_) throw std::out_of_range("PolyMatrix: index out of range");
    return entries_[i * ncols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= nrows_ || j >= ncols_) throw std::out_of_range("PolyMatrix: index out of range");
    if (p.nvars() != nvars_) throw std::invalid_argument("PolyMatrix: entry arity mismatch");
    entries_[i * ncols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(ncols_, nrows_, nvars_);
    for (std::size_t i = 0; i < nrows_; ++i)
        for (std::size_t j = 0; j < ncols_; ++j) t.set(j, i, at(i, j));
    return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.ncols() != b.nrows()) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    if (a.nvars() != b.nvars()) throw std::invalid_argument("PolyMatrix: arity mismatch in product");
    PolyMatrix r(a.nrows(), b.ncols(), a.nvars());
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t j = 0; j < b.ncols(); ++j) {
            Polynomial s(a.nvars());
            for (std::size_t k = 0; k < a.ncols(); ++k) s += a.at(i, k) * b.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& m) {
    PolyMatrix r(m.nrows(), m.ncols(), m.nvars());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j) r.set(i, j, c * m.at(i, j));
    return r;
}

Polynomial determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.nrows();
    const std::size_t nv = m.nvars();
    if (n == 1) return m.at(0, 0);

    // Bareiss one-step fraction-free elimination with row pivoting.
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    Polynomial prev_pivot = Polynomial::constant(nv, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) {
                    pivot_row = r;
                    break;
                }
            if (pivot_row == k) return Polynomial(nv);  // zero column, singular
            std::swap(a[k], a[pivot_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev_pivot);
            a[i][k] = Polynomial(nv);
        }
        prev_pivot = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col) {
    PolyMatrix sub(m.nrows() - 1, m.ncols() - 1, m.nvars());
    std::size_t si = 0;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        if (i == drop_row) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j == drop_col) continue;
            sub.set(si, sj, m.at(i, j));
            ++sj;
        }
        ++si;
    }
    return sub;
}

}  // namespace

PolyMatrix adjugate(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = m.nrows();
    PolyMatrix adj(n, n, m.nvars());
    if (n == 1) {
        adj.set(0, 0, Polynomial::constant(m.nvars(), Rational(1)));
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial c = determinant(minor_of(m, i, j));
            if ((i + j) % 2 == 1) c = -c;
            adj.set(j, i, std::move(c));  // transposed placement
        }
    return adj;
}

}  // namespace keller
