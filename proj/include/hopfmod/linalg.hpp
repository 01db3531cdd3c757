#ifndef HOPFMOD_LINALG_HPP
#define HOPFMOD_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfmod/cyclotomic.hpp"
#include "hopfmod/polynomial.hpp"

namespace hopfmod {

using Vec = std::vector<Cyclotomic>;

inline Vec zero_vec(std::size_t n, unsigned long order = 1) {
    return Vec(n, Cyclotomic::zero(order));
}

inline Vec& axpy(Vec& y, const Cyclotomic& a, const Vec& x) {
    check(y.size() == x.size(), "axpy: size mismatch");
    if (a.is_zero()) return y;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
    return y;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// Dense matrix over a cyclotomic field, row major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, unsigned long order = 1)
        : rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic::zero(order)) {}

    static Matrix identity(std::size_t n, unsigned long order = 1) {
        Matrix m(n, n, order);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(order);
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols) {
        check(!cols.empty(), "from_columns: no columns");
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            check(cols[j].size() == m.rows_, "from_columns: ragged input");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        check(!rows.empty(), "from_rows: no rows");
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            check(rows[i].size() == m.cols_, "from_rows: ragged input");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec column(std::size_t j) const {
        Vec v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check(a.cols_ == b.rows_, "matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cyclotomic& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vec operator*(const Matrix& a, const Vec& x) {
        check(a.cols_ == x.size(), "matrix-vector product: shape mismatch");
        Vec y = zero_vec(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
        return y;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    friend Matrix operator*(const Cyclotomic& s, const Matrix& m) {
        Matrix c = m;
        for (auto& x : c.a_) x *= s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Cyclotomic trace() const {
        check(rows_ == cols_, "trace of non-square matrix");
        Cyclotomic t = Cyclotomic::zero();
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // Row echelon form in place; returns pivot column indices.
    // Deterministic: first nonzero entry is the pivot.
    std::vector<std::size_t> echelonize() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Cyclotomic inv = (*this)(r, c).inverse();
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                Cyclotomic f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.echelonize().size();
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Cyclotomic> a_;
};

// Basis of the null space {x : m x = 0}.
inline std::vector<Vec> matrix_kernel(const Matrix& m) {
    Matrix e = m;
    auto pivots = e.echelonize();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(m.cols());
        v[free_col] = Cyclotomic::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = b exactly; std::nullopt when the system is inconsistent.
inline std::optional<Vec> matrix_solve(const Matrix& m, const Vec& b) {
    check(b.size() == m.rows(), "matrix_solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = aug.echelonize();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

inline Matrix matrix_inverse(const Matrix& m) {
    check(m.rows() == m.cols(), "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Cyclotomic::one();
    }
    auto pivots = aug.echelonize();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix();
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Matrix matrix_power(const Matrix& m, long e) {
    check(m.rows() == m.cols(), "power of non-square matrix");
    if (e < 0) return matrix_power(matrix_inverse(m), -e);
    Matrix r = Matrix::identity(m.rows()), base = m;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
}

// True when a = s * b for a single nonzero scalar s (a, b same shape, b nonzero).
inline bool proportional(const Matrix& a, const Matrix& b, Cyclotomic* scalar_out = nullptr) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    // First nonzero entry of b fixes the scalar; remaining entries compared exactly.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (b(i, j).is_zero()) {
                if (!a(i, j).is_zero()) return false;
                continue;
            }
            Cyclotomic s = a(i, j) / b(i, j);
            if (s.is_zero()) return false;
            Matrix scaled = s * b;
            if (scaled != a) return false;
            if (scalar_out) *scalar_out = s;
            return true;
        }
    return a.is_zero();
}

// Minimal polynomial of the square matrix m, as a monic polynomial: the first
// linear dependence among I, m, m^2, ...
inline Polynomial minimal_polynomial(const Matrix& m) {
    check(m.rows() == m.cols(), "minimal polynomial of non-square matrix");
    std::size_t n = m.rows();
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * m);
        // Flatten powers 0..d into columns and look for a kernel vector.
        Matrix sys(n * n, d + 1);
        for (std::size_t t = 0; t <= d; ++t)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sys(i * n + j, t) = powers[t](i, j);
        auto kernel = matrix_kernel(sys);
        for (const auto& v : kernel) {
            if (v[d].is_zero()) continue;
            std::vector<Cyclotomic> coeffs(v.begin(), v.begin() + d + 1);
            return Polynomial(std::move(coeffs)).monic();
        }
    }
    throw error("minimal polynomial not found below dimension bound");
}

inline bool Cyclotomic::try_reduce(const Cyclotomic& x, unsigned long target, Cyclotomic& out) {
    if (x.order() == target) {
        out = x;
        return true;
    }
    if (x.order() % target != 0) return false;
    unsigned long phi_t = detail::cyc_context(target).phi;
    std::vector<Vec> cols;
    cols.reserve(phi_t);
    for (unsigned long j = 0; j < phi_t; ++j) {
        Cyclotomic basis = promote(Cyclotomic(target, [&] {
            std::vector<Rational> c(phi_t, Rational(0));
            c[j] = 1;
            return c;
        }()), x.order());
        Vec col;
        col.reserve(x.coeffs().size());
        for (const auto& q : basis.coeffs()) col.push_back(Cyclotomic(q));
        cols.push_back(std::move(col));
    }
    Vec rhs;
    rhs.reserve(x.coeffs().size());
    for (const auto& q : x.coeffs()) rhs.push_back(Cyclotomic(q));
    auto sol = matrix_solve(Matrix::from_columns(cols), rhs);
    if (!sol) return false;
    std::vector<Rational> coeffs;
    coeffs.reserve(phi_t);
    for (const auto& c : *sol) coeffs.push_back(c.to_rational());
    out = Cyclotomic(target, std::move(coeffs));
    return true;
}

}  // namespace hopfmod

#endif
