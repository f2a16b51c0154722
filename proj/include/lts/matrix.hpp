#ifndef LTS_MATRIX_HPP
#define LTS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lts/errors.hpp"
#include "lts/rational.hpp"

namespace lts {

// Coordinate vector over Q.
using Vec = std::vector<Rat>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rat(0));
    v[i] = Rat(1);
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// v += c * w
inline void axpy(Vec& v, const Rat& c, const Vec& w) {
    if (v.size() != w.size()) throw usage_error("axpy: length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

inline Vec add(Vec a, const Vec& b) {
    axpy(a, Rat(1), b);
    return a;
}

inline Vec sub(Vec a, const Vec& b) {
    axpy(a, Rat(-1), b);
    return a;
}

inline Vec scale(const Rat& c, Vec v) {
    for (Rat& x : v) x *= c;
    return v;
}

// Dense matrix over Q, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw usage_error("matrix entry count does not match shape");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Rat>& entries() const { return e_; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw usage_error("matrix-vector shape mismatch");
        Vec out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw usage_error("matrix product shape mismatch");
        Mat out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!o.at(k, j).is_zero()) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw usage_error("matrix sum shape mismatch");
        Mat out = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
        return out;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw usage_error("matrix difference shape mismatch");
        Mat out = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
        return out;
    }

    Mat operator-() const {
        Mat out = *this;
        for (Rat& x : out.e_) x = -x;
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const { return lts::is_zero(e_); }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

namespace detail {

inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw internal_error("Bareiss elimination lost exactness");
    return q;
}

}  // namespace detail

// Rank over Q by fraction-free (Bareiss) elimination: rows are first cleared
// of denominators, then eliminated over the integers so every intermediate
// entry is a minor of the scaled matrix.
inline std::size_t rank(const Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = m.at(i, j).num() * detail::divexact(l, m.at(i, j).den());
    }

    std::size_t r = 0;
    mpz_class prev(1);
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0) ++p;
        if (p == nr) continue;
        if (p != r) std::swap(a[p], a[r]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a[i][j] = detail::divexact(a[i][j] * piv - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        const Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of { v : m v = 0 }, read off the reduced echelon form: one vector per
// free column, with unit coordinate there.  Deterministic for a given input.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    Mat r = m;
    const std::vector<std::size_t> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(m.cols());
        v[f] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some x with m x = b, or nullopt when the system is inconsistent.  Free
// coordinates are set to zero.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw usage_error("solve: right-hand side length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(k, m.cols());
    return x;
}

// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw usage_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    const std::vector<std::size_t> pivots = rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) os << m.at(i, j) << " ";
        os << "]\n";
    }
    return os;
}

}  // namespace lts

#endif
