#pragma once

// Dense matrices over a fixed cyclotomic field, plus the exact rank
// computation used by the quantum-symmetrizer oracle. No floating point.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"

namespace q8n {

class Mat {
public:
    Mat() : m_(1), rows_(0), cols_(0) {}

    Mat(std::size_t rows, std::size_t cols, unsigned modulus)
        : m_(modulus), rows_(rows), cols_(cols), data_(rows * cols, CycNum::zero(modulus)) {}

    static Mat identity(std::size_t n, unsigned modulus) {
        Mat r(n, n, modulus);
        for (std::size_t i = 0; i < n; ++i) r(i, i) = CycNum::one(modulus);
        return r;
    }

    static Mat from_rows(unsigned modulus, std::initializer_list<std::initializer_list<CycNum>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Mat out(r, c, modulus);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw Error("ragged matrix initializer");
            std::size_t j = 0;
            for (const auto& v : row) out(i, j++) = v;
            ++i;
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned modulus() const { return m_; }

    CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.require_shape(b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        a.require_shape(b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
        Mat r(a.rows_, b.cols_, a.m_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycNum& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycNum& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scaled(const CycNum& s) const {
        Mat r = *this;
        for (auto& v : r.data_) v *= s;
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<CycNum> apply(const std::vector<CycNum>& v) const {
        if (v.size() != cols_) throw Error("vector length mismatch in matrix apply");
        std::vector<CycNum> out(rows_, CycNum::zero(m_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    void require_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }

    unsigned m_;
    std::size_t rows_, cols_;
    std::vector<CycNum> data_;
};

inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero())
                        r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

namespace detail {

// Scale each row by the lcm of its coefficient denominators so Bareiss
// works on algebraic integers; row scalings do not change the rank.
inline void clear_row_denominators(Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& c : m(i, j).coeffs())
                if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        if (l != 1) {
            mpq_class s(l);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).scaled(s);
        }
    }
}

} // namespace detail

/// Exact rank via fraction-free (Bareiss) elimination with column skipping.
/// The division by the previous pivot is exact over Z[zeta_m] by the
/// standard minor identity; field division keeps it exact regardless.
inline std::size_t rank_fraction_free(Mat m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    detail::clear_row_denominators(m);
    std::size_t rank = 0;
    CycNum prev = CycNum::one(m.modulus());
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
        const CycNum pivot = m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = (pivot * m(i, j) - m(i, col) * m(rank, j)) / prev;
            m(i, col) = CycNum::zero(m.modulus());
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace q8n
