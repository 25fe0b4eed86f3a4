#pragma once

// Linear analysis of a braiding operator c on V (x) V: verify the braid
// equation exactly on V^{(x)3}, detect diagonal type relative to the given
// basis, and rebuild an operator from a braiding matrix.
//
// Tensor-pair indexing is row-major throughout: b_i (x) b_j has index i*d+j.

#include <cstddef>
#include <optional>
#include <string>

#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"
#include "q8nichols/matrix.hpp"

namespace q8n {

struct BraidOp {
    int dim = 0;   // dimension of V
    Mat matrix;    // d^2 x d^2

    unsigned modulus() const { return matrix.modulus(); }
};

struct BraidingMatrix {
    int rank = 0;
    Mat entries;   // n x n, all nonzero

    const CycNum& q(int i, int j) const {
        return entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
};

struct BraidCheck {
    bool ok = true;
    // On failure, the first basis triple where the two sides differ.
    int i = -1, j = -1, k = -1;

    std::string describe() const {
        if (ok) return "braid equation holds";
        return "braid equation fails on basis triple (" + std::to_string(i) + ", " +
               std::to_string(j) + ", " + std::to_string(k) + ")";
    }
};

/// Exact check of (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c) on
/// V^{(x)3}; returns a witness triple on failure.
inline BraidCheck check_braid_equation(const BraidOp& c) {
    const std::size_t d = static_cast<std::size_t>(c.dim);
    Mat id_d = Mat::identity(d, c.modulus());
    Mat c1 = kron(c.matrix, id_d);
    Mat c2 = kron(id_d, c.matrix);
    Mat lhs = c1 * c2 * c1;
    Mat rhs = c2 * c1 * c2;
    if (lhs == rhs) return {};
    for (std::size_t col = 0; col < lhs.cols(); ++col)
        for (std::size_t row = 0; row < lhs.rows(); ++row)
            if (lhs(row, col) != rhs(row, col)) {
                BraidCheck bad;
                bad.ok = false;
                bad.i = static_cast<int>(col / (d * d));
                bad.j = static_cast<int>((col / d) % d);
                bad.k = static_cast<int>(col % d);
                return bad;
            }
    return {};
}

/// If c(b_i x b_j) is a nonzero scalar multiple of b_j x b_i for every pair,
/// returns the scalar matrix (q_ij); otherwise nullopt. Detection is
/// relative to the given basis only — no basis search.
inline std::optional<BraidingMatrix> detect_diagonal(const BraidOp& c) {
    const std::size_t d = static_cast<std::size_t>(c.dim);
    BraidingMatrix q;
    q.rank = c.dim;
    q.entries = Mat(d, d, c.modulus());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t col = i * d + j;
            std::size_t want = j * d + i;
            for (std::size_t row = 0; row < d * d; ++row) {
                const CycNum& v = c.matrix(row, col);
                if (row == want) {
                    if (v.is_zero()) return std::nullopt; // singular on this pair
                    q.entries(i, j) = v;
                } else if (!v.is_zero()) {
                    return std::nullopt; // image mixes outside b_j x b_i
                }
            }
        }
    return q;
}

/// The diagonal braiding c(b_i x b_j) = q_ij b_j x b_i.
inline BraidOp diagonal_braid_op(const BraidingMatrix& q) {
    const std::size_t d = static_cast<std::size_t>(q.rank);
    BraidOp c;
    c.dim = q.rank;
    c.matrix = Mat(d * d, d * d, q.entries.modulus());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c.matrix(j * d + i, i * d + j) = q.entries(i, j);
    return c;
}

} // namespace q8n
