#pragma once

// Truncated Nichols-algebra oracle: graded dimensions up to a cutoff as
// exact ranks of quantum symmetrizers on tensor powers.
//
// The degree-n symmetrizer is the sum over all n! permutations of their
// braid lifts. Lifting is along reduced words (well defined once c solves
// the braid equation); production evaluation uses the parabolic-coset
// factorization
//
//   S_n = (id + c_1 + c_2 c_1 + ... + c_{n-1} ... c_1) (id_V (x) S_{n-1})
//
// which the test suite checks against the brute permutation sum.
//
// A degree is only evaluated while n! * d^{2n} stays within the work budget.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q8nichols/braidlin.hpp"
#include "q8nichols/error.hpp"
#include "q8nichols/matrix.hpp"

namespace q8n {

using Perm = std::vector<int>; // one-line notation, w[i] = image of i

inline Perm identity_perm(int n) {
    Perm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline Perm compose(const Perm& u, const Perm& v) {
    Perm r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[static_cast<std::size_t>(v[i])];
    return r;
}

inline int inversions(const Perm& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

enum class WordStrategy { bubble_descent, lehmer_insertion };

/// A reduced word for w in the adjacent transpositions s_0 .. s_{n-2},
/// product taken left to right. Two independent constructions.
inline std::vector<int> reduced_word(const Perm& w, WordStrategy strategy) {
    const int n = static_cast<int>(w.size());
    std::vector<int> word;
    if (strategy == WordStrategy::bubble_descent) {
        // Peel descents from the right: w = w' s_i drops the length by one
        // when w[i] > w[i+1]; the collected letters read back reversed.
        Perm cur = w;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < n; ++i) {
                if (cur[static_cast<std::size_t>(i)] > cur[static_cast<std::size_t>(i) + 1]) {
                    word.push_back(i);
                    std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(i) + 1]);
                    changed = true;
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
    } else {
        // Lehmer code: c_i = #{j > i : w[j] < w[i]}; each position
        // contributes the descending run s_{i+c_i-1} ... s_{i+1} s_i.
        for (int i = 0; i < n; ++i) {
            int code = 0;
            for (int j = i + 1; j < n; ++j)
                if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) ++code;
            for (int k = i + code - 1; k >= i; --k) word.push_back(k);
        }
    }
    return word;
}

inline unsigned long long default_symmetrizer_budget() { return 100'000'000ULL; }

inline bool symmetrizer_budget_ok(unsigned degree, unsigned dim, unsigned long long budget) {
    unsigned __int128 work = 1;
    for (unsigned k = 2; k <= degree; ++k) {
        work *= k;
        if (work > budget) return false;
    }
    for (unsigned k = 0; k < 2 * degree; ++k) {
        work *= dim;
        if (work > budget) return false;
    }
    return true;
}

/// Shared machinery for lifting permutations and assembling symmetrizers
/// for one braiding; caches elementary operators and per-degree results.
class BraidLifter {
public:
    explicit BraidLifter(BraidOp c, unsigned long long budget = default_symmetrizer_budget())
        : c_(std::move(c)), budget_(budget) {
        if (c_.dim < 1) throw ValidationError("braiding must act on a positive-dimensional space");
        auto check = check_braid_equation(c_);
        if (!check.ok)
            throw ValidationError("cannot lift permutations: " + check.describe());
    }

    const BraidOp& braiding() const { return c_; }
    int dim() const { return c_.dim; }

    std::size_t space_dim(int degree) const {
        std::size_t s = 1;
        for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(c_.dim);
        return s;
    }

    /// c_k = id^{(x)k} (x) c (x) id^{(x)(n-k-2)} on V^{(x)n}, 0-based k.
    const Mat& elementary(int degree, int k) {
        if (k < 0 || k + 2 > degree) throw Error("elementary braiding index out of range");
        auto key = std::make_pair(degree, k);
        auto it = elementary_.find(key);
        if (it != elementary_.end()) return it->second;
        Mat left = Mat::identity(space_dim(k), c_.modulus());
        Mat right = Mat::identity(space_dim(degree - k - 2), c_.modulus());
        Mat op = kron(kron(left, c_.matrix), right);
        return elementary_.emplace(key, std::move(op)).first->second;
    }

    /// Product of elementary braidings along a reduced word of w; by
    /// Matsumoto's theorem the result does not depend on the word chosen.
    Mat lift(const Perm& w, WordStrategy strategy = WordStrategy::bubble_descent) {
        const int n = static_cast<int>(w.size());
        Mat acc = Mat::identity(space_dim(n), c_.modulus());
        for (int k : reduced_word(w, strategy)) acc = acc * elementary(n, k);
        return acc;
    }

    /// S_degree = sum of all lifts, via the coset factorization.
    const Mat& symmetrizer(int degree) {
        auto it = symmetrizers_.find(degree);
        if (it != symmetrizers_.end()) return it->second;
        if (!symmetrizer_budget_ok(static_cast<unsigned>(degree), static_cast<unsigned>(c_.dim), budget_))
            throw BudgetExceeded("symmetrizer degree " + std::to_string(degree) + " for dim " +
                                 std::to_string(c_.dim) + " exceeds the work budget " +
                                 std::to_string(budget_) + " (set Q8N_BUDGET to raise)");
        Mat s;
        if (degree <= 0) {
            s = Mat::identity(1, c_.modulus());
        } else if (degree == 1) {
            s = Mat::identity(static_cast<std::size_t>(c_.dim), c_.modulus());
        } else {
            Mat ladder = Mat::identity(space_dim(degree), c_.modulus());
            Mat prefix = Mat::identity(space_dim(degree), c_.modulus());
            for (int k = 1; k < degree; ++k) {
                prefix = elementary(degree, k - 1) * prefix;
                ladder = ladder + prefix;
            }
            Mat inner = kron(Mat::identity(static_cast<std::size_t>(c_.dim), c_.modulus()),
                             symmetrizer(degree - 1));
            s = ladder * inner;
        }
        return symmetrizers_.emplace(degree, std::move(s)).first->second;
    }

private:
    BraidOp c_;
    unsigned long long budget_;
    std::map<std::pair<int, int>, Mat> elementary_;
    std::map<int, Mat> symmetrizers_;
};

inline Mat lift_permutation(const BraidOp& c, const Perm& w,
                            WordStrategy strategy = WordStrategy::bubble_descent) {
    BraidLifter lifter(c);
    return lifter.lift(w, strategy);
}

inline Mat symmetrizer(const BraidOp& c, int degree,
                       unsigned long long budget = default_symmetrizer_budget()) {
    BraidLifter lifter(c, budget);
    return lifter.symmetrizer(degree);
}

struct HilbertPrefix {
    unsigned cutoff = 0;
    std::vector<long long> dims; // dims[n] = rank S_n, n = 0..cutoff
    bool terminated = false;     // a zero rank appeared at or before the cutoff

    unsigned long long total() const {
        unsigned long long t = 0;
        for (long long d : dims) t += static_cast<unsigned long long>(d);
        return t;
    }
};

/// Graded dimensions of the Nichols algebra up to `cutoff`. Once some rank
/// hits zero every later degree vanishes too (S_m factors through
/// S_n (x) id), so the remaining entries are filled without computing.
inline HilbertPrefix hilbert_prefix(const BraidOp& c, unsigned cutoff,
                                    unsigned long long budget = default_symmetrizer_budget()) {
    BraidLifter lifter(c, budget);
    HilbertPrefix h;
    h.cutoff = cutoff;
    h.dims.push_back(1);
    if (cutoff >= 1) h.dims.push_back(c.dim);
    for (unsigned n = 2; n <= cutoff; ++n) {
        if (h.terminated) {
            h.dims.push_back(0);
            continue;
        }
        long long r = static_cast<long long>(rank_fraction_free(lifter.symmetrizer(static_cast<int>(n))));
        h.dims.push_back(r);
        if (r == 0) h.terminated = true;
    }
    return h;
}

} // namespace q8n
