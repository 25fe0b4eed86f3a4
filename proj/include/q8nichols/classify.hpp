#pragma once

// Maps a diagonal braiding matrix to a Nichols-algebra verdict: dimension
// (finite value / finite / infinite / unknown) and Gelfand-Kirillov
// dimension (value / infinite / unknown).
//
// Decision cascade, earliest applicable branch wins:
//   (a) all q_ij = 1                      -> symmetric algebra, GK = rank
//   (b) q_ij q_ji = 1 for all i != j      -> quantum linear space
//   (c) Cartan type (rank 2 only)         -> finite / affine / indefinite kind
//   (d) otherwise                         -> inconclusive
//
// Only q_ii and the products q_ij q_ji enter any branch.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "q8nichols/braidlin.hpp"
#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"

namespace q8n {

enum class VerdictType {
    trivial_all_ones,
    quantum_linear_space,
    cartan_finite,
    cartan_affine,
    cartan_indefinite,
    inconclusive,
};

inline const char* to_string(VerdictType t) {
    switch (t) {
        case VerdictType::trivial_all_ones: return "trivial_all_ones";
        case VerdictType::quantum_linear_space: return "quantum_linear_space";
        case VerdictType::cartan_finite: return "cartan_finite";
        case VerdictType::cartan_affine: return "cartan_affine";
        case VerdictType::cartan_indefinite: return "cartan_indefinite";
        case VerdictType::inconclusive: return "inconclusive";
    }
    return "?";
}

struct DimValue {
    enum class Kind { finite, infinite, unknown } kind = Kind::unknown;
    std::optional<unsigned long long> value; // present only for a known finite value

    static DimValue finite(unsigned long long v) { return {Kind::finite, v}; }
    static DimValue finite_unvalued() { return {Kind::finite, std::nullopt}; }
    static DimValue infinite() { return {Kind::infinite, std::nullopt}; }
    static DimValue unknown() { return {Kind::unknown, std::nullopt}; }

    std::string str() const {
        switch (kind) {
            case Kind::finite: return value ? std::to_string(*value) : "finite";
            case Kind::infinite: return "infinite";
            case Kind::unknown: return "unknown";
        }
        return "?";
    }
};

struct GkValue {
    enum class Kind { value, infinite, unknown } kind = Kind::unknown;
    unsigned value = 0;

    static GkValue of(unsigned v) { return {Kind::value, v}; }
    static GkValue infinite() { return {Kind::infinite, 0}; }
    static GkValue unknown() { return {Kind::unknown, 0}; }

    std::string str() const {
        switch (kind) {
            case Kind::value: return std::to_string(value);
            case Kind::infinite: return "infinite";
            case Kind::unknown: return "unknown";
        }
        return "?";
    }
};

struct Verdict {
    VerdictType type = VerdictType::inconclusive;
    DimValue dim;
    GkValue gkdim;
    std::optional<std::vector<std::vector<int>>> cartan;
    std::vector<std::string> evidence;
};

/// For all q_ii != 1 roots of unity: the unique a_ij in {0, -1, ...,
/// -(ord(q_ii)-1)} with q_ii^{a_ij} = q_ij q_ji for every i != j, with
/// a_ii = 2; nullopt if some pair has no solution in the window.
inline std::optional<std::vector<std::vector<int>>> cartan_exponents(const BraidingMatrix& q) {
    const int n = q.rank;
    std::vector<unsigned> ord(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto o = root_order(q.q(i, i));
        if (!o || *o == 1)
            throw ValidationError("cartan_exponents requires every q_ii to be a root of unity "
                                  "different from 1");
        ord[static_cast<std::size_t>(i)] = *o;
    }
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            CycNum target = q.q(i, j) * q.q(j, i);
            bool found = false;
            for (unsigned k = 0; k < ord[static_cast<std::size_t>(i)]; ++k) {
                if (q.q(i, i).pow(-static_cast<long>(k)) == target) {
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -static_cast<int>(k);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
    return a;
}

namespace detail {

struct Rank2Kind {
    VerdictType type;
    const char* name;
};

inline std::optional<Rank2Kind> rank2_cartan_kind(int a12, int a21) {
    auto is = [&](int u, int v) { return (a12 == u && a21 == v) || (a12 == v && a21 == u); };
    if (is(0, 0)) return Rank2Kind{VerdictType::cartan_finite, "A1 x A1"};
    if (is(-1, -1)) return Rank2Kind{VerdictType::cartan_finite, "A2"};
    if (is(-1, -2)) return Rank2Kind{VerdictType::cartan_finite, "B2"};
    if (is(-1, -3)) return Rank2Kind{VerdictType::cartan_finite, "G2"};
    if (is(-2, -2)) return Rank2Kind{VerdictType::cartan_affine, "A1(1)"};
    if (is(-1, -4)) return Rank2Kind{VerdictType::cartan_affine, "A2(2)"};
    return std::nullopt; // anything more negative: indefinite
}

} // namespace detail

inline Verdict classify_diagonal(const BraidingMatrix& q) {
    const int n = q.rank;
    if (n < 1) throw ValidationError("braiding matrix must have rank >= 1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.q(i, j).is_zero())
                throw ValidationError("braiding matrix entries must be nonzero");

    const unsigned m = q.entries.modulus();
    const CycNum one = CycNum::one(m);
    Verdict v;

    // (a) all entries 1: the symmetric algebra, GK = rank.
    bool all_ones = true;
    for (int i = 0; i < n && all_ones; ++i)
        for (int j = 0; j < n && all_ones; ++j) all_ones = q.q(i, j) == one;
    if (all_ones) {
        v.type = VerdictType::trivial_all_ones;
        v.dim = DimValue::infinite();
        v.gkdim = GkValue::of(static_cast<unsigned>(n));
        v.evidence.push_back("all q_ij = 1: polynomial algebra on " + std::to_string(n) +
                             (n == 1 ? " generator" : " generators") + ", GK = " + std::to_string(n));
        return v;
    }

    // (b) quantum linear space: q_ij q_ji = 1 off the diagonal.
    bool qls = true;
    for (int i = 0; i < n && qls; ++i)
        for (int j = i + 1; j < n && qls; ++j) qls = (q.q(i, j) * q.q(j, i)) == one;
    if (qls) {
        v.type = VerdictType::quantum_linear_space;
        v.evidence.push_back("quantum linear space: q_ij * q_ji = 1 for all i != j");
        unsigned long long dim = 1;
        unsigned free_lines = 0;
        bool has_truncated = false;
        for (int i = 0; i < n; ++i) {
            auto ord = root_order(q.q(i, i));
            if (ord && *ord > 1) {
                dim *= *ord;
                has_truncated = true;
                v.evidence.push_back("q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                                     q.q(i, i).str() + " has order " + std::to_string(*ord) +
                                     ": truncated line of dimension " + std::to_string(*ord));
            } else {
                ++free_lines;
                v.evidence.push_back("q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                                     q.q(i, i).str() +
                                     (ord ? ": polynomial line" : ": not a root of unity, polynomial-growth line") +
                                     " (adds 1 to GK)");
            }
        }
        if (has_truncated && free_lines > 0)
            v.evidence.push_back("mixed factors: GK rule extends the pure cases by tensor factorization");
        v.dim = free_lines > 0 ? DimValue::infinite() : DimValue::finite(dim);
        v.gkdim = GkValue::of(free_lines);
        return v;
    }

    // (c) Cartan type. Needs every q_ii a root of unity different from 1.
    bool cartan_ready = true;
    for (int i = 0; i < n && cartan_ready; ++i) {
        auto ord = root_order(q.q(i, i));
        cartan_ready = ord.has_value() && *ord > 1;
    }
    if (cartan_ready) {
        auto exps = cartan_exponents(q);
        if (exps) {
            if (n > 2)
                throw ValidationError("Cartan-type classification is implemented for rank <= 2 "
                                      "(got rank " + std::to_string(n) + ")");
            // n == 1 cannot reach here: branch (b) is vacuous at rank 1.
            int a12 = (*exps)[0][1], a21 = (*exps)[1][0];
            v.cartan = *exps;
            std::ostringstream ev;
            ev << "Cartan exponents a_12 = " << a12 << ", a_21 = " << a21;
            auto kind = detail::rank2_cartan_kind(a12, a21);
            if (kind && kind->type == VerdictType::cartan_finite) {
                v.type = VerdictType::cartan_finite;
                v.dim = DimValue::finite_unvalued();
                v.gkdim = GkValue::of(0);
                ev << ": finite Cartan type " << kind->name;
            } else if (kind) {
                v.type = VerdictType::cartan_affine;
                v.dim = DimValue::infinite();
                v.gkdim = GkValue::infinite();
                ev << ": affine Cartan type " << kind->name << ", GK infinite";
            } else {
                v.type = VerdictType::cartan_indefinite;
                v.dim = DimValue::infinite();
                v.gkdim = GkValue::infinite();
                ev << ": indefinite Cartan matrix, infinite Weyl groupoid in rank 2, GK infinite";
            }
            v.evidence.push_back(ev.str());
            return v;
        }
    }

    // (d) nothing applies.
    v.type = VerdictType::inconclusive;
    v.dim = DimValue::unknown();
    v.gkdim = GkValue::unknown();
    v.evidence.push_back("no applicable branch: not all-ones, not a quantum linear space, "
                         "no Cartan exponents in the search window");
    return v;
}

/// Rank-1 verdict: q = 1 gives the polynomial line (GK 1); a root of unity
/// of order N > 1 gives the truncated line of dimension N (GK 0); anything
/// else grows like a polynomial line.
inline Verdict classify_rank1(const CycNum& q11) {
    if (q11.is_zero()) throw ValidationError("braiding scalar must be nonzero");
    BraidingMatrix q;
    q.rank = 1;
    q.entries = Mat(1, 1, q11.modulus());
    q.entries(0, 0) = q11;
    return classify_diagonal(q);
}

} // namespace q8n
