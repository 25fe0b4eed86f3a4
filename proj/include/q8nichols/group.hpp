#pragma once

// Finite groups as validated multiplication tables, with conjugacy classes,
// centralizers and left-coset decompositions. Elements are table indices;
// labels are cosmetic. Groups are immutable after validation.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "q8nichols/error.hpp"

namespace q8n {

class Group {
public:
    Group() = default;

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int g) const { return labels_.at(static_cast<std::size_t>(g)); }
    const std::vector<std::vector<int>>& table() const { return mult_; }

    int identity() const { return identity_; }
    int op(int a, int b) const { return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    /// g |> h = g h g^{-1}.
    int conjugate(int g, int h) const { return op(op(g, h), inv(g)); }

    int element_order(int g) const {
        int k = 1;
        int p = g;
        while (p != identity_) {
            p = op(p, g);
            ++k;
        }
        return k;
    }

    /// lcm of all element orders; the scalar field for modules over this
    /// group is Q(zeta_exponent).
    unsigned exponent() const {
        long long e = 1;
        for (int g = 0; g < order(); ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
        return static_cast<unsigned>(e);
    }

    std::optional<int> index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require_element(const std::string& label) const {
        auto idx = index_of(label);
        if (!idx) throw ValidationError("no element labeled '" + label + "' in group " + name_);
        return *idx;
    }

    /// Structural equality: same labels and same table.
    bool same_content(const Group& o) const { return labels_ == o.labels_ && mult_ == o.mult_; }

    friend Group group_from_table(std::string name, std::vector<std::string> labels,
                                  std::vector<std::vector<int>> mult);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> mult_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::unordered_map<std::string, int> index_;
};

/// Validates and builds a Group: Latin square, identity, inverses,
/// associativity (exhaustive up to order 64, sampled above).
inline Group group_from_table(std::string name, std::vector<std::string> labels,
                              std::vector<std::vector<int>> mult) {
    const std::size_t n = labels.size();
    if (n == 0) throw ValidationError("group must have at least one element");
    if (mult.size() != n) throw ValidationError("multiplication table is not " +
                                                std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : mult) {
        if (row.size() != n) throw ValidationError("multiplication table is ragged");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ValidationError("table entry " + std::to_string(v) + " out of range");
    }
    {
        std::unordered_map<std::string, int> seen;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen.emplace(labels[i], static_cast<int>(i)).second)
                throw ValidationError("duplicate element label '" + labels[i] + "'");
    }

    // Latin square: every row and column is a permutation.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (row_seen[static_cast<std::size_t>(mult[i][j])])
                throw ValidationError("not a Latin square: row '" + labels[i] +
                                      "' repeats '" + labels[static_cast<std::size_t>(mult[i][j])] + "'");
            row_seen[static_cast<std::size_t>(mult[i][j])] = true;
            if (col_seen[static_cast<std::size_t>(mult[j][i])])
                throw ValidationError("not a Latin square: column '" + labels[i] +
                                      "' repeats '" + labels[static_cast<std::size_t>(mult[j][i])] + "'");
            col_seen[static_cast<std::size_t>(mult[j][i])] = true;
        }
    }

    // Two-sided identity.
    int identity = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = mult[e][g] == static_cast<int>(g) && mult[g][e] == static_cast<int>(g);
        if (ok) {
            identity = static_cast<int>(e);
            break;
        }
    }
    if (identity < 0) throw ValidationError("no two-sided identity element");

    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
        int lhs = mult[static_cast<std::size_t>(mult[a][b])][c];
        int rhs = mult[a][static_cast<std::size_t>(mult[b][c])];
        if (lhs != rhs) {
            std::ostringstream msg;
            msg << "associativity fails at (" << labels[a] << ", " << labels[b] << ", "
                << labels[c] << "): (ab)c = " << labels[static_cast<std::size_t>(lhs)]
                << " but a(bc) = " << labels[static_cast<std::size_t>(rhs)];
            throw ValidationError(msg.str());
        }
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(0x9e3779b9u); // fixed seed: validation must be deterministic
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 10000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    // Latin square + identity + associativity force two-sided inverses; the
    // check can only fail when associativity was sampled rather than proven.
    std::vector<int> inverse(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            if (mult[g][h] == identity && mult[h][g] == identity) {
                inverse[g] = static_cast<int>(h);
                break;
            }
        }
        if (inverse[g] < 0)
            throw ValidationError("element '" + labels[g] + "' has no two-sided inverse");
    }

    Group g;
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.mult_ = std::move(mult);
    g.identity_ = identity;
    g.inverse_ = std::move(inverse);
    for (std::size_t i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], static_cast<int>(i));
    return g;
}

/// The quaternion group of order 8, elements x^a y^b with a mod 4, b mod 2,
/// subject to x^4 = 1, y^2 = x^2, y x = x^{-1} y.
inline Group quaternion_group() {
    const std::vector<std::string> labels = {"1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"};
    auto idx = [](int a, int b) { return (b == 0 ? 0 : 4) + ((a % 4) + 4) % 4; };
    std::vector<std::vector<int>> mult(8, std::vector<int>(8, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d) {
                    int ra, rb;
                    if (b == 0) {
                        ra = a + c;
                        rb = d;
                    } else if (d == 0) {
                        ra = a - c;
                        rb = 1;
                    } else {
                        ra = a - c + 2; // y^2 = x^2
                        rb = 0;
                    }
                    mult[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, d))] =
                        idx(ra, rb);
                }
    return group_from_table("Q8", labels, std::move(mult));
}

/// Z_n with labels g^0 .. g^{n-1}.
inline Group cyclic_group(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be >= 1");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) labels.push_back("g^" + std::to_string(k));
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return group_from_table("Z" + std::to_string(n), labels, std::move(mult));
}

struct ConjClass {
    int representative = 0;       // least-index member
    std::vector<int> members;     // sorted
};

/// Conjugacy classes sorted by representative; classes partition the group.
inline std::vector<ConjClass> conjugacy_classes(const Group& g) {
    const int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<ConjClass> classes;
    for (int rep = 0; rep < n; ++rep) {
        if (seen[static_cast<std::size_t>(rep)]) continue;
        ConjClass cls;
        cls.representative = rep;
        for (int h = 0; h < n; ++h) {
            int c = g.conjugate(h, rep);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                cls.members.push_back(c);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

struct Subgroup {
    Group parent;               // the ambient group
    std::vector<int> members;   // sorted parent indices
    Group as_group;             // induced group on the members
    std::vector<int> to_parent; // subgroup index -> parent index (= members)
    std::vector<int> from_parent; // parent index -> subgroup index or -1

    bool contains(int parent_elem) const {
        return from_parent[static_cast<std::size_t>(parent_elem)] >= 0;
    }
};

inline Subgroup subgroup_from_members(const Group& g, std::vector<int> members,
                                      const std::string& name) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<int> from_parent(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        from_parent[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    if (!std::any_of(members.begin(), members.end(), [&](int m) { return m == g.identity(); }))
        throw ValidationError("subgroup does not contain the identity");

    std::vector<std::string> labels;
    for (int m : members) labels.push_back(g.label(m));
    std::vector<std::vector<int>> mult(members.size(), std::vector<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            int prod = g.op(members[i], members[j]);
            int k = from_parent[static_cast<std::size_t>(prod)];
            if (k < 0)
                throw ValidationError("subgroup not closed: " + g.label(members[i]) + " * " +
                                      g.label(members[j]) + " = " + g.label(prod) + " escapes");
            mult[i][j] = k;
        }

    Subgroup s;
    s.parent = g;
    s.members = std::move(members);
    s.as_group = group_from_table(name, std::move(labels), std::move(mult));
    s.to_parent = s.members;
    s.from_parent = std::move(from_parent);
    return s;
}

/// G^g = { h : hg = gh }.
inline Subgroup centralizer(const Group& g, int elem) {
    std::vector<int> members;
    for (int h = 0; h < g.order(); ++h)
        if (g.op(h, elem) == g.op(elem, h)) members.push_back(h);
    return subgroup_from_members(g, std::move(members),
                                 "centralizer(" + g.label(elem) + ")");
}

struct CosetDecomposition {
    Subgroup subgroup;
    std::vector<int> reps;      // left-coset representatives, identity's coset first
    std::vector<int> coset_of;  // parent element -> coset index

    struct Factor {
        int coset;  // k with h * rep_i = rep_k * gamma
        int gamma;  // parent index, in the subgroup
    };
    // factor[h][i] decomposes h * rep_i.
    std::vector<std::vector<Factor>> factor;
};

/// Left cosets of H in G with deterministic representatives: the identity
/// first, then greedily the least-index element not yet covered.
inline CosetDecomposition coset_reps(const Group& g, const Subgroup& h) {
    const int n = g.order();
    CosetDecomposition d;
    d.subgroup = h;
    d.coset_of.assign(static_cast<std::size_t>(n), -1);

    auto claim = [&](int rep) {
        int k = static_cast<int>(d.reps.size());
        d.reps.push_back(rep);
        for (int m : h.members) d.coset_of[static_cast<std::size_t>(g.op(rep, m))] = k;
    };
    claim(g.identity());
    for (int e = 0; e < n; ++e)
        if (d.coset_of[static_cast<std::size_t>(e)] < 0) claim(e);

    if (d.reps.size() * h.members.size() != static_cast<std::size_t>(n))
        throw ValidationError("coset decomposition does not tile the group");

    d.factor.assign(static_cast<std::size_t>(n), std::vector<CosetDecomposition::Factor>(d.reps.size()));
    for (int elem = 0; elem < n; ++elem)
        for (std::size_t i = 0; i < d.reps.size(); ++i) {
            int t = g.op(elem, d.reps[i]);
            int k = d.coset_of[static_cast<std::size_t>(t)];
            int gamma = g.op(g.inv(d.reps[static_cast<std::size_t>(k)]), t);
            if (!h.contains(gamma))
                throw ValidationError("coset factorization left the subgroup");
            d.factor[static_cast<std::size_t>(elem)][i] = {k, gamma};
        }
    return d;
}

} // namespace q8n
