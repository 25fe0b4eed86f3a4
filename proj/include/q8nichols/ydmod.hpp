#pragma once

// Induced Yetter-Drinfeld modules over a finite group: for a class
// representative g and a representation V of the centralizer G^g, build
// kG (x)_{kG^g} V on the basis (coset rep r_i, basis vector v_j), with
//
//   h . (r_i (x) v) = r_k (x) rho(gamma) v   where h r_i = r_k gamma,
//   deg(r_i (x) v) = r_i g r_i^{-1},
//
// and the group-like coaction delta(b) = deg(b) (x) b. The braiding is
// c(b (x) b') = deg(b) . b' (x) b.
//
// Basis order: cosets in decomposition order (identity's coset first), then
// the representation basis — this pins the matrices reproducibly.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "q8nichols/braidlin.hpp"
#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"
#include "q8nichols/group.hpp"
#include "q8nichols/matrix.hpp"
#include "q8nichols/rep.hpp"

namespace q8n {

struct YDModule {
    Group group;
    int base_point = 0;            // the class representative g
    Representation rep;            // of the centralizer, on its as_group
    Subgroup cent;                 // G^g
    CosetDecomposition cosets;     // for G^g in G
    int dim = 0;                   // |O_g| * dim V
    std::vector<std::string> basis_labels; // "r⊗v"
    std::vector<int> degree;       // per basis vector, parent element r_i g r_i^{-1}
    std::vector<Mat> action;       // per group element, dim x dim

    int basis_index(std::size_t coset, int vec) const {
        return static_cast<int>(coset) * rep.dim + vec;
    }
};

inline YDModule induce_yd(const Group& g, int base_point, const Representation& rep) {
    Subgroup cent = centralizer(g, base_point);
    if (!rep.group.same_content(cent.as_group))
        throw ValidationError("representation group '" + rep.group.name() +
                              "' is not the centralizer of '" + g.label(base_point) + "'");

    YDModule mod;
    mod.group = g;
    mod.base_point = base_point;
    mod.rep = rep;
    mod.cent = std::move(cent);
    mod.cosets = coset_reps(g, mod.cent);
    const std::size_t ncos = mod.cosets.reps.size();
    mod.dim = static_cast<int>(ncos) * rep.dim;

    for (std::size_t i = 0; i < ncos; ++i) {
        int r = mod.cosets.reps[i];
        int deg = g.conjugate(r, base_point);
        for (int j = 0; j < rep.dim; ++j) {
            mod.basis_labels.push_back(g.label(r) + "⊗" + rep.basis_names[static_cast<std::size_t>(j)]);
            mod.degree.push_back(deg);
        }
    }

    const unsigned m = rep.modulus;
    for (int h = 0; h < g.order(); ++h) {
        Mat act(static_cast<std::size_t>(mod.dim), static_cast<std::size_t>(mod.dim), m);
        for (std::size_t i = 0; i < ncos; ++i) {
            auto [k, gamma] = mod.cosets.factor[static_cast<std::size_t>(h)][i];
            int gamma_sub = mod.cent.from_parent[static_cast<std::size_t>(gamma)];
            const Mat& rg = rep.at(gamma_sub);
            for (int j = 0; j < rep.dim; ++j)
                for (int jj = 0; jj < rep.dim; ++jj)
                    act(static_cast<std::size_t>(mod.basis_index(static_cast<std::size_t>(k), jj)),
                        static_cast<std::size_t>(mod.basis_index(i, j))) =
                        rg(static_cast<std::size_t>(jj), static_cast<std::size_t>(j));
        }
        mod.action.push_back(std::move(act));
    }
    return mod;
}

struct YdCompatCheck {
    bool ok = true;
    int element = -1;  // witness group element
    int basis = -1;    // witness basis vector
    std::string detail;
};

/// The graded compatibility g . M_s ⊆ M_{g s g^{-1}}, checked on every
/// (element, basis vector) pair; returns the violating pair on failure.
inline YdCompatCheck check_yd_compat(const YDModule& mod) {
    for (int h = 0; h < mod.group.order(); ++h) {
        const Mat& act = mod.action[static_cast<std::size_t>(h)];
        for (int b = 0; b < mod.dim; ++b) {
            int expected = mod.group.conjugate(h, mod.degree[static_cast<std::size_t>(b)]);
            for (int r = 0; r < mod.dim; ++r) {
                if (act(static_cast<std::size_t>(r), static_cast<std::size_t>(b)).is_zero()) continue;
                if (mod.degree[static_cast<std::size_t>(r)] != expected) {
                    YdCompatCheck bad;
                    bad.ok = false;
                    bad.element = h;
                    bad.basis = b;
                    bad.detail = mod.group.label(h) + " . " + mod.basis_labels[static_cast<std::size_t>(b)] +
                                 " has a component of degree " +
                                 mod.group.label(mod.degree[static_cast<std::size_t>(r)]) +
                                 ", expected degree " + mod.group.label(expected);
                    return bad;
                }
            }
        }
    }
    return {};
}

/// c(b_i (x) b_j) = (deg(b_i) . b_j) (x) b_i expanded over the tensor basis.
inline BraidOp braiding_operator(const YDModule& mod) {
    const std::size_t d = static_cast<std::size_t>(mod.dim);
    BraidOp c;
    c.dim = mod.dim;
    c.matrix = Mat(d * d, d * d, mod.rep.modulus);
    for (std::size_t i = 0; i < d; ++i) {
        const Mat& act = mod.action[static_cast<std::size_t>(mod.degree[i])];
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const CycNum& coeff = act(k, j);
                if (!coeff.is_zero()) c.matrix(k * d + i, i * d + j) = coeff;
            }
    }
    return c;
}

} // namespace q8n
