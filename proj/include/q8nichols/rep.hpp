#pragma once

// Exact matrix representations over Q(zeta_m) and their characters.
// A representation stores one matrix per group element; construction from
// generator images extends along a breadth-first word table and then checks
// the homomorphism property on every pair, so an invalid assignment (a
// relation violation) cannot slip through.

#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"
#include "q8nichols/group.hpp"
#include "q8nichols/matrix.hpp"

namespace q8n {

struct Representation {
    Group group;
    unsigned modulus = 1;
    int dim = 1;
    std::vector<Mat> matrices;         // per element index
    std::string name;
    std::vector<std::string> basis_names;

    const Mat& at(int g) const { return matrices.at(static_cast<std::size_t>(g)); }
};

/// rho(g) v as a coefficient vector.
inline std::vector<CycNum> rep_apply(const Representation& rep, int g,
                                     const std::vector<CycNum>& v) {
    if (v.size() != static_cast<std::size_t>(rep.dim))
        throw Error("rep_apply: vector length " + std::to_string(v.size()) +
                    " does not match representation dimension " + std::to_string(rep.dim));
    return rep.at(g).apply(v);
}

inline std::vector<std::string> default_basis_names(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

/// Extends generator images to the whole group and validates.
inline Representation rep_from_matrices(const Group& g,
                                        const std::vector<std::pair<int, Mat>>& generator_images,
                                        std::string name = "rep",
                                        std::vector<std::string> basis_names = {}) {
    if (generator_images.empty()) throw ValidationError("no generator images given");
    const unsigned modulus = generator_images.front().second.modulus();
    const std::size_t d = generator_images.front().second.rows();
    for (const auto& [elem, mat] : generator_images) {
        if (elem < 0 || elem >= g.order())
            throw ValidationError("generator index out of range");
        if (mat.rows() != d || mat.cols() != d)
            throw ValidationError("generator image for '" + g.label(elem) + "' is not " +
                                  std::to_string(d) + "x" + std::to_string(d));
        if (mat.modulus() != modulus)
            throw ModulusMismatch("generator images use different cyclotomic moduli");
        if (rank_fraction_free(mat) != d)
            throw ValidationError("generator image for '" + g.label(elem) + "' is singular");
    }

    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<std::optional<Mat>> mats(n);
    mats[static_cast<std::size_t>(g.identity())] = Mat::identity(d, modulus);
    std::queue<int> frontier;
    frontier.push(g.identity());
    std::size_t reached = 1;
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (const auto& [gen, mat] : generator_images) {
            int next = g.op(cur, gen);
            if (mats[static_cast<std::size_t>(next)]) continue;
            mats[static_cast<std::size_t>(next)] = *mats[static_cast<std::size_t>(cur)] * mat;
            frontier.push(next);
            ++reached;
        }
    }
    if (reached != n) {
        std::string gens;
        for (const auto& [gen, _] : generator_images) gens += (gens.empty() ? "" : ", ") + g.label(gen);
        throw ValidationError("generators {" + gens + "} do not generate " + g.name());
    }

    Representation rep;
    rep.group = g;
    rep.modulus = modulus;
    rep.dim = static_cast<int>(d);
    rep.name = std::move(name);
    rep.basis_names = basis_names.empty() ? default_basis_names(static_cast<int>(d)) : std::move(basis_names);
    rep.matrices.reserve(n);
    for (auto& m : mats) rep.matrices.push_back(std::move(*m));

    // Homomorphism on all pairs; this is what catches relation violations.
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (rep.at(a) * rep.at(b) != rep.at(g.op(a, b)))
                throw ValidationError("images violate the relation " + g.label(a) + " * " +
                                      g.label(b) + " = " + g.label(g.op(a, b)) +
                                      "; the assignment is not a representation");
    return rep;
}

/// The n one-dimensional irreducibles of a cyclic group: for a chosen
/// generator s of order d, phi_t(s^k) = zeta_m^{(m/d) t k} inside the
/// ambient field Q(zeta_m). The group must be cyclic and d must divide m.
inline std::vector<Representation> cyclic_irreps_in(const Group& g, int generator, unsigned modulus) {
    const int d = g.order();
    if (g.element_order(generator) != d)
        throw ValidationError("element '" + g.label(generator) + "' does not generate " + g.name());
    if (modulus % static_cast<unsigned>(d) != 0)
        throw ValidationError("cyclic order " + std::to_string(d) + " does not divide modulus " +
                              std::to_string(modulus));
    std::vector<Representation> reps;
    for (int t = 0; t < d; ++t) {
        Mat img(1, 1, modulus);
        img(0, 0) = CycNum::zeta(modulus, static_cast<long>(modulus / static_cast<unsigned>(d)) * t);
        reps.push_back(rep_from_matrices(g, {{generator, img}}, "phi" + std::to_string(t),
                                         {"u" + std::to_string(t)}));
    }
    return reps;
}

/// Irreducibles of Z_n with the generator g^1, scalars in Q(zeta_n).
inline std::vector<Representation> cyclic_irreps(int n) {
    Group zn = cyclic_group(n);
    int gen = n == 1 ? zn.identity() : 1;
    return cyclic_irreps_in(zn, gen, static_cast<unsigned>(n));
}

/// The five irreducibles of the quaternion group: four sign characters and
/// the faithful two-dimensional one with x acting by diag(i, -i) and y by
/// the rotation sending v1 to v2 and v2 to -v1.
inline std::vector<Representation> q8_irreps() {
    Group q8 = quaternion_group();
    const unsigned m = 4;
    const int x = q8.require_element("x");
    const int y = q8.require_element("y");

    auto one_dim = [&](int sx, int sy, int idx) {
        Mat mx(1, 1, m), my(1, 1, m);
        mx(0, 0) = CycNum::from_int(m, sx);
        my(0, 0) = CycNum::from_int(m, sy);
        return rep_from_matrices(q8, {{x, mx}, {y, my}}, "rho" + std::to_string(idx),
                                 {"x" + std::to_string(idx)});
    };

    std::vector<Representation> reps;
    reps.push_back(one_dim(1, 1, 1));
    reps.push_back(one_dim(1, -1, 2));
    reps.push_back(one_dim(-1, 1, 3));
    reps.push_back(one_dim(-1, -1, 4));

    Mat mx(2, 2, m), my(2, 2, m);
    mx(0, 0) = CycNum::zeta(m, 1);
    mx(1, 1) = CycNum::zeta(m, 3);
    my(0, 1) = -CycNum::one(m);
    my(1, 0) = CycNum::one(m);
    reps.push_back(rep_from_matrices(q8, {{x, mx}, {y, my}}, "rho5", {"v1", "v2"}));
    return reps;
}

struct Character {
    Group group;
    std::vector<ConjClass> classes;  // the class order the values follow
    std::vector<CycNum> values;      // trace on each class representative
};

inline Character character(const Representation& rep) {
    Character chi;
    chi.group = rep.group;
    chi.classes = conjugacy_classes(rep.group);
    for (const auto& cls : chi.classes) {
        CycNum tr = CycNum::zero(rep.modulus);
        const Mat& m = rep.at(cls.representative);
        for (int i = 0; i < rep.dim; ++i) tr += m(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        chi.values.push_back(tr);
    }
    return chi;
}

/// <chi, psi> = (1/|G|) sum_g chi(g) conj(psi(g)), class-weighted.
/// Equals 1 exactly when the representation is irreducible.
inline CycNum inner_product(const Character& chi, const Character& psi) {
    if (!chi.group.same_content(psi.group))
        throw ValidationError("characters live on different groups");
    unsigned m = chi.values.at(0).modulus();
    CycNum acc = CycNum::zero(m);
    for (std::size_t c = 0; c < chi.classes.size(); ++c) {
        CycNum term = chi.values[c] * psi.values[c].conj();
        acc += term.scaled(mpq_class(static_cast<long>(chi.classes[c].members.size())));
    }
    return acc.scaled(mpq_class(1, chi.group.order()));
}

} // namespace q8n
