#include <doctest.h>

#include "q8nichols/ydmod.hpp"

using namespace q8n;

namespace {

Group q8() { return quaternion_group(); }

Representation phi_of(const Group& g, const char* class_label, int t) {
    Subgroup cent = centralizer(g, g.require_element(class_label));
    int gen = cent.from_parent[static_cast<std::size_t>(g.require_element(class_label))];
    return cyclic_irreps_in(cent.as_group, gen, 4)[static_cast<std::size_t>(t)];
}

std::vector<CycNum> basis_vec(int dim, int k) {
    std::vector<CycNum> v(static_cast<std::size_t>(dim), CycNum::zero(4));
    v[static_cast<std::size_t>(k)] = CycNum::one(4);
    return v;
}

// All 22 (class representative, irrep) pairs over Q8.
std::vector<YDModule> all_q8_modules() {
    Group g = q8();
    std::vector<YDModule> mods;
    for (const auto& cls : conjugacy_classes(g)) {
        Subgroup cent = centralizer(g, cls.representative);
        if (cent.as_group.order() == 8) {
            for (const auto& rho : q8_irreps()) mods.push_back(induce_yd(g, cls.representative, rho));
        } else {
            int gen = cent.from_parent[static_cast<std::size_t>(cls.representative)];
            for (const auto& phi : cyclic_irreps_in(cent.as_group, gen, 4))
                mods.push_back(induce_yd(g, cls.representative, phi));
        }
    }
    return mods;
}

} // namespace

TEST_CASE("induced module actions match the hand computations") {
    Group g = q8();

    // M(O_x, phi0): y . v1 = v2 and x . v2 = v2, with v1 = 1(x)u0, v2 = y(x)u0.
    auto m0 = induce_yd(g, g.require_element("x"), phi_of(g, "x", 0));
    REQUIRE(m0.dim == 2);
    CHECK(m0.basis_labels[0] == "1⊗u0");
    CHECK(m0.basis_labels[1] == "y⊗u0");
    CHECK(m0.action[static_cast<std::size_t>(g.require_element("y"))].apply(basis_vec(2, 0)) == basis_vec(2, 1));
    CHECK(m0.action[static_cast<std::size_t>(g.require_element("x"))].apply(basis_vec(2, 1)) == basis_vec(2, 1));

    // M(O_1, rho2): y acts by -1, degree is the identity.
    auto m2 = induce_yd(g, g.identity(), q8_irreps()[1]);
    REQUIRE(m2.dim == 1);
    CHECK(m2.degree[0] == g.identity());
    CHECK(m2.action[static_cast<std::size_t>(g.require_element("y"))](0, 0) == CycNum::from_int(4, -1));

    // M(O_y, phi1): y . v2 = q^3 v2 with v2 = x(x)u1.
    auto my = induce_yd(g, g.require_element("y"), phi_of(g, "y", 1));
    REQUIRE(my.dim == 2);
    CHECK(my.basis_labels[1] == "x⊗u1");
    auto img = my.action[static_cast<std::size_t>(g.require_element("y"))].apply(basis_vec(2, 1));
    CHECK(img[1] == CycNum::zeta(4, 3));
    CHECK(img[0].is_zero());
}

TEST_CASE("degrees follow the conjugated base point") {
    Group g = q8();
    auto m = induce_yd(g, g.require_element("x"), phi_of(g, "x", 1));
    CHECK(g.label(m.degree[0]) == "x");
    CHECK(g.label(m.degree[1]) == "x3"); // y |> x = x3

    auto mxy = induce_yd(g, g.require_element("xy"), phi_of(g, "xy", 2));
    CHECK(g.label(mxy.degree[0]) == "xy");
    CHECK(g.label(mxy.degree[1]) == "x3y"); // x |> xy = x3y
}

TEST_CASE("enumeration: 5+4+5+4+4 modules with dims |O_g| * dim V") {
    Group g = q8();
    auto mods = all_q8_modules();
    REQUIRE(mods.size() == 22);
    std::vector<int> dims;
    for (const auto& m : mods) dims.push_back(m.dim);
    CHECK(dims == std::vector<int>{1, 1, 1, 1, 2,   // O_1: rho1..rho5
                                   2, 2, 2, 2,      // O_x: phi0..phi3
                                   1, 1, 1, 1, 2,   // O_x2
                                   2, 2, 2, 2,      // O_y
                                   2, 2, 2, 2});    // O_xy
    for (const auto& m : mods) {
        int orbit = 0;
        for (const auto& cls : conjugacy_classes(g))
            for (int mem : cls.members)
                if (mem == m.base_point) orbit = static_cast<int>(cls.members.size());
        CHECK(m.dim == orbit * m.rep.dim);
    }
}

TEST_CASE("Yetter-Drinfeld compatibility holds for every induced module") {
    for (const auto& m : all_q8_modules()) {
        auto check = check_yd_compat(m);
        CHECK(check.ok);
    }
}

TEST_CASE("corrupted action tables are caught with a witness") {
    Group g = q8();
    auto m = induce_yd(g, g.require_element("x"), phi_of(g, "x", 1));
    // Make y fix v1 instead of sending it to the y-coset: the image degree
    // (x) no longer matches y |> x = x3.
    YDModule bad = m;
    Mat broken(2, 2, 4);
    broken(0, 0) = CycNum::one(4);
    broken(1, 1) = CycNum::one(4);
    bad.action[static_cast<std::size_t>(g.require_element("y"))] = broken;
    auto check = check_yd_compat(bad);
    REQUIRE_FALSE(check.ok);
    CHECK(check.element == g.require_element("y"));
    // The witness really is a violation: the reported component's degree
    // differs from the conjugated degree of the basis vector.
    int expected = g.conjugate(check.element, bad.degree[static_cast<std::size_t>(check.basis)]);
    const Mat& act = bad.action[static_cast<std::size_t>(check.element)];
    bool found_violation = false;
    for (int r = 0; r < bad.dim; ++r)
        if (!act(static_cast<std::size_t>(r), static_cast<std::size_t>(check.basis)).is_zero() &&
            bad.degree[static_cast<std::size_t>(r)] != expected)
            found_violation = true;
    CHECK(found_violation);

    // The trivial-group module passes trivially.
    Group triv = group_from_table("trivial", {"e"}, {{0}});
    Mat id1 = Mat::identity(1, 1);
    auto triv_rep = rep_from_matrices(triv, {{0, id1}}, "triv");
    CHECK(check_yd_compat(induce_yd(triv, 0, triv_rep)).ok);
}

TEST_CASE("braiding operators match the hand computations") {
    Group g = q8();

    // M(O_x, phi1): c(v1 (x) v2) = q^3 v2 (x) v1.
    auto m1 = induce_yd(g, g.require_element("x"), phi_of(g, "x", 1));
    auto c1 = braiding_operator(m1);
    CHECK(c1.matrix(2, 1) == CycNum::zeta(4, 3)); // column (0,1) -> row (1,0)
    for (std::size_t r = 0; r < 4; ++r)
        if (r != 2) CHECK(c1.matrix(r, 1).is_zero());

    // M(O_1, rho1): one-dimensional, c = [[1]].
    auto mt = induce_yd(g, g.identity(), q8_irreps()[0]);
    auto ct = braiding_operator(mt);
    CHECK(ct.matrix.rows() == 1);
    CHECK(ct.matrix(0, 0).is_one());

    // M(O_x2, rho5): c(w5 (x) w6) = -w6 (x) w5.
    auto m5 = induce_yd(g, g.require_element("x2"), q8_irreps()[4]);
    auto c5 = braiding_operator(m5);
    CHECK(c5.matrix(2, 1) == CycNum::from_int(4, -1));

    // Every braiding operator is invertible.
    for (const auto& m : all_q8_modules()) {
        auto c = braiding_operator(m);
        CHECK(rank_fraction_free(c.matrix) == c.matrix.rows());
    }
}

TEST_CASE("the induced action is a representation of G") {
    Group g = q8();
    for (const char* cls : {"x", "y"}) {
        auto m = induce_yd(g, g.require_element(cls), phi_of(g, cls, 1));
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                CHECK(m.action[static_cast<std::size_t>(a)] * m.action[static_cast<std::size_t>(b)] ==
                      m.action[static_cast<std::size_t>(g.op(a, b))]);
    }
}

TEST_CASE("induction of a higher-dimensional (reducible) centralizer module") {
    // phi1 (+) phi2 of G^x induces a 4-dimensional module: two cosets times
    // a 2-dimensional representation. Exercises the block assembly.
    Group g = q8();
    Subgroup cx = centralizer(g, g.require_element("x"));
    Mat img(2, 2, 4);
    img(0, 0) = CycNum::zeta(4, 1);
    img(1, 1) = CycNum::zeta(4, 2);
    auto rep = rep_from_matrices(cx.as_group, {{cx.from_parent[1], img}}, "phi1+phi2");
    auto mod = induce_yd(g, g.require_element("x"), rep);
    CHECK(mod.dim == 4);
    CHECK(check_yd_compat(mod).ok);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            CHECK(mod.action[static_cast<std::size_t>(a)] * mod.action[static_cast<std::size_t>(b)] ==
                  mod.action[static_cast<std::size_t>(g.op(a, b))]);
    auto c = braiding_operator(mod);
    CHECK(check_braid_equation(c).ok);
    CHECK(rank_fraction_free(c.matrix) == 16);
    // The reducible character has norm 2, the irreducibility test value.
    auto chi = character(rep);
    CHECK(inner_product(chi, chi) == CycNum::from_int(4, 2));
}

TEST_CASE("induce_yd rejects a representation of the wrong group") {
    Group g = q8();
    // rho1 is a representation of all of Q8, not of G^x.
    CHECK_THROWS_AS(induce_yd(g, g.require_element("x"), q8_irreps()[0]), ValidationError);
}
