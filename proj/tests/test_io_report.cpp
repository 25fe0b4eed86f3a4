#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "q8nichols/json_io.hpp"

using namespace q8n;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("group JSON round trip") {
    Group g = quaternion_group();
    json j = group_to_json(g);
    auto path = temp_file("q8n_test_group.json");
    write_text_file(path.string(), j.dump(2));
    Group back = load_group_file(path.string());
    CHECK(back.same_content(g));
    CHECK(back.name() == "Q8");
    std::filesystem::remove(path);
}

TEST_CASE("group JSON validation failures") {
    json bad = {{"name", "bad"}, {"labels", {"e", "a"}}, {"mult", {{0, 0}, {1, 0}}}};
    CHECK_THROWS_AS(group_from_json(bad), ValidationError); // not a Latin square
    json missing = {{"name", "bad"}, {"labels", {"e"}}};
    CHECK_THROWS_AS(group_from_json(missing), ValidationError);
    CHECK_THROWS_AS(load_group_file("/nonexistent/definitely_missing.json"), FileNotFound);
}

TEST_CASE("rep files: load, validate, and reject relation violations") {
    Group q8 = quaternion_group();
    Subgroup cx = centralizer(q8, q8.require_element("x"));

    json good = {{"group", "centralizer(x)"},
                 {"class", "x"},
                 {"name", "phi1"},
                 {"dim", 1},
                 {"generators", {{"x", {{"z4^1"}}}}}};
    auto rep = realize_rep(rep_file_from_json(good), cx.as_group, 4);
    CHECK(rep.dim == 1);
    CHECK(rep.at(cx.from_parent[1])(0, 0) == CycNum::zeta(4, 1));

    // x |-> [z8^1] violates x^4 = 1 inside Q(zeta_8).
    json bad = {{"group", "centralizer(x)"},
                {"dim", 1},
                {"generators", {{"x", {{"z8^1"}}}}}};
    try {
        realize_rep(rep_file_from_json(bad), cx.as_group, 8);
        FAIL("expected relation violation");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("relation") != std::string::npos);
    }

    json unknown = {{"group", "centralizer(x)"}, {"dim", 1}, {"generators", {{"w", {{"1"}}}}}};
    CHECK_THROWS_AS(realize_rep(rep_file_from_json(unknown), cx.as_group, 4), ValidationError);
}

TEST_CASE("braiding matrix JSON: modulus inference and round trip") {
    // json::array throughout: brace-lists of string pairs would collapse
    // into objects.
    json j;
    j["entries"] = json::array({json::array({"z4^1", "z4^3"}), json::array({"z4^3", "z4^1"})});
    BraidingMatrix q = braiding_matrix_from_json(j);
    CHECK(q.rank == 2);
    CHECK(q.entries.modulus() == 4);
    CHECK(q.q(0, 0) == CycNum::zeta(4, 1));

    json back = braiding_matrix_to_json(q);
    BraidingMatrix q2 = braiding_matrix_from_json(back);
    CHECK(q2.entries == q.entries);

    json rational_only;
    rational_only["rank"] = 1;
    rational_only["entries"] = json::array({json::array({"-1"})});
    BraidingMatrix qr = braiding_matrix_from_json(rational_only);
    CHECK(qr.entries.modulus() == 1);
    CHECK(root_order(qr.q(0, 0)) == 2u);

    json mixed;
    mixed["entries"] = json::array({json::array({"z4^1", "z3^1"}), json::array({"1", "1"})});
    CHECK_THROWS_AS(braiding_matrix_from_json(mixed), ModulusMismatch);

    json zero;
    zero["entries"] = json::array({json::array({"0"})});
    CHECK_THROWS_AS(braiding_matrix_from_json(zero), ValidationError);

    json wrong_rank;
    wrong_rank["rank"] = 3;
    wrong_rank["entries"] = json::array({json::array({"1"})});
    CHECK_THROWS_AS(braiding_matrix_from_json(wrong_rank), ValidationError);
}

TEST_CASE("verdict JSON round trips") {
    BraidingMatrix q;
    q.rank = 2;
    q.entries = Mat(2, 2, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = CycNum::from_int(4, -1);
    Verdict v = classify_diagonal(q);
    Verdict back = verdict_from_json(verdict_to_json(v));
    CHECK(back.type == v.type);
    CHECK(back.dim.kind == v.dim.kind);
    CHECK(back.dim.value == v.dim.value);
    CHECK(back.gkdim.kind == v.gkdim.kind);
    CHECK(back.gkdim.value == v.gkdim.value);
    CHECK(back.cartan == v.cartan);

    json weird = {{"type", "banana"}, {"dim", 1}, {"gkdim", 0}};
    CHECK_THROWS_AS(verdict_from_json(weird), ValidationError);
}

TEST_CASE("hilbert JSON encodes exact or lower-bound totals") {
    HilbertPrefix done{3, {1, 1, 0, 0}, true};
    json jd = hilbert_to_json(done);
    CHECK(jd["total"] == 2);
    HilbertPrefix open{2, {1, 2, 4}, false};
    json jo = hilbert_to_json(open);
    CHECK(jo["total"] == ">= 7");
}

TEST_CASE("yd module JSON dump") {
    Group g = quaternion_group();
    Subgroup cx = centralizer(g, g.require_element("x"));
    auto phi2 = cyclic_irreps_in(cx.as_group, cx.from_parent[1], 4)[2];
    json j = yd_module_to_json(induce_yd(g, g.require_element("x"), phi2));
    CHECK(j["dim"] == 2);
    CHECK(j["basis"][0] == "1⊗u2");
    CHECK(j["degrees"][1] == "x3");
    CHECK(j["braiding"].size() == 4);
    // y . v2 = y^2 (x) u2 = phi2(x^2) v1 = v1 (phi2(x^2) = zeta_4^4 = 1).
    CHECK(j["action"]["y"][0][1] == "1");
}

TEST_CASE("report: determinism, theorem sets, and the phi3 flag") {
    Group g = quaternion_group();
    ReportOptions opt;
    opt.run_oracle = false; // verdicts only; the oracle is exercised elsewhere
    Report r1 = build_report(g, opt);
    Report r2 = build_report(g, opt);
    CHECK(render_report_text(r1) == render_report_text(r2));
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());

    CHECK(r1.rows.size() == 22);
    CHECK(r1.finite_gk_rows().size() == 16);
    CHECK(r1.finite_dim_rows().size() == 4);

    bool flagged = false;
    for (const auto& row : r1.rows)
        if (row.class_label == "x" && row.irrep_label == "phi3") {
            CHECK_FALSE(row.flags.empty());
            CHECK(row.verdict.type == VerdictType::cartan_affine);
            flagged = true;
        }
    CHECK(flagged);

    // Markdown rendering carries the two summary tables.
    std::string md = render_report_markdown(r1);
    CHECK(md.find("## Finite GK-dimension") != std::string::npos);
    CHECK(md.find("## Finite dimension") != std::string::npos);
}

TEST_CASE("report over an abelian group with cyclic centralizers") {
    Report r = build_report(cyclic_group(4), ReportOptions{4, true});
    CHECK(r.rows.size() == 16); // 4 singleton classes x 4 characters
    for (const auto& row : r.rows) CHECK(row.braiding.has_value());
}

TEST_CASE("missing irreps for a non-built-in centralizer") {
    // Klein four group: every centralizer is the whole group, which is
    // neither cyclic nor the quaternion group.
    Group v4 = group_from_table("V4", {"e", "a", "b", "ab"},
                                {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    try {
        build_report(v4, ReportOptions{2, false});
        FAIL("expected MissingIrreps");
    } catch (const MissingIrreps& e) {
        CHECK(e.centralizer.find("centralizer") != std::string::npos);
    }

    // Supplying the four sign characters per class makes it work.
    std::vector<std::pair<std::string, Representation>> user;
    for (const auto& cls : conjugacy_classes(v4)) {
        Subgroup cent = centralizer(v4, cls.representative);
        for (int sa : {1, -1})
            for (int sb : {1, -1}) {
                Mat ma(1, 1, 2), mb(1, 1, 2);
                ma(0, 0) = CycNum::from_int(2, sa);
                mb(0, 0) = CycNum::from_int(2, sb);
                std::string nm = std::string("chi_") + (sa > 0 ? "p" : "m") + (sb > 0 ? "p" : "m");
                user.emplace_back(v4.label(cls.representative),
                                  rep_from_matrices(cent.as_group, {{1, ma}, {2, mb}}, nm));
            }
    }
    Report r = build_report(v4, ReportOptions{3, true}, user);
    CHECK(r.rows.size() == 16);
    // Braidings are [[chi(g)]]: classify as polynomial or truncated lines.
    for (const auto& row : r.rows) {
        CHECK(row.braiding.has_value());
        CHECK((row.verdict.gkdim.kind == GkValue::Kind::value));
    }
}
