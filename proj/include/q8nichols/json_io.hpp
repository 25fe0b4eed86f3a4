#pragma once

// JSON schemas for every file format and structured output:
//
//   group file:    {"name", "labels": [...], "mult": [[indices]]}
//   rep file:      {"group", "dim", "generators": {"label": [[cyc strings]]},
//                   "name"?, "class"?}
//   braiding file: {"rank", "entries": [[cyc strings]], "modulus"?}
//   verdict:       {"type", "dim", "gkdim", "cartan", "evidence"}
//   hilbert:       {"cutoff", "dims", "terminated", "total"}
//
// Cyclotomic scalars are encoded as their text form ("z4^1", "1/2 + ...").

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "q8nichols/braidlin.hpp"
#include "q8nichols/classify.hpp"
#include "q8nichols/cyclo.hpp"
#include "q8nichols/error.hpp"
#include "q8nichols/group.hpp"
#include "q8nichols/nichols.hpp"
#include "q8nichols/rep.hpp"
#include "q8nichols/report.hpp"
#include "q8nichols/ydmod.hpp"

namespace q8n {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// Groups

inline json group_to_json(const Group& g) {
    return json{{"name", g.name()}, {"labels", g.labels()}, {"mult", g.table()}};
}

inline Group group_from_json(const json& j) {
    try {
        return group_from_table(j.value("name", "group"),
                                j.at("labels").get<std::vector<std::string>>(),
                                j.at("mult").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("group file schema violation: ") + e.what());
    }
}

inline Group load_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Matrices of cyclotomic scalars

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

// Every z<m> token in the entries must carry one and the same modulus;
// entries without z-tokens are plain rationals. Falls back to 1 (plain Q).
inline unsigned infer_modulus(const std::vector<std::vector<std::string>>& entries) {
    unsigned m = 0;
    for (const auto& row : entries)
        for (const auto& s : row)
            for (std::size_t i = 0; i < s.size(); ++i)
                if (s[i] == 'z') {
                    std::size_t j = i + 1;
                    unsigned v = 0;
                    while (j < s.size() && is_digit(s[j])) v = v * 10 + static_cast<unsigned>(s[j++] - '0');
                    if (j == i + 1) continue; // not a modulus token
                    if (m == 0) m = v;
                    else if (m != v)
                        throw ModulusMismatch("matrix entries mix moduli z" + std::to_string(m) +
                                              " and z" + std::to_string(v));
                    i = j;
                }
    return m == 0 ? 1 : m;
}

} // namespace detail

inline Mat mat_from_json(const json& j, unsigned modulus) {
    auto entries = j.get<std::vector<std::vector<std::string>>>();
    std::size_t rows = entries.size();
    std::size_t cols = rows == 0 ? 0 : entries.front().size();
    Mat m(rows, cols, modulus);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw ValidationError("ragged matrix in JSON");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = CycNum::parse(entries[i][k], modulus);
    }
    return m;
}

inline json braiding_matrix_to_json(const BraidingMatrix& q) {
    return json{{"rank", q.rank}, {"entries", mat_to_json(q.entries)}, {"modulus", q.entries.modulus()}};
}

inline BraidingMatrix braiding_matrix_from_json(const json& j) {
    BraidingMatrix q;
    try {
        auto entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
        unsigned modulus = j.contains("modulus") ? j.at("modulus").get<unsigned>()
                                                 : detail::infer_modulus(entries);
        q.entries = mat_from_json(j.at("entries"), modulus);
        q.rank = j.contains("rank") ? j.at("rank").get<int>() : static_cast<int>(q.entries.rows());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("braiding matrix schema violation: ") + e.what());
    }
    if (q.entries.rows() != q.entries.cols() || static_cast<int>(q.entries.rows()) != q.rank)
        throw ValidationError("braiding matrix rank does not match its entries");
    for (int i = 0; i < q.rank; ++i)
        for (int j2 = 0; j2 < q.rank; ++j2)
            if (q.q(i, j2).is_zero()) throw ValidationError("braiding matrix entries must be nonzero");
    return q;
}

inline BraidingMatrix load_braiding_matrix_file(const std::string& path) {
    return braiding_matrix_from_json(read_json_file(path));
}

// ---------------------------------------------------------------------------
// Representation files

struct RepFileData {
    std::string group_name;
    std::optional<std::string> class_label; // which conjugacy class it serves
    std::string name;
    int dim = 1;
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> generators;
};

inline RepFileData rep_file_from_json(const json& j) {
    RepFileData d;
    try {
        d.group_name = j.value("group", "");
        if (j.contains("class")) d.class_label = j.at("class").get<std::string>();
        d.name = j.value("name", "rep");
        d.dim = j.at("dim").get<int>();
        for (const auto& [label, mat] : j.at("generators").items())
            d.generators.emplace_back(label, mat.get<std::vector<std::vector<std::string>>>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("rep file schema violation: ") + e.what());
    }
    return d;
}

/// Realizes a rep file on `target` (the centralizer's group), scalars in
/// Q(zeta_modulus). Generator labels must name elements of the target;
/// validation runs through rep_from_matrices.
inline Representation realize_rep(const RepFileData& d, const Group& target, unsigned modulus) {
    std::vector<std::pair<int, Mat>> images;
    for (const auto& [label, entries] : d.generators) {
        int elem = target.require_element(label);
        Mat m = mat_from_json(json(entries), modulus);
        if (m.rows() != static_cast<std::size_t>(d.dim) || m.cols() != static_cast<std::size_t>(d.dim))
            throw ValidationError("generator image for '" + label + "' is not " +
                                  std::to_string(d.dim) + "x" + std::to_string(d.dim));
        images.emplace_back(elem, std::move(m));
    }
    return rep_from_matrices(target, images, d.name);
}

inline Representation load_rep_file(const std::string& path, const Group& target, unsigned modulus) {
    return realize_rep(rep_file_from_json(read_json_file(path)), target, modulus);
}

// ---------------------------------------------------------------------------
// Verdicts

inline json verdict_to_json(const Verdict& v) {
    json j;
    j["type"] = to_string(v.type);
    if (v.dim.kind == DimValue::Kind::finite && v.dim.value)
        j["dim"] = *v.dim.value;
    else
        j["dim"] = v.dim.str();
    if (v.gkdim.kind == GkValue::Kind::value)
        j["gkdim"] = v.gkdim.value;
    else
        j["gkdim"] = v.gkdim.str();
    j["cartan"] = v.cartan ? json(*v.cartan) : json(nullptr);
    j["evidence"] = v.evidence;
    return j;
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    try {
        std::string type = j.at("type").get<std::string>();
        bool known = false;
        for (auto t : {VerdictType::trivial_all_ones, VerdictType::quantum_linear_space,
                       VerdictType::cartan_finite, VerdictType::cartan_affine,
                       VerdictType::cartan_indefinite, VerdictType::inconclusive})
            if (type == to_string(t)) {
                v.type = t;
                known = true;
            }
        if (!known) throw ValidationError("unknown verdict type '" + type + "'");

        const auto& dim = j.at("dim");
        if (dim.is_number_unsigned() || dim.is_number_integer())
            v.dim = DimValue::finite(dim.get<unsigned long long>());
        else if (dim.get<std::string>() == "finite")
            v.dim = DimValue::finite_unvalued();
        else if (dim.get<std::string>() == "infinite")
            v.dim = DimValue::infinite();
        else
            v.dim = DimValue::unknown();

        const auto& gk = j.at("gkdim");
        if (gk.is_number_unsigned() || gk.is_number_integer())
            v.gkdim = GkValue::of(gk.get<unsigned>());
        else if (gk.get<std::string>() == "infinite")
            v.gkdim = GkValue::infinite();
        else
            v.gkdim = GkValue::unknown();

        if (j.contains("cartan") && !j.at("cartan").is_null())
            v.cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
        if (j.contains("evidence")) v.evidence = j.at("evidence").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("verdict schema violation: ") + e.what());
    }
    return v;
}

// ---------------------------------------------------------------------------
// Hilbert prefixes

inline json hilbert_to_json(const HilbertPrefix& h) {
    json j;
    j["cutoff"] = h.cutoff;
    j["dims"] = h.dims;
    j["terminated"] = h.terminated;
    if (h.terminated)
        j["total"] = h.total();
    else
        j["total"] = ">= " + std::to_string(h.total());
    return j;
}

// ---------------------------------------------------------------------------
// Yetter-Drinfeld module dumps

inline json yd_module_to_json(const YDModule& mod) {
    json j;
    j["group"] = mod.group.name();
    j["class"] = mod.group.label(mod.base_point);
    j["irrep"] = mod.rep.name;
    j["dim"] = mod.dim;
    j["basis"] = mod.basis_labels;
    json degs = json::array();
    for (int d : mod.degree) degs.push_back(mod.group.label(d));
    j["degrees"] = degs;
    json action;
    for (int g = 0; g < mod.group.order(); ++g)
        action[mod.group.label(g)] = mat_to_json(mod.action[static_cast<std::size_t>(g)]);
    j["action"] = action;
    j["braiding"] = mat_to_json(braiding_operator(mod).matrix);
    return j;
}

// ---------------------------------------------------------------------------
// Reports

inline json report_row_to_json(const ReportRow& row) {
    json j;
    j["class"] = row.class_label;
    j["irrep"] = row.irrep_label;
    j["module_dim"] = row.module_dim;
    j["braiding"] = row.braiding ? braiding_matrix_to_json(*row.braiding) : json("non-diagonal");
    j["verdict"] = verdict_to_json(row.verdict);
    j["oracle"] = row.oracle ? hilbert_to_json(*row.oracle) : json(nullptr);
    j["flags"] = row.flags;
    return j;
}

inline json report_to_json(const Report& r) {
    json j;
    j["group"] = r.group.name();
    j["modulus"] = r.modulus;
    j["max_degree"] = r.options.max_degree;
    j["oracle_enabled"] = r.options.run_oracle;
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(report_row_to_json(row));
    j["rows"] = std::move(rows);
    json gk = json::array();
    for (const auto* row : r.finite_gk_rows())
        gk.push_back(json{{"class", row->class_label},
                          {"irrep", row->irrep_label},
                          {"gkdim", row->verdict.gkdim.kind == GkValue::Kind::value
                                        ? json(row->verdict.gkdim.value)
                                        : json(row->verdict.gkdim.str())}});
    j["finite_gkdim"] = std::move(gk);
    json fd = json::array();
    for (const auto* row : r.finite_dim_rows())
        fd.push_back(json{{"class", row->class_label},
                          {"irrep", row->irrep_label},
                          {"dim", row->verdict.dim.value ? json(*row->verdict.dim.value)
                                                         : json(row->verdict.dim.str())}});
    j["finite_dim"] = std::move(fd);
    return j;
}

} // namespace q8n
