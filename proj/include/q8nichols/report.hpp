#pragma once

// End-to-end classification pipeline: enumerate (conjugacy class,
// centralizer irrep) pairs, induce each Yetter-Drinfeld module, extract and
// analyze its braiding, classify, and cross-check finite verdicts against
// the symmetrizer oracle. A verdict/oracle conflict on a finite dimension
// throws ContradictionError — it is never reported as data.

#include <cstddef>
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
#include "q8nichols/matrix.hpp"
#include "q8nichols/nichols.hpp"
#include "q8nichols/rep.hpp"
#include "q8nichols/ydmod.hpp"

namespace q8n {

struct ReportOptions {
    unsigned max_degree = 6;
    bool run_oracle = true;
    unsigned long long budget = default_symmetrizer_budget();
};

struct ReportRow {
    std::string class_label;
    std::string irrep_label;
    int module_dim = 0;
    std::optional<BraidingMatrix> braiding; // nullopt: not diagonal in the canonical basis
    Verdict verdict;
    std::optional<HilbertPrefix> oracle;
    std::vector<std::string> flags;
};

struct Report {
    Group group;
    unsigned modulus = 1;
    ReportOptions options;
    std::vector<ReportRow> rows;

    std::vector<const ReportRow*> finite_gk_rows() const {
        std::vector<const ReportRow*> out;
        for (const auto& r : rows)
            if (r.verdict.gkdim.kind == GkValue::Kind::value) out.push_back(&r);
        return out;
    }
    std::vector<const ReportRow*> finite_dim_rows() const {
        std::vector<const ReportRow*> out;
        for (const auto& r : rows)
            if (r.verdict.dim.kind == DimValue::Kind::finite) out.push_back(&r);
        return out;
    }
};

/// Built-in irreducibles of a centralizer: the five Q8 irreps when the
/// centralizer is the (content-identical) quaternion group, the phi_t
/// family when it is cyclic; nullopt otherwise.
inline std::optional<std::vector<Representation>> builtin_irreps(const Subgroup& cent,
                                                                 int base_point,
                                                                 unsigned modulus) {
    static const Group q8 = quaternion_group();
    if (cent.as_group.same_content(q8)) return q8_irreps();

    const Group& h = cent.as_group;
    const int order = h.order();
    int generator = -1;
    int base_in_sub = cent.from_parent[static_cast<std::size_t>(base_point)];
    if (base_in_sub >= 0 && h.element_order(base_in_sub) == order) {
        generator = base_in_sub; // the class representative itself generates
    } else {
        for (int e = 0; e < order; ++e)
            if (h.element_order(e) == order) {
                generator = e;
                break;
            }
    }
    if (generator < 0) return std::nullopt; // not cyclic
    if (modulus % static_cast<unsigned>(order) != 0) return std::nullopt;
    return cyclic_irreps_in(h, generator, modulus);
}

namespace detail {

inline std::string braiding_matrix_str(const BraidingMatrix& q) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < q.rank; ++i) {
        out << "[";
        for (int j = 0; j < q.rank; ++j) out << q.q(i, j).str() << (j + 1 < q.rank ? ", " : "");
        out << "]" << (i + 1 < q.rank ? ", " : "");
    }
    out << "]";
    return out.str();
}

inline void cross_check_verdict_oracle(const Verdict& v, const HilbertPrefix& h,
                                       const std::string& where) {
    if (v.dim.kind == DimValue::Kind::finite && v.dim.value) {
        if (h.terminated && h.total() != *v.dim.value)
            throw ContradictionError(where + ": verdict claims dimension " +
                                     std::to_string(*v.dim.value) + " but the symmetrizer oracle " +
                                     "finds total dimension " + std::to_string(h.total()));
        if (!h.terminated && h.total() > *v.dim.value)
            throw ContradictionError(where + ": verdict claims dimension " +
                                     std::to_string(*v.dim.value) +
                                     " but graded dimensions already sum to " +
                                     std::to_string(h.total()) + " by degree " +
                                     std::to_string(h.cutoff));
    }
    if (v.dim.kind == DimValue::Kind::infinite && h.terminated)
        throw ContradictionError(where + ": verdict claims infinite dimension but the symmetrizer "
                                 "oracle terminates with total " + std::to_string(h.total()));
}

} // namespace detail

inline ReportRow build_row(const Group& g, int base_point, const Representation& rep,
                           const ReportOptions& opt) {
    ReportRow row;
    row.class_label = g.label(base_point);
    row.irrep_label = rep.name;

    YDModule mod = induce_yd(g, base_point, rep);
    row.module_dim = mod.dim;
    auto compat = check_yd_compat(mod);
    if (!compat.ok)
        throw ValidationError("induced module (" + row.class_label + ", " + row.irrep_label +
                              ") violates Yetter-Drinfeld compatibility: " + compat.detail);
    BraidOp c = braiding_operator(mod);
    auto braid = check_braid_equation(c);
    if (!braid.ok)
        throw ValidationError("braiding of (" + row.class_label + ", " + row.irrep_label + ") " +
                              braid.describe());

    row.braiding = detect_diagonal(c);
    if (row.braiding) {
        try {
            row.verdict = classify_diagonal(*row.braiding);
        } catch (const ValidationError& e) {
            row.verdict.type = VerdictType::inconclusive;
            row.verdict.dim = DimValue::unknown();
            row.verdict.gkdim = GkValue::unknown();
            row.verdict.evidence = {std::string("classification unavailable: ") + e.what()};
        }
    } else {
        row.verdict.type = VerdictType::inconclusive;
        row.verdict.dim = DimValue::unknown();
        row.verdict.gkdim = GkValue::unknown();
        row.verdict.evidence = {"braiding is not diagonal in the canonical basis"};
    }

    if (opt.run_oracle) {
        try {
            row.oracle = hilbert_prefix(c, opt.max_degree, opt.budget);
        } catch (const BudgetExceeded& e) {
            row.flags.push_back(std::string("oracle skipped: ") + e.what());
        }
        if (row.oracle)
            detail::cross_check_verdict_oracle(row.verdict, *row.oracle,
                                               "(" + row.class_label + ", " + row.irrep_label + ")");
    }
    return row;
}

/// One row per (conjugacy class, centralizer irrep), classes in
/// representative order. `user_reps` supplies (class label, representation)
/// pairs for centralizers without built-ins.
inline Report build_report(const Group& g, const ReportOptions& opt = {},
                           const std::vector<std::pair<std::string, Representation>>& user_reps = {}) {
    Report report;
    report.group = g;
    report.modulus = g.exponent();
    report.options = opt;

    static const Group q8 = quaternion_group();
    const bool is_q8 = g.same_content(q8);

    for (const auto& cls : conjugacy_classes(g)) {
        Subgroup cent = centralizer(g, cls.representative);
        std::vector<Representation> irreps;
        auto builtin = builtin_irreps(cent, cls.representative, report.modulus);
        if (builtin) {
            irreps = std::move(*builtin);
        } else {
            for (const auto& [class_label, rep] : user_reps)
                if (class_label == g.label(cls.representative)) irreps.push_back(rep);
            if (irreps.empty()) {
                std::string members;
                for (int m : cent.members) members += (members.empty() ? "" : ", ") + g.label(m);
                throw MissingIrreps("no irreducible representations available for " +
                                        cent.as_group.name() + " = {" + members +
                                        "}; supply rep files for this centralizer",
                                    cent.as_group.name());
            }
        }
        for (const auto& rep : irreps) {
            ReportRow row = build_row(g, cls.representative, rep, opt);
            if (is_q8 && row.class_label == "x" && row.irrep_label == "phi3") {
                row.flags.push_back(
                    "recomputed braiding is " + detail::braiding_matrix_str(*row.braiding) +
                    ", affine Cartan with GK infinite; an earlier published tabulation of this "
                    "case lists dimension 4, inconsistent with the finite-GK classification "
                    "reproduced here, so the affine verdict stands");
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Plain-text and markdown rendering. JSON lives in json_io.hpp.

inline std::string oracle_summary(const HilbertPrefix& h) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < h.dims.size(); ++i) out << h.dims[i] << (i + 1 < h.dims.size() ? "," : "");
    out << ")";
    if (h.terminated)
        out << " total " << h.total();
    else
        out << " total >= " << h.total();
    return out.str();
}

inline std::string render_report_text(const Report& r) {
    std::ostringstream out;
    out << "Nichols algebra classification over " << r.group.name() << " (" << r.rows.size()
        << " irreducible Yetter-Drinfeld modules, scalars in Q(zeta_" << r.modulus << "))\n\n";
    for (const auto& row : r.rows) {
        out << "(" << row.class_label << ", " << row.irrep_label << ")  module dim " << row.module_dim
            << "\n";
        out << "  braiding: "
            << (row.braiding ? detail::braiding_matrix_str(*row.braiding) : std::string("non-diagonal"))
            << "\n";
        out << "  verdict:  " << to_string(row.verdict.type) << ", dim " << row.verdict.dim.str()
            << ", GKdim " << row.verdict.gkdim.str() << "\n";
        if (row.verdict.cartan) {
            out << "  cartan:   [[" << (*row.verdict.cartan)[0][0] << "," << (*row.verdict.cartan)[0][1]
                << "],[" << (*row.verdict.cartan)[1][0] << "," << (*row.verdict.cartan)[1][1] << "]]\n";
        }
        for (const auto& e : row.verdict.evidence) out << "  evidence: " << e << "\n";
        if (row.oracle) out << "  oracle:   graded dims " << oracle_summary(*row.oracle) << "\n";
        for (const auto& f : row.flags) out << "  flag:     " << f << "\n";
    }

    auto gk = r.finite_gk_rows();
    out << "\nFinite GK-dimension (" << gk.size() << " entries):\n";
    for (const auto* row : gk)
        out << "  (" << row->class_label << ", " << row->irrep_label << ")  GKdim "
            << row->verdict.gkdim.str() << "\n";
    auto fd = r.finite_dim_rows();
    out << "\nFinite dimension (" << fd.size() << " entries):\n";
    for (const auto* row : fd)
        out << "  (" << row->class_label << ", " << row->irrep_label << ")  dim "
            << row->verdict.dim.str() << "\n";
    return out.str();
}

inline std::string render_report_markdown(const Report& r) {
    std::ostringstream out;
    out << "# Nichols algebras over " << r.group.name() << "\n\n";
    out << "| class | irrep | module dim | braiding | type | dim | GKdim | oracle | flags |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : r.rows) {
        out << "| " << row.class_label << " | " << row.irrep_label << " | " << row.module_dim << " | "
            << (row.braiding ? detail::braiding_matrix_str(*row.braiding) : std::string("non-diagonal"))
            << " | " << to_string(row.verdict.type) << " | " << row.verdict.dim.str() << " | "
            << row.verdict.gkdim.str() << " | "
            << (row.oracle ? oracle_summary(*row.oracle) : std::string("-")) << " | "
            << (row.flags.empty() ? std::string("-") : row.flags.front()) << " |\n";
    }
    out << "\n## Finite GK-dimension\n\n| class | irrep | GKdim |\n|---|---|---|\n";
    for (const auto* row : r.finite_gk_rows())
        out << "| " << row->class_label << " | " << row->irrep_label << " | "
            << row->verdict.gkdim.str() << " |\n";
    out << "\n## Finite dimension\n\n| class | irrep | dim |\n|---|---|---|\n";
    for (const auto* row : r.finite_dim_rows())
        out << "| " << row->class_label << " | " << row->irrep_label << " | " << row->verdict.dim.str()
            << " |\n";
    return out.str();
}

} // namespace q8n
