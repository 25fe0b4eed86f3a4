// q8nichols — classify Nichols algebras of irreducible Yetter-Drinfeld
// modules over a finite group, with exact cyclotomic arithmetic throughout.
//
// Subcommands:
//   report   <group>                 full classification report
//   yd       <group> <class> <irrep> one induced module and its braiding
//   classify <matrix.json>           verdict for a diagonal braiding matrix
//   nichols  <matrix.json>           truncated Hilbert series via symmetrizer
//
// <group> is "q8" or a path to a group JSON file. Exit codes: 0 ok,
// 2 missing data, 3 validation failure, 4 verdict/oracle contradiction.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "q8nichols/json_io.hpp"

namespace {

unsigned long long budget_from_env() {
    const char* e = std::getenv("Q8N_BUDGET");
    if (!e || !*e) return q8n::default_symmetrizer_budget();
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end == e || *end != '\0' || v == 0) {
        std::cerr << "warning: ignoring unparsable Q8N_BUDGET='" << e << "'\n";
        return q8n::default_symmetrizer_budget();
    }
    return v;
}

q8n::Group resolve_group(const std::string& arg) {
    if (arg == "q8" || arg == "Q8") return q8n::quaternion_group();
    return q8n::load_group_file(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        q8n::write_text_file(out_path, text);
}

int run_report(const std::string& group_arg, unsigned max_degree, bool no_oracle,
               const std::string& format, const std::vector<std::string>& rep_files,
               const std::string& out_path) {
    q8n::Group g = resolve_group(group_arg);
    q8n::ReportOptions opt;
    opt.max_degree = max_degree;
    opt.run_oracle = !no_oracle;
    opt.budget = budget_from_env();

    std::vector<std::pair<std::string, q8n::Representation>> user_reps;
    for (const auto& path : rep_files) {
        auto data = q8n::rep_file_from_json(q8n::read_json_file(path));
        if (!data.class_label)
            throw q8n::ValidationError("rep file " + path +
                                       " needs a \"class\" field naming its conjugacy class");
        int elem = g.require_element(*data.class_label);
        // Normalize to the canonical (least-index) class representative.
        int rep_elem = elem;
        for (const auto& cls : q8n::conjugacy_classes(g))
            for (int m : cls.members)
                if (m == elem) rep_elem = cls.representative;
        q8n::Subgroup cent = q8n::centralizer(g, rep_elem);
        user_reps.emplace_back(g.label(rep_elem), q8n::realize_rep(data, cent.as_group, g.exponent()));
    }

    q8n::Report report = q8n::build_report(g, opt, user_reps);
    if (format == "json")
        emit(q8n::report_to_json(report).dump(2) + "\n", out_path);
    else if (format == "markdown")
        emit(q8n::render_report_markdown(report), out_path);
    else
        emit(q8n::render_report_text(report), out_path);
    return 0;
}

int run_yd(const std::string& group_arg, const std::string& class_label,
           const std::string& irrep_name, const std::string& format, const std::string& out_path) {
    q8n::Group g = resolve_group(group_arg);
    int elem = g.require_element(class_label);
    int rep_elem = elem;
    for (const auto& cls : q8n::conjugacy_classes(g))
        for (int m : cls.members)
            if (m == elem) rep_elem = cls.representative;

    q8n::Subgroup cent = q8n::centralizer(g, rep_elem);
    std::optional<q8n::Representation> rep;
    if (auto builtin = q8n::builtin_irreps(cent, rep_elem, g.exponent())) {
        for (auto& r : *builtin)
            if (r.name == irrep_name) rep = std::move(r);
    }
    if (!rep) {
        // Not a built-in name: treat it as a rep file path.
        rep = q8n::load_rep_file(irrep_name, cent.as_group, g.exponent());
    }

    q8n::YDModule mod = q8n::induce_yd(g, rep_elem, *rep);
    if (format == "json") {
        emit(q8n::yd_module_to_json(mod).dump(2) + "\n", out_path);
        return 0;
    }

    std::ostringstream out;
    out << "M(O_" << g.label(rep_elem) << ", " << rep->name << ") over " << g.name() << ": dim "
        << mod.dim << "\n";
    out << "basis:  ";
    for (std::size_t i = 0; i < mod.basis_labels.size(); ++i)
        out << mod.basis_labels[i] << (i + 1 < mod.basis_labels.size() ? ", " : "\n");
    out << "degree: ";
    for (std::size_t i = 0; i < mod.degree.size(); ++i)
        out << g.label(mod.degree[static_cast<std::size_t>(i)]) << (i + 1 < mod.degree.size() ? ", " : "\n");
    q8n::BraidOp c = q8n::braiding_operator(mod);
    if (auto q = q8n::detect_diagonal(c)) {
        out << "braiding (diagonal):\n";
        for (int i = 0; i < q->rank; ++i) {
            out << "  [";
            for (int j = 0; j < q->rank; ++j) out << q->q(i, j).str() << (j + 1 < q->rank ? ", " : "");
            out << "]\n";
        }
    } else {
        out << "braiding: non-diagonal, operator matrix:\n" << q8n::mat_to_json(c.matrix).dump() << "\n";
    }
    emit(out.str(), out_path);
    return 0;
}

int run_classify(const std::string& matrix_path, const std::string& format,
                 const std::string& out_path) {
    q8n::BraidingMatrix q = q8n::load_braiding_matrix_file(matrix_path);
    q8n::Verdict v = q8n::classify_diagonal(q);
    if (format == "json") {
        emit(q8n::verdict_to_json(v).dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream out;
    out << "type:   " << q8n::to_string(v.type) << "\n";
    out << "dim:    " << v.dim.str() << "\n";
    out << "gkdim:  " << v.gkdim.str() << "\n";
    if (v.cartan) {
        out << "cartan: [";
        for (std::size_t i = 0; i < v.cartan->size(); ++i) {
            out << "[";
            for (std::size_t j = 0; j < (*v.cartan)[i].size(); ++j)
                out << (*v.cartan)[i][j] << (j + 1 < (*v.cartan)[i].size() ? "," : "");
            out << "]" << (i + 1 < v.cartan->size() ? "," : "");
        }
        out << "]\n";
    }
    for (const auto& e : v.evidence) out << "evidence: " << e << "\n";
    emit(out.str(), out_path);
    return 0;
}

int run_nichols(const std::string& matrix_path, unsigned max_degree,
                const std::string& check_verdict_path, const std::string& format,
                const std::string& out_path) {
    q8n::BraidingMatrix q = q8n::load_braiding_matrix_file(matrix_path);
    q8n::BraidOp c = q8n::diagonal_braid_op(q);
    q8n::HilbertPrefix h = q8n::hilbert_prefix(c, max_degree, budget_from_env());

    if (!check_verdict_path.empty()) {
        q8n::Verdict claimed = q8n::verdict_from_json(q8n::read_json_file(check_verdict_path));
        q8n::detail::cross_check_verdict_oracle(claimed, h, matrix_path);
    }

    if (format == "json") {
        emit(q8n::hilbert_to_json(h).dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream out;
    out << "graded dims up to degree " << h.cutoff << ": " << q8n::oracle_summary(h) << "\n";
    out << (h.terminated ? "series terminates: total dimension is exact\n"
                         : "no finite-dimension evidence up to the cutoff\n");
    emit(out.str(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nichols algebra classification over finite groups (exact arithmetic)"};
    app.require_subcommand(1);

    std::string group_arg, class_label, irrep_name, matrix_path;
    std::string format = "text", out_path, check_verdict_path;
    unsigned max_degree = 6;
    bool no_oracle = false;
    std::vector<std::string> rep_files;

    auto* report = app.add_subcommand("report", "classification report for every (class, irrep) pair");
    report->add_option("group", group_arg, "'q8' or a group JSON file")->required();
    report->add_option("--max-degree", max_degree, "symmetrizer oracle cutoff (default 6)");
    report->add_flag("--no-oracle", no_oracle, "skip the symmetrizer oracle");
    report->add_option("--format", format, "text | json | markdown")
        ->check(CLI::IsMember({"text", "json", "markdown"}));
    report->add_option("--rep", rep_files, "rep JSON file for a non-built-in centralizer (repeatable)");
    report->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* yd = app.add_subcommand("yd", "induce one Yetter-Drinfeld module and show its braiding");
    yd->add_option("group", group_arg, "'q8' or a group JSON file")->required();
    yd->add_option("class", class_label, "conjugacy class element label, e.g. x")->required();
    yd->add_option("irrep", irrep_name, "built-in irrep name (rho1..rho5, phi0..) or rep file")->required();
    yd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    yd->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* classify = app.add_subcommand("classify", "verdict for a diagonal braiding matrix file");
    classify->add_option("matrix", matrix_path, "braiding matrix JSON file")->required();
    classify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    classify->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* nichols = app.add_subcommand("nichols", "graded dimensions via the quantum symmetrizer");
    nichols->add_option("matrix", matrix_path, "braiding matrix JSON file")->required();
    nichols->add_option("--max-degree", max_degree, "degree cutoff (default 6)");
    nichols->add_option("--check-verdict", check_verdict_path,
                        "verdict JSON to validate against the computed series");
    nichols->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    nichols->add_option("-o,--output", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*report) return run_report(group_arg, max_degree, no_oracle, format, rep_files, out_path);
        if (*yd) return run_yd(group_arg, class_label, irrep_name, format, out_path);
        if (*classify) return run_classify(matrix_path, format, out_path);
        if (*nichols) return run_nichols(matrix_path, max_degree, check_verdict_path, format, out_path);
    } catch (const q8n::ContradictionError& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return 4;
    } catch (const q8n::MissingIrreps& e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return 2;
    } catch (const q8n::FileNotFound& e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return 2;
    } catch (const q8n::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
