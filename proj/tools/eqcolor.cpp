// eqcolor: equitable colorings of K_{m_1,...,m_r} x K_n.
//
// Exit codes: 0 success / feasible, 1 infeasible or sweep disagreement,
// 2 usage or domain error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eqcolor/budget.hpp"
#include "eqcolor/closedform.hpp"
#include "eqcolor/colorer.hpp"
#include "eqcolor/graphs.hpp"
#include "eqcolor/io.hpp"
#include "eqcolor/oracle.hpp"
#include "eqcolor/sweep.hpp"

namespace {

using namespace eqcolor;

enum Exit : int { ok = 0, infeasible = 1, usage = 2, budget = 3 };

struct Common {
    std::string parts;
    Int n = 0;
    std::string format;
    bool oracle = false;
    std::optional<std::uint64_t> budget;
    std::string output;

    std::uint64_t search_budget() const { return budget ? *budget : budget_from_environment(); }
    ProductSpec spec() const { return ProductSpec(parse_int_list(parts), n); }
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_text(const ProductSpec& spec, const ThresholdReport& r) {
    std::ostringstream os;
    os << spec.to_string() << "   (r = " << spec.r() << ", m = " << spec.m() << ", n = " << spec.n() << ")\n";
    os << "χ=(G)  = " << r.chi_eq << "   h = " << r.h << "\n";
    os << "χ=*(G) = " << r.chi_eq_star << "   " << to_string(r.theorem_case);
    if (r.h_star) os << ", h* = " << *r.h_star;
    if (r.trace.edgeless) os << "   (single part: G has no edges)";
    os << "\n";
    os << "⌈mn/(m+1)⌉ = " << r.lin_chang_bound << "\n";
    os << "case 1 tests:\n";
    os << "  Σ⌊m_i n/(m+1)⌋ < ⌊mn/(m+1)⌋   " << yes_no(r.trace.floor_sum_below) << "\n";
    os << "  Σ⌈m_i n/(m+1)⌉ < ⌈mn/(m+1)⌉   " << yes_no(r.trace.ceiling_sum_below) << "\n";
    os << "  m_i n/(m+1) < ⌈m_i n/(m+2)⌉    " << yes_no(r.trace.block_lacks_partition);
    if (r.trace.first_block_lacking) os << " (part " << *r.trace.first_block_lacking + 1 << ")";
    os << "\n";
    return os.str();
}

int cmd_compute(const Common& opt) {
    const ProductSpec spec = opt.spec();
    if (opt.oracle) {
        const Graph g = build_product(spec);
        const Int chi = chi_eq_exact(g, opt.search_budget());
        const Int star = chi_eq_star_exact(g, opt.search_budget());
        if (opt.format == "json") {
            nlohmann::ordered_json doc;
            doc["parts"] = spec.parts();
            doc["n"] = spec.n();
            doc["chi_eq"] = chi;
            doc["chi_eq_star"] = star;
            doc["source"] = "oracle";
            emit(opt.output, doc.dump() + "\n");
        } else {
            emit(opt.output, spec.to_string() + "   (exhaustive search)\nχ=(G)  = " + std::to_string(chi) +
                                 "\nχ=*(G) = " + std::to_string(star) + "\n");
        }
        return ok;
    }
    if (!spec.theorem_applicable()) {
        std::cerr << "OutOfScope: " << spec.to_string() << " has sum of parts " << spec.m() << " > n = " << spec.n()
                  << "; no closed form applies. Rerun with --oracle for an exhaustive answer.\n";
        return usage;
    }
    const ThresholdReport report = equitable_threshold_product(spec);
    emit(opt.output, opt.format == "json" ? to_json(report).dump() + "\n" : render_text(spec, report));
    return ok;
}

int cmd_construct(const Common& opt, Int k, const std::string& graph_output) {
    const ProductSpec spec = opt.spec();
    if (k < 1) throw std::domain_error("--k must be positive");
    const Graph g = build_product(spec);
    std::optional<Coloring> coloring;
    std::string how;
    if (opt.oracle) {
        auto result = k_colorable(g, k, opt.search_budget());
        coloring = std::move(result.witness);
        how = "oracle";
    } else {
        auto result = color_product(spec, k, opt.search_budget());
        coloring = std::move(result.coloring);
        how = to_string(result.tier);
    }
    if (!graph_output.empty()) emit(graph_output, write_dimacs(g));
    if (!coloring) {
        std::cerr << "infeasible: " << spec.to_string() << " has no equitable " << k << "-coloring\n";
        return infeasible;
    }
    if (!is_equitable(verify_coloring(g, *coloring))) throw std::logic_error("constructed coloring failed verification");

    if (opt.format == "json") {
        emit(opt.output, write_coloring_json(*coloring));
    } else if (opt.format == "text") {
        std::ostringstream os;
        os << spec.to_string() << ", k = " << k << " (" << how << ")\n";
        const auto classes = coloring->classes();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            os << "color " << c + 1 << " [" << classes[c].size() << "]:";
            for (Int v : classes[c]) {
                const ProductVertex pv = product_vertex(spec, v);
                os << " (" << pv.part + 1 << "," << pv.within + 1 << "," << pv.column + 1 << ")";
            }
            os << "\n";
        }
        emit(opt.output, os.str());
    } else {
        emit(opt.output, write_coloring_dimacs(*coloring));
    }
    return ok;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, std::optional<Int> k) {
    const Graph g = read_dimacs(slurp(graph_path));
    ColoringFile file = read_coloring(slurp(coloring_path));
    if (k) file.k = *k;
    const Coloring coloring = to_coloring(file);
    const Verdict verdict = verify_coloring(g, coloring);
    if (const auto* edge = std::get_if<ImproperEdge>(&verdict)) {
        std::cout << "ImproperEdge(" << edge->u + 1 << "," << edge->v + 1 << ")\n";
        return infeasible;
    }
    if (const auto* uneven = std::get_if<NotEquitable>(&verdict)) {
        std::cout << "NotEquitable(";
        for (std::size_t i = 0; i < uneven->census.size(); ++i) std::cout << (i ? "," : "") << uneven->census[i];
        std::cout << ")\n";
        return infeasible;
    }
    std::cout << "ok\n";
    return ok;
}

int cmd_graph(const Common& opt, bool multipartite) {
    const ProductSpec spec = opt.spec();
    const std::vector<Int> blocks = spec.block_sizes();
    emit(opt.output, write_dimacs(multipartite ? build_multipartite(blocks) : build_product(spec)));
    return ok;
}

int cmd_sweep(SweepOptions sweep, const Common& opt) {
    sweep.budget = opt.search_budget();
    if (!opt.parts.empty()) sweep.only = opt.spec();
    const SweepReport report = run_sweep(sweep);
    if (opt.format == "json") {
        emit(opt.output, to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& s : report.specs) {
            os << s.spec.to_string() << ": χ= " << s.report.chi_eq << ", χ=* " << s.report.chi_eq_star << " ("
               << to_string(s.report.theorem_case) << ", ceiling reading " << s.chi_eq_star_ceiling << ")";
            if (s.oracle_chi_eq) {
                os << "; oracle " << *s.oracle_chi_eq << ", " << *s.oracle_chi_eq_star << "; readings supported:"
                   << (*s.floor_supported ? " floor" : "") << (*s.ceiling_supported ? " ceiling" : "")
                   << (!*s.floor_supported && !*s.ceiling_supported ? " none" : "");
            } else {
                os << "; oracle not run";
            }
            os << "\n";
        }
        os << "\nparts        n   k  formula     oracle      witness     agree\n";
        for (const auto& r : report.rows) {
            std::string parts;
            for (std::size_t i = 0; i < r.spec.r(); ++i) parts += (i ? "," : "") + std::to_string(r.spec.part(i));
            const std::string oracle = r.oracle_budget_exceeded ? "budget"
                                       : r.oracle                ? (*r.oracle ? "feasible" : "infeasible")
                                                                 : "-";
            char line[160];
            std::snprintf(line, sizeof line, "%-12s %2lld %3lld  %-11s %-11s %-11s %s\n", parts.c_str(),
                          static_cast<long long>(r.spec.n()), static_cast<long long>(r.k), to_string(r.formula),
                          oracle.c_str(), to_string(r.witness), r.agree ? "yes" : "NO");
            os << line;
        }
        os << "\n" << report.rows.size() << " rows, " << report.disagreements << " disagreements, "
           << report.budget_flags << " budget flags\n";
        emit(opt.output, os.str());
    }
    if (report.disagreements > 0) return infeasible;
    return report.budget_flags > 0 ? budget : ok;
}

void add_spec_options(CLI::App* cmd, Common& opt, bool required) {
    auto* parts = cmd->add_option("--parts", opt.parts, "Part sizes m_1,...,m_r (comma separated)");
    auto* n = cmd->add_option("--n", opt.n, "Order of the complete graph K_n");
    if (required) {
        parts->required();
        n->required();
    }
}

void add_common_options(CLI::App* cmd, Common& opt, const std::vector<std::string>& formats) {
    opt.format = formats.front();
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--budget", opt.budget, "Search node budget (overrides EQCOLOR_BUDGET)")->check(CLI::PositiveNumber);
    cmd->add_option("-o,--output", opt.output, "Write to this file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equitable colorings of complete multipartite graphs times complete graphs"};
    app.require_subcommand(1);

    Common compute_opt;
    auto* compute = app.add_subcommand("compute", "Closed-form χ=, χ=* and the intermediate quantities");
    add_spec_options(compute, compute_opt, true);
    add_common_options(compute, compute_opt, {"text", "json"});
    compute->add_flag("--oracle", compute_opt.oracle, "Use exhaustive search instead of the formulas");

    Common construct_opt;
    Int k = 0;
    std::string graph_output;
    auto* construct = app.add_subcommand("construct", "Build and emit a verified equitable k-coloring");
    add_spec_options(construct, construct_opt, true);
    construct->add_option("--k", k, "Number of colors")->required();
    add_common_options(construct, construct_opt, {"dimacs", "json", "text"});
    construct->add_flag("--oracle", construct_opt.oracle, "Take the witness from exhaustive search");
    construct->add_option("--graph-output", graph_output, "Also write the product graph in DIMACS format");

    std::string graph_path;
    std::string coloring_path;
    std::optional<Int> verify_k;
    auto* verify = app.add_subcommand("verify", "Check a coloring file against a DIMACS graph");
    verify->add_option("graph", graph_path, "DIMACS graph file")->required();
    verify->add_option("coloring", coloring_path, "Coloring file (json or 's v c' lines)")->required();
    verify->add_option("--k", verify_k, "Number of colors (default: from the file)");

    Common graph_opt;
    bool multipartite = false;
    auto* graph = app.add_subcommand("graph", "Write the product graph (or its companion multipartite graph) as DIMACS");
    add_spec_options(graph, graph_opt, true);
    graph->add_flag("--multipartite", multipartite, "Write K_{m_1 n,...,m_r n} instead of the product");
    graph->add_option("-o,--output", graph_opt.output, "Write to this file instead of stdout");

    Common sweep_opt;
    SweepOptions sweep_cfg;
    auto* sweep = app.add_subcommand("sweep", "Compare formulas, oracle and constructed witnesses over a box of specs");
    sweep->add_option("--max-r", sweep_cfg.max_r, "Largest number of parts")->check(CLI::PositiveNumber);
    sweep->add_option("--max-part", sweep_cfg.max_part, "Largest part size")->check(CLI::PositiveNumber);
    sweep->add_option("--max-n", sweep_cfg.max_n, "Largest n")->check(CLI::PositiveNumber);
    sweep->add_option("--oracle-cap", sweep_cfg.oracle_cap, "Run the oracle only up to this many vertices");
    add_spec_options(sweep, sweep_opt, false);
    add_common_options(sweep, sweep_opt, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*compute) return cmd_compute(compute_opt);
        if (*construct) return cmd_construct(construct_opt, k, graph_output);
        if (*verify) return cmd_verify(graph_path, coloring_path, verify_k);
        if (*graph) return cmd_graph(graph_opt, multipartite);
        if (*sweep) {
            if (sweep_opt.parts.empty() != (sweep_opt.n == 0)) throw std::invalid_argument("--parts and --n go together");
            return cmd_sweep(sweep_cfg, sweep_opt);
        }
    } catch (const search_budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return budget;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
