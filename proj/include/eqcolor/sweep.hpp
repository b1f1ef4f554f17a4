#ifndef EQCOLOR_SWEEP_HPP
#define EQCOLOR_SWEEP_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqcolor/budget.hpp"
#include "eqcolor/closedform.hpp"
#include "eqcolor/colorer.hpp"
#include "eqcolor/graphs.hpp"
#include "eqcolor/oracle.hpp"

// Formula vs. oracle vs. constructed witness, over every k of every product
// in a parameter box.

namespace eqcolor {

struct SweepOptions {
    Int max_r = 3;
    Int max_part = 2;
    Int max_n = 5;
    Int oracle_cap = 18;  // run the oracle only when mn <= oracle_cap
    std::uint64_t budget = default_search_budget;
    std::optional<ProductSpec> only;  // sweep a single spec instead of the box
};

/// What the closed forms say about equitable k-colorability of the product.
/// Below chi_eq and at chi_eq_star - 1 (when that exceeds chi_eq) it is
/// ruled out; at chi_eq and from chi_eq_star on it holds; in between the
/// formulas are silent.
enum class FormulaVerdict { Feasible, Infeasible, Open };
enum class WitnessStatus { Verified, Infeasible, BudgetExceeded };

inline const char* to_string(FormulaVerdict v) {
    switch (v) {
    case FormulaVerdict::Feasible: return "feasible";
    case FormulaVerdict::Infeasible: return "infeasible";
    case FormulaVerdict::Open: return "open";
    }
    return "?";
}
inline const char* to_string(WitnessStatus w) {
    switch (w) {
    case WitnessStatus::Verified: return "verified";
    case WitnessStatus::Infeasible: return "infeasible";
    case WitnessStatus::BudgetExceeded: return "budget";
    }
    return "?";
}

inline FormulaVerdict formula_verdict(const ThresholdReport& report, Int k) {
    if (k < report.chi_eq) return FormulaVerdict::Infeasible;
    if (k == report.chi_eq || k >= report.chi_eq_star) return FormulaVerdict::Feasible;
    if (k == report.chi_eq_star - 1) return FormulaVerdict::Infeasible;
    return FormulaVerdict::Open;
}

struct SweepRow {
    ProductSpec spec;
    Int k = 0;
    FormulaVerdict formula = FormulaVerdict::Open;
    std::optional<bool> oracle;  // absent above the oracle cap or on budget
    bool oracle_budget_exceeded = false;
    WitnessStatus witness = WitnessStatus::BudgetExceeded;
    std::optional<ColoringTier> tier;
    bool agree = true;
};

struct SpecSummary {
    ProductSpec spec;
    ThresholdReport report;         // floor reading
    Int chi_eq_star_ceiling = 0;    // same spec, ceiling reading
    std::optional<Int> oracle_chi_eq;
    std::optional<Int> oracle_chi_eq_star;
    std::optional<bool> floor_supported;
    std::optional<bool> ceiling_supported;
    Int disagreements = 0;
};

struct SweepReport {
    std::vector<SpecSummary> specs;
    std::vector<SweepRow> rows;
    Int disagreements = 0;
    Int budget_flags = 0;
};

inline std::vector<ProductSpec> sweep_specs(const SweepOptions& opt) {
    if (opt.only) return {*opt.only};
    std::vector<ProductSpec> out;
    for (Int r = 1; r <= opt.max_r; ++r) {
        std::vector<Int> parts(static_cast<std::size_t>(r), 1);
        while (true) {
            const Int m = std::accumulate(parts.begin(), parts.end(), Int{0});
            for (Int n = m; n <= opt.max_n; ++n) out.emplace_back(parts, n);
            // Next tuple in lexicographic order over [1, max_part]^r.
            std::size_t pos = parts.size();
            while (pos > 0 && parts[pos - 1] == opt.max_part) parts[--pos] = 1;
            if (pos == 0) break;
            ++parts[pos - 1];
        }
    }
    return out;
}

inline SweepReport run_sweep(const SweepOptions& opt) {
    SweepReport report;
    for (const ProductSpec& spec : sweep_specs(opt)) {
        SpecSummary summary{spec, equitable_threshold_product(spec), 0, {}, {}, {}, {}, 0};
        summary.chi_eq_star_ceiling = equitable_threshold_product(spec, CaseOneReading::Ceiling).chi_eq_star;
        const Int vertices = spec.vertex_count();

        std::vector<std::optional<bool>> oracle(static_cast<std::size_t>(vertices));
        std::vector<bool> oracle_budget(static_cast<std::size_t>(vertices), false);
        if (vertices <= opt.oracle_cap) {
            const Graph g = build_product(spec);
            for (Int k = 1; k <= vertices; ++k) {
                try {
                    oracle[static_cast<std::size_t>(k - 1)] = k_colorable(g, k, opt.budget).feasible;
                } catch (const search_budget_exceeded&) {
                    oracle_budget[static_cast<std::size_t>(k - 1)] = true;
                }
            }
            const bool complete = std::all_of(oracle.begin(), oracle.end(), [](const auto& o) { return o.has_value(); });
            if (complete) {
                Int chi = vertices;
                for (Int k = vertices; k >= 1; --k) {
                    if (*oracle[static_cast<std::size_t>(k - 1)]) chi = k;
                }
                Int star = vertices;
                while (star > 1 && *oracle[static_cast<std::size_t>(star - 2)]) --star;
                summary.oracle_chi_eq = chi;
                summary.oracle_chi_eq_star = star;
                summary.floor_supported = summary.report.chi_eq_star == star;
                summary.ceiling_supported = summary.chi_eq_star_ceiling == star;
            }
        }

        for (Int k = 1; k <= vertices; ++k) {
            SweepRow row{spec, k, formula_verdict(summary.report, k), oracle[static_cast<std::size_t>(k - 1)],
                         oracle_budget[static_cast<std::size_t>(k - 1)], WitnessStatus::BudgetExceeded, {}, true};
            try {
                const ProductColoring pc = color_product(spec, k, opt.budget);
                row.witness = pc.coloring ? WitnessStatus::Verified : WitnessStatus::Infeasible;
                row.tier = pc.tier;
            } catch (const search_budget_exceeded&) {
                row.witness = WitnessStatus::BudgetExceeded;
            }

            std::vector<bool> verdicts;
            if (row.formula != FormulaVerdict::Open) verdicts.push_back(row.formula == FormulaVerdict::Feasible);
            if (row.oracle) verdicts.push_back(*row.oracle);
            if (row.witness != WitnessStatus::BudgetExceeded) verdicts.push_back(row.witness == WitnessStatus::Verified);
            row.agree = std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) == verdicts.end();

            if (row.oracle_budget_exceeded || row.witness == WitnessStatus::BudgetExceeded) ++report.budget_flags;
            if (!row.agree) {
                ++report.disagreements;
                ++summary.disagreements;
            }
            report.rows.push_back(std::move(row));
        }
        if (summary.oracle_chi_eq && (*summary.oracle_chi_eq != summary.report.chi_eq || !*summary.floor_supported)) {
            ++report.disagreements;
            ++summary.disagreements;
        }
        report.specs.push_back(std::move(summary));
    }
    return report;
}

namespace detail {

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace detail

/// The fixed-layout report written by `compute --format json`.
inline nlohmann::ordered_json to_json(const ThresholdReport& r) {
    nlohmann::ordered_json doc;
    doc["parts"] = r.parts;
    doc["n"] = r.n;
    doc["chi_eq"] = r.chi_eq;
    doc["chi_eq_star"] = r.chi_eq_star;
    doc["h"] = r.h;
    doc["h_star"] = detail::optional_json(r.h_star);
    doc["case"] = to_string(r.theorem_case);
    doc["lin_chang_bound"] = r.lin_chang_bound;
    return doc;
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json doc;
    auto& specs = doc["specs"] = nlohmann::ordered_json::array();
    for (const auto& s : report.specs) {
        nlohmann::ordered_json item = to_json(s.report);
        item["chi_eq_star_ceiling_reading"] = s.chi_eq_star_ceiling;
        item["edgeless"] = s.report.trace.edgeless;
        item["oracle_chi_eq"] = detail::optional_json(s.oracle_chi_eq);
        item["oracle_chi_eq_star"] = detail::optional_json(s.oracle_chi_eq_star);
        item["floor_reading_supported"] = detail::optional_json(s.floor_supported);
        item["ceiling_reading_supported"] = detail::optional_json(s.ceiling_supported);
        item["disagreements"] = s.disagreements;
        specs.push_back(std::move(item));
    }
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json item;
        item["parts"] = r.spec.parts();
        item["n"] = r.spec.n();
        item["k"] = r.k;
        item["formula"] = to_string(r.formula);
        item["oracle"] = r.oracle_budget_exceeded ? nlohmann::ordered_json("budget") : detail::optional_json(r.oracle);
        item["witness"] = to_string(r.witness);
        item["tier"] = r.tier ? nlohmann::ordered_json(to_string(*r.tier)) : nlohmann::ordered_json(nullptr);
        item["agree"] = r.agree;
        rows.push_back(std::move(item));
    }
    doc["disagreements"] = report.disagreements;
    doc["budget_flags"] = report.budget_flags;
    return doc;
}

} // namespace eqcolor

#endif
