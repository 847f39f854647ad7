#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgraph/graphicality.hpp"
#include "sgraph/io.hpp"
#include "sgraph/oracle.hpp"
#include "sgraph/realizer.hpp"
#include "sgraph/selftest.hpp"
#include "sgraph/signed_graph.hpp"

namespace sgraph {

namespace cli_detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(token, &consumed);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + token + "'");
        }
        if (consumed != token.size()) throw UsageError("not an integer: '" + token + "'");
        out.push_back(value);
    }
    if (text.back() == ',') throw UsageError("trailing comma in integer list");
    return out;
}

/// Deduplicates into a DegreeSet, warning on the diagnostic stream.
inline DegreeSet degree_set_from_list(const std::vector<int>& values, std::ostream& err) {
    if (values.empty()) throw UsageError("expected at least one integer");
    std::set<int> distinct;
    for (int v : values)
        if (!distinct.insert(v).second)
            err << "warning: duplicate value " << v << " ignored\n";
    return DegreeSet(std::move(distinct));
}

struct BudgetOptions {
    int max_order = 6;
    bool acknowledge_cost = false;

    EnumerationBudget resolve() const {
        if (max_order < 1) throw UsageError("--max-order must be at least 1");
        if (max_order > max_enumerable_order)
            throw UsageError("--max-order beyond " + std::to_string(max_enumerable_order) +
                             " does not fit the 64-bit enumeration index");
        if (max_order > 7 && !acknowledge_cost)
            throw UsageError("--max-order beyond 7 enumerates billions of graphs; pass "
                             "--acknowledge-cost to confirm");
        return EnumerationBudget{max_order, {}};
    }
};

inline void add_budget_options(CLI::App* cmd, BudgetOptions& opts) {
    cmd->add_option("--max-order", opts.max_order,
                    "Largest order the exhaustive search may enumerate")
        ->capture_default_str();
    cmd->add_flag("--acknowledge-cost", opts.acknowledge_cost,
                  "Confirm enumeration beyond order 7");
}

}  // namespace cli_detail

/// Command-line driver. `args` excludes the program name. Exit status 0 on
/// success/true, 1 on false/mismatch, 2 on usage or budget errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed graph construction, graphicality decisions, and exhaustive checks",
                 "sgraph"};
    app.require_subcommand(1);

    auto* realize_cmd =
        app.add_subcommand("realize", "Construct a connected graph with a given signed degree set");
    std::string realize_set_text;
    std::string realize_format = "json";
    std::string realize_out_path;
    realize_cmd->add_option("--set", realize_set_text, "Comma-separated integers")->required();
    realize_cmd->add_option("--format", realize_format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    realize_cmd->add_option("--out", realize_out_path, "Write the graph to a file instead of stdout");

    auto* check_cmd =
        app.add_subcommand("check", "Decide whether a sequence is a signed degree sequence");
    std::string check_sequence_text;
    std::string check_method = "chartrand";
    bool check_witness = false;
    cli_detail::BudgetOptions check_budget;
    check_cmd->add_option("--sequence", check_sequence_text, "Comma-separated integers")
        ->required();
    check_cmd->add_option("--method", check_method, "Decision procedure")
        ->check(CLI::IsMember({"chartrand", "yan", "oracle"}))
        ->capture_default_str();
    check_cmd->add_flag("--witness", check_witness, "Print a realizing graph when graphical");
    cli_detail::add_budget_options(check_cmd, check_budget);

    auto* min_order_cmd = app.add_subcommand(
        "min-order", "Exhaustively find the smallest order realizing a signed degree set");
    std::string min_order_set_text;
    bool min_order_connected = true;
    cli_detail::BudgetOptions min_order_budget;
    min_order_cmd->add_option("--set", min_order_set_text, "Comma-separated integers")->required();
    min_order_cmd->add_flag("--connected,!--no-connected", min_order_connected,
                            "Require the realization to be connected");
    cli_detail::add_budget_options(min_order_cmd, min_order_budget);

    auto* verify_cmd =
        app.add_subcommand("verify", "Recompute the degree set of a JSON graph file");
    std::string verify_path;
    std::optional<std::string> verify_expect_text;
    verify_cmd->add_option("--graph", verify_path, "Path to a JSON graph document")
        ->required()
        ->check(CLI::ExistingFile);
    verify_cmd->add_option("--expect-set", verify_expect_text,
                           "Comma-separated integers the degree set must equal");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in acceptance suite");
    std::string selftest_level = "quick";
    selftest_cmd->add_option("--level", selftest_level, "Suite size")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*realize_cmd) {
            const DegreeSet requested = cli_detail::degree_set_from_list(
                cli_detail::parse_int_list(realize_set_text), err);
            const RealizationResult result = realize_set(requested);
            const std::string payload = realize_format == "json"
                                            ? to_json(result.graph) + "\n"
                                            : to_dot(result.graph);
            if (realize_out_path.empty()) {
                out << payload;
            } else {
                std::ofstream file(realize_out_path, std::ios::binary);
                if (!file) throw cli_detail::UsageError("cannot write " + realize_out_path);
                file << payload;
            }
            out << "order=" << result.graph.order()
                << " degree_set=" << to_string(signed_degree_set(result.graph)) << "\n";
            return 0;
        }

        if (*check_cmd) {
            const std::vector<int> sequence = cli_detail::parse_int_list(check_sequence_text);
            bool graphical = false;
            std::optional<SignedGraph> witness;
            if (check_method == "oracle") {
                const EnumerationBudget budget = check_budget.resolve();
                const std::optional<std::uint64_t> index =
                    oracle_graphical_witness(sequence, budget);
                graphical = index.has_value();
                if (graphical && check_witness)
                    witness = signed_graph_from_index(static_cast<int>(sequence.size()), *index);
            } else {
                graphical = check_method == "chartrand" ? is_graphical_chartrand(sequence)
                                                        : is_graphical_yan(sequence);
                if (graphical && check_witness) witness = realize_sequence(sequence);
            }
            out << (graphical ? "graphical" : "not graphical") << "\n";
            if (witness) out << to_json(*witness) << "\n";
            return graphical ? 0 : 1;
        }

        if (*min_order_cmd) {
            const DegreeSet requested = cli_detail::degree_set_from_list(
                cli_detail::parse_int_list(min_order_set_text), err);
            const EnumerationBudget budget = min_order_budget.resolve();
            out << oracle_min_order(requested, min_order_connected, budget) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            std::ifstream file(verify_path, std::ios::binary);
            if (!file) throw cli_detail::UsageError("cannot read " + verify_path);
            std::ostringstream content;
            content << file.rdbuf();
            const SignedGraph g = from_json(content.str());
            const DegreeSet actual = signed_degree_set(g);
            out << "order=" << g.order() << " degree_set=" << to_string(actual) << "\n";
            if (verify_expect_text) {
                const DegreeSet expected = cli_detail::degree_set_from_list(
                    cli_detail::parse_int_list(*verify_expect_text), err);
                if (actual == expected) {
                    out << "verdict=match\n";
                    return 0;
                }
                out << "verdict=mismatch expected=" << to_string(expected) << "\n";
                return 1;
            }
            return 0;
        }

        if (*selftest_cmd) {
            const selftest::Level level =
                selftest_level == "full" ? selftest::Level::full : selftest::Level::quick;
            const std::vector<selftest::CriterionResult> results =
                selftest::run_acceptance_suite(level, &out);
            const bool all_passed =
                std::all_of(results.begin(), results.end(),
                            [](const selftest::CriterionResult& r) { return r.passed; });
            return all_passed ? 0 : 1;
        }
    } catch (const cli_detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace sgraph
