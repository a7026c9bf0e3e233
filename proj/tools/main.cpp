#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dinitz/instance_io.hpp"
#include "dinitz/parity.hpp"
#include "dinitz/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace dinitz;

constexpr int kSchemaVersion = 1;

// Exit codes are a scripting contract:
//   0 success / assertion holds
//   1 assertion failure or unsatisfiable
//   2 input or parse error
//   3 size-guard refusal
constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;

json symbol_json(const Symbol& s) {
    if (std::holds_alternative<std::int64_t>(s)) return std::get<std::int64_t>(s);
    return std::get<std::string>(s);
}

json grid_json(const SymbolGrid& grid) {
    json rows = json::array();
    for (const auto& row : grid) {
        json cells = json::array();
        for (const Symbol& s : row) cells.push_back(symbol_json(s));
        rows.push_back(std::move(cells));
    }
    return rows;
}

json int_grid_json(const std::vector<std::vector<int>>& grid) {
    json rows = json::array();
    for (const auto& row : grid) rows.push_back(row);
    return rows;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

VertexOrder parse_ordering(const std::string& name) {
    if (name == "lex") return VertexOrder::lex();
    if (name == "paper") return VertexOrder::col_desc();
    throw CLI::ValidationError("--ordering must be lex or paper");
}

std::size_t default_max_edges() {
    if (const char* env = std::getenv("DINITZ_MAX_EDGES")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
            std::cerr << "ignoring unparsable DINITZ_MAX_EDGES=" << env << "\n";
        }
    }
    return kDefaultMaxEdges;
}

int run_solve(const std::string& input, const SolverOptions& options,
              const std::string& output) {
    const ListAssignment lists = load_instance_file(input);
    if (lists.rows() > lists.cols()) {
        std::cerr << "instance has r > n; only r <= n is supported\n";
        return kExitInputError;
    }
    const bool square_plus_one =
        lists.rows() == lists.cols() &&
        lists.min_list_size() >= static_cast<std::size_t>(lists.cols()) + 1;
    const SolveResult result = square_plus_one ? solve_square_plus_one(lists, options)
                                               : solve_rectangle(lists, options);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "solve";
    doc["mode"] = square_plus_one ? "square_plus_one" : "rectangle";
    doc["r"] = lists.rows();
    doc["n"] = lists.cols();
    doc["seed"] = options.seed;
    switch (result.status) {
        case SolveStatus::Solved: doc["status"] = "solved"; break;
        case SolveStatus::Unsatisfiable: doc["status"] = "unsatisfiable"; break;
        case SolveStatus::LimitReached: doc["status"] = "limit_reached"; break;
    }
    if (result.status == SolveStatus::Solved) {
        doc["rectangle"] = grid_json(result.rectangle);
        const SolutionCheck check = validate_solution(result.rectangle, lists);
        doc["validated"] = check.valid;
    }
    doc["stats"] = {{"nodes", result.stats.nodes},
                    {"backtracks", result.stats.backtracks},
                    {"wall_ms", result.stats.wall_ms}};
    doc["warnings"] = result.warnings;
    emit(doc);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write " << output << "\n";
            return kExitInputError;
        }
        out << doc.dump(2) << "\n";
    }
    return result.status == SolveStatus::Solved ? kExitOk : kExitAssertionFailed;
}

int run_circulant(int rows, int cols) {
    const LatinRectangle rect = circulant(rows, cols);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "circulant";
    doc["r"] = rows;
    doc["n"] = cols;
    doc["rectangle"] = int_grid_json(rect.grid());
    emit(doc);
    return kExitOk;
}

int run_verify_parity(int rows, int cols, const std::string& ordering,
                      std::size_t max_edges, int jobs) {
    EnumOptions options;
    options.max_edges = max_edges;
    options.jobs = jobs;
    const OutDegreeTarget delta = delta_map(rows, cols);
    const ParityCensus census =
        parity_census(rows, cols, delta, parse_ordering(ordering), options);
    const bool holds = census.gap() == 1;

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify-parity";
    doc["r"] = rows;
    doc["n"] = cols;
    doc["ordering"] = ordering;
    doc["de"] = census.even_count;
    doc["do"] = census.odd_count;
    doc["gap"] = census.gap();
    doc["holds"] = holds;
    emit(doc);
    return holds ? kExitOk : kExitAssertionFailed;
}

int run_uniqueness(int rows, int cols, std::size_t max_edges) {
    EnumOptions options;
    options.max_edges = max_edges;
    const OutDegreeTarget delta = delta_map(rows, cols);
    const auto found = triangle_free_realizations(rows, cols, delta,
                                                  VertexOrder::lex(), options);
    const Orientation expected = associated_orientation(circulant(rows, cols));
    const bool holds = found.size() == 1 && found.front() == expected;

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "uniqueness";
    doc["r"] = rows;
    doc["n"] = cols;
    doc["count"] = found.size();
    json realizations = json::array();
    for (const Orientation& d : found) {
        std::string bits;
        for (std::uint8_t b : d.bits()) bits += b ? '1' : '0';
        realizations.push_back({{"inverted_bits", bits},
                                {"associated_matrix", int_grid_json(associated_matrix(d))}});
    }
    doc["realizations"] = std::move(realizations);
    doc["matches_circulant"] = holds;
    doc["holds"] = holds;
    emit(doc);
    return holds ? kExitOk : kExitAssertionFailed;
}

int run_involution_selfcheck(int rows, int cols, std::size_t max_edges) {
    EnumOptions options;
    options.max_edges = max_edges;
    const InvolutionReport report =
        involution_selfcheck(rows, cols, VertexOrder::lex(), options);

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "involution-selfcheck";
    doc["r"] = rows;
    doc["n"] = cols;
    doc["realizations"] = report.realizations;
    doc["triangle_containing"] = report.triangle_containing;
    doc["checked"] = report.checked;
    doc["failures"] = report.failures;
    doc["even"] = report.even_count;
    doc["odd"] = report.odd_count;
    doc["holds"] = report.passed;
    if (!report.failure_notes.empty()) doc["failure_notes"] = report.failure_notes;
    emit(doc);
    return report.passed ? kExitOk : kExitAssertionFailed;
}

int run_validate(const std::string& input, const std::string& candidate_path) {
    const ListAssignment lists = load_instance_file(input);
    const SymbolGrid candidate = load_candidate_file(candidate_path);
    const SolutionCheck check = validate_solution(candidate, lists);

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "validate";
    doc["valid"] = check.valid;
    json violations = json::array();
    for (const SolutionViolation& v : check.violations) {
        json item;
        switch (v.kind) {
            case SolutionViolationKind::RowRepeat:
                item["kind"] = "row_repeat";
                item["row"] = v.row;
                break;
            case SolutionViolationKind::ColumnRepeat:
                item["kind"] = "column_repeat";
                item["column"] = v.col;
                break;
            case SolutionViolationKind::NotInList:
                item["kind"] = "not_in_list";
                item["row"] = v.row;
                item["column"] = v.col;
                break;
        }
        item["symbol"] = symbol_json(v.symbol);
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    emit(doc);
    return check.valid ? kExitOk : kExitAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions and checks for list-constrained latin rectangles"};
    app.require_subcommand(1);

    // solve
    std::string solve_input, solve_output;
    SolverOptions solver_options;
    auto* solve = app.add_subcommand("solve", "solve a list instance from a JSON file");
    solve->add_option("--input", solve_input, "instance file")->required();
    solve->add_option("--seed", solver_options.seed, "value-order seed (default 0)");
    solve->add_option("--output", solve_output, "also write the result document here");
    solve->add_option("--node-limit", solver_options.node_limit,
                      "abort an attempt after this many nodes (0 = unlimited)");
    solve->add_option("--max-restarts", solver_options.max_restarts,
                      "extra reseeded attempts when the node limit hits");

    // circulant
    int rows = 0, cols = 0;
    auto* circ = app.add_subcommand("circulant", "print the circulant latin rectangle");
    circ->add_option("--r", rows, "row count")->required();
    circ->add_option("--n", cols, "column count")->required();

    // verify-parity
    int vp_rows = 0, vp_cols = 0, jobs = 1;
    std::string ordering = "lex";
    std::size_t max_edges = default_max_edges();
    auto* verify = app.add_subcommand(
        "verify-parity", "census of even/odd realizations; asserts |de-do| = 1");
    verify->add_option("--r", vp_rows, "row count")->required();
    verify->add_option("--n", vp_cols, "column count")->required();
    verify->add_option("--ordering", ordering,
                       "vertex order: lex (rows then columns ascending) or paper "
                       "(rows ascending, columns descending)")
        ->check(CLI::IsMember({"lex", "paper"}));
    verify->add_option("--max-edges", max_edges,
                       "enumeration guard (default 36; env DINITZ_MAX_EDGES)");
    verify->add_option("--jobs", jobs, "worker threads for the census")
        ->check(CLI::PositiveNumber);

    // uniqueness
    int uq_rows = 0, uq_cols = 0;
    std::size_t uq_max_edges = default_max_edges();
    auto* uniq = app.add_subcommand(
        "uniqueness", "assert the single triangle-free realization is the circulant's");
    uniq->add_option("--r", uq_rows, "row count")->required();
    uniq->add_option("--n", uq_cols, "column count")->required();
    uniq->add_option("--max-edges", uq_max_edges, "enumeration guard");

    // involution-selfcheck
    int iv_rows = 0, iv_cols = 0;
    std::size_t iv_max_edges = default_max_edges();
    auto* invol = app.add_subcommand(
        "involution-selfcheck", "exhaustive checks of the parity-flipping involution");
    invol->add_option("--r", iv_rows, "row count")->required();
    invol->add_option("--n", iv_cols, "column count")->required();
    invol->add_option("--max-edges", iv_max_edges, "enumeration guard");

    // validate
    std::string val_input, val_candidate;
    auto* validate = app.add_subcommand("validate", "check a candidate against an instance");
    validate->add_option("--input", val_input, "instance file")->required();
    validate->add_option("--candidate", val_candidate, "candidate rectangle file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*solve) return run_solve(solve_input, solver_options, solve_output);
        if (*circ) return run_circulant(rows, cols);
        if (*verify) return run_verify_parity(vp_rows, vp_cols, ordering, max_edges, jobs);
        if (*uniq) return run_uniqueness(uq_rows, uq_cols, uq_max_edges);
        if (*invol) return run_involution_selfcheck(iv_rows, iv_cols, iv_max_edges);
        if (*validate) return run_validate(val_input, val_candidate);
    } catch (const SizeGuardError& e) {
        std::cerr << e.what() << " (override with --max-edges)\n";
        return kExitSizeGuard;
    } catch (const InstanceParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
