// Command-line front end: graph generation, exact solving, bound reports,
// closed-form lookups, snake analysis, table reproduction and
// formula-vs-oracle verification.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "decycle/bounds.hpp"
#include "decycle/families.hpp"
#include "decycle/generators.hpp"
#include "decycle/graph.hpp"
#include "decycle/io.hpp"
#include "decycle/ops.hpp"
#include "decycle/snake.hpp"
#include "decycle/solver.hpp"
#include "decycle/verify.hpp"

namespace {

using namespace decycle;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(std::stoi(item));
    return values;
}

// Accepts a file path or a named built-in such as petersen, k5, q4,
// cycle7, path9, grid4x5, torus3x4.
Graph load_graph(const std::string& arg) {
    std::ifstream file(arg);
    if (file) return read_text(file);
    std::string name = arg;
    auto starts = [&](const std::string& prefix) { return name.rfind(prefix, 0) == 0; };
    auto tail_int = [&](size_t skip) { return std::stoi(name.substr(skip)); };
    auto tail_pair = [&](size_t skip) {
        size_t x = name.find('x', skip);
        if (x == std::string::npos) throw std::invalid_argument("expected MxN in " + name);
        return std::pair{std::stoi(name.substr(skip, x - skip)), std::stoi(name.substr(x + 1))};
    };
    if (name == "petersen") return petersen();
    if (starts("grid")) {
        auto [m, n] = tail_pair(4);
        return grid(m, n);
    }
    if (starts("torus")) {
        auto [m, n] = tail_pair(5);
        return torus(m, n);
    }
    if (starts("cycle")) return cycle(tail_int(5));
    if (starts("path")) return path(tail_int(4));
    if (starts("q")) return hypercube(tail_int(1));
    if (starts("k")) return complete(tail_int(1));
    throw std::invalid_argument("no such file or named graph: " + arg);
}

void print_graph(const Graph& g, const std::string& format) {
    if (format == "structured")
        std::cout << to_json(g).dump(2) << "\n";
    else
        write_text(g, std::cout);
}

int run_generate(const std::vector<std::string>& args, unsigned seed, const std::string& format) {
    if (args.empty()) throw std::invalid_argument("generate needs a family name");
    const std::string& family = args[0];
    auto arg_int = [&](size_t i) {
        if (i >= args.size()) throw std::invalid_argument("missing parameter for " + family);
        return std::stoi(args[i]);
    };
    Graph g;
    if (family == "path") g = path(arg_int(1));
    else if (family == "cycle") g = cycle(arg_int(1));
    else if (family == "complete") g = complete(arg_int(1));
    else if (family == "complete_bipartite") g = complete_bipartite(arg_int(1), arg_int(2));
    else if (family == "complete_multipartite") g = complete_multipartite(parse_int_list(args.at(1)));
    else if (family == "star") g = star(arg_int(1));
    else if (family == "petersen") g = petersen();
    else if (family == "hypercube") g = hypercube(arg_int(1));
    else if (family == "grid") g = grid(arg_int(1), arg_int(2));
    else if (family == "torus") g = torus(arg_int(1), arg_int(2));
    else if (family == "outerplanar") g = maximal_outerplanar(arg_int(1), seed);
    else if (family == "outerplanar_fan") g = maximal_outerplanar_fan(arg_int(1));
    else if (family == "triangle_replacement") g = triangle_replacement(load_graph(args.at(1)));
    else throw std::invalid_argument("unknown family: " + family);
    print_graph(g, format);
    return 0;
}

int run_solve(const std::string& graph_arg, bool use_oracle, double budget, int threads, int cap) {
    Graph g = load_graph(graph_arg);
    DecyclingResult r =
        use_oracle ? oracle(g, cap) : branch_and_bound(g, budget, threads);
    std::cout << "value " << r.value << "\n";
    std::cout << "witness";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "status "
              << (r.status == SolveStatus::optimal
                      ? "optimal"
                      : r.status == SolveStatus::bounded ? "bounded" : "timeout")
              << "\n";
    if (r.status != SolveStatus::optimal)
        std::cout << "lower " << r.lower << "\nupper " << r.upper << "\n";
    std::cout << "nodes " << r.nodes_explored << "\n";
    std::cout << "time_ms " << static_cast<long long>(r.elapsed_seconds * 1000) << "\n";
    return r.status == SolveStatus::optimal ? 0 : 2;
}

int run_bounds(const std::string& graph_arg) {
    Graph g = load_graph(graph_arg);
    BoundReport report = bound_report(g);
    for (const BoundEntry& e : report.entries)
        std::cout << "bound " << (e.kind == BoundKind::lower ? "lower" : "upper") << " "
                  << e.name << " " << e.value << " (" << e.citation << ")\n";
    std::cout << "best_lower " << report.best_lower() << "\n";
    if (auto up = report.best_upper()) std::cout << "best_upper " << *up << "\n";
    return 0;
}

void print_answer(const FormulaAnswer& answer) {
    if (answer.value) {
        std::cout << *answer.value << " (" << answer.citation << ")\n";
    } else {
        std::cout << "bounds " << answer.fallback->best_lower() << " "
                  << *answer.fallback->best_upper() << " (" << answer.citation << ")\n";
    }
}

int run_formula(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("formula needs a family");
    const std::string& family = args[0];
    if (family == "grid") print_answer(grid_formula(std::stoi(args.at(1)), std::stoi(args.at(2))));
    else if (family == "cube") print_answer(cube_formula(std::stoi(args.at(1))));
    else if (family == "complete")
        std::cout << complete_formula(std::stoi(args.at(1))) << " (complete graph formula)\n";
    else if (family == "multipartite") {
        std::vector<int> sizes = parse_int_list(args.at(1));
        std::vector<long long> parts(sizes.begin(), sizes.end());
        std::cout << multipartite_formula(parts) << " (multipartite formula)\n";
    } else {
        throw std::invalid_argument("unknown formula family: " + family);
    }
    return 0;
}

int run_snake(const std::string& cells_arg, const std::string& turns_arg,
              const std::string& attach_arg) {
    SnakeSpec spec;
    spec.cells = parse_int_list(cells_arg);
    if (!turns_arg.empty()) {
        std::string turns;
        for (char c : turns_arg)
            if (c != ',') turns += c;
        spec = square_snake_from_turns(static_cast<int>(spec.cells.size()), turns);
    } else if (!attach_arg.empty()) {
        spec.attachments = parse_int_list(attach_arg);
    } else {
        spec.attachments.assign(spec.cells.size() - 1, 0);
        for (size_t i = 1; i < spec.attachments.size(); ++i)
            spec.attachments[i] = 1;  // straight by default
    }
    Snake snake = build_snake(spec);
    write_text(snake.graph, std::cout);
    std::cout << "name";
    for (int n : snake.name.entries) std::cout << " " << n;
    std::cout << "\nnickname";
    for (int i : nickname(snake.name)) std::cout << " " << i;
    std::cout << "\nnabla_nickname " << nabla_snake(spec) << "\n";
    std::cout << "nabla_greedy " << greedy_decycle(spec).size() << "\n";
    bool square = std::all_of(spec.cells.begin(), spec.cells.end(), [](int c) { return c == 4; });
    if (square && is_nonsingular(spec))
        std::cout << "nabla_segments " << segment_formula(spec) << "\n";
    if (snake.graph.vertex_count() <= 26)
        std::cout << "nabla_oracle " << oracle(snake.graph).value << "\n";
    return 0;
}

int run_table(const std::string& which) {
    if (which == "cubes") {
        std::cout << "n     ";
        for (int n = 1; n <= 8; ++n) std::cout << " " << n;
        std::cout << "\nnabla ";
        for (int n = 1; n <= 8; ++n) std::cout << " " << *cube_formula(n).value;
        std::cout << "\n";
        for (int n = 9; n <= 13; ++n) {
            auto [lo, hi] = cube_bounds_table(n);
            std::cout << "n " << n << " bounds (" << lo << "," << hi << ")\n";
        }
    } else if (which == "grids") {
        std::cout << "m\\n";
        for (int n = 4; n <= 12; ++n) std::cout << " " << n;
        std::cout << "\n";
        for (int m = 2; m <= 7; ++m) {
            std::cout << m;
            for (int n = 4; n <= 12; ++n)
                std::cout << " " << *grid_formula(std::min(m, n), std::max(m, n)).value;
            std::cout << "\n";
        }
    } else {
        throw std::invalid_argument("unknown table: " + which);
    }
    return 0;
}

int run_verify(const std::string& scope, int cap) {
    VerifyReport report = verify_suite(scope, cap);
    for (const VerifyLine& line : report.lines)
        std::cout << (line.mismatches == 0 ? "PASS " : "FAIL ") << line.name << ": "
                  << line.instances << " instances, " << line.mismatches << " mismatches\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decycling number toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> rest;
    unsigned seed = 1;
    std::string format = "text";
    auto* generate = app.add_subcommand("generate", "emit a graph in the text format");
    generate->add_option("params", rest, "family and its parameters");
    generate->add_option("--seed", seed);
    generate->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

    std::string graph_arg;
    bool use_oracle = false, use_bnb = false;
    double budget = 60.0;
    int threads = 1, cap = 26;
    auto* solve = app.add_subcommand("solve", "exact minimum decycling set");
    solve->add_option("graph", graph_arg)->required();
    solve->add_flag("--oracle", use_oracle);
    solve->add_flag("--bnb", use_bnb);
    solve->add_option("--budget", budget);
    solve->add_option("--threads", threads);
    solve->add_option("--cap", cap);

    std::string bounds_graph;
    auto* bounds_cmd = app.add_subcommand("bounds", "bound report for a graph");
    bounds_cmd->add_option("graph", bounds_graph)->required();

    std::vector<std::string> formula_args;
    auto* formula = app.add_subcommand("formula", "closed-form value or bounds");
    formula->add_option("params", formula_args);

    std::string cells_arg, turns_arg, attach_arg;
    auto* snake_cmd = app.add_subcommand("snake", "build and analyze a snake");
    snake_cmd->add_option("--cells", cells_arg)->required();
    snake_cmd->add_option("--turns", turns_arg);
    snake_cmd->add_option("--attach", attach_arg);

    std::string table_arg;
    auto* table = app.add_subcommand("table", "reproduce the cube/grid tables");
    table->add_option("which", table_arg)->required();

    std::string scope = "all";
    int verify_cap = 0;
    auto* verify = app.add_subcommand("verify", "formula-vs-oracle cross checks");
    verify->add_option("scope", scope);
    verify->add_option("--cap", verify_cap);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return run_generate(rest, seed, format);
        if (solve->parsed()) return run_solve(graph_arg, use_oracle && !use_bnb, budget, threads, cap);
        if (bounds_cmd->parsed()) return run_bounds(bounds_graph);
        if (formula->parsed()) return run_formula(formula_args);
        if (snake_cmd->parsed()) return run_snake(cells_arg, turns_arg, attach_arg);
        if (table->parsed()) return run_table(table_arg);
        if (verify->parsed()) return run_verify(scope, verify_cap);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
