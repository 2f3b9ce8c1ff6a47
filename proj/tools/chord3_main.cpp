#include <algorithm>
#include <chrono>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chord3/bookembed.hpp"
#include "chord3/io.hpp"
#include "chord3/oracle.hpp"
#include "chord3/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json margin_json(int margin) {
    // the sentinel minimum means no recursion edge was observed
    return margin == std::numeric_limits<int>::min() ? json(nullptr) : json(margin);
}

json stats_json(const chord3::SolveStats& stats) {
    return json{{"nodes", stats.nodes},
                {"depth", stats.max_depth},
                {"family_elements", stats.family_elements},
                {"max_family_len", stats.max_family_len},
                {"brute_calls", stats.brute_calls},
                {"eliminate_calls", stats.branching.eliminate_calls},
                {"eliminate_yielded", stats.branching.eliminate_yielded},
                {"eliminate_pruned", stats.branching.eliminate_pruned},
                {"max_eliminate_len", stats.branching.max_eliminate_len},
                {"max_semi_len", stats.branching.max_semi_len},
                {"max_full_depth", stats.branching.max_full_depth},
                {"contraction_margin", margin_json(stats.contraction_margin)},
                {"measure_margin", margin_json(stats.branching.measure_margin)}};
}

json coloring_json(const chord3::PartialColoring& coloring) {
    json out = json::object();
    for (auto [v, c] : coloring.entries())
        out[std::to_string(v)] = std::string(1, chord3::to_letter(c));
    return out;
}

int run_solve(const std::string& path, int base_threshold, int threads,
              const std::string& format) {
    chord3::Instance instance = chord3::parse_instance(read_file(path));
    auto start = std::chrono::steady_clock::now();
    chord3::SolveResult result =
        threads > 1
            ? chord3::solve_parallel(instance, {base_threshold, threads, 0})
            : chord3::solve(instance, {base_threshold});
    double ms = elapsed_ms(start);

    if (format == "json") {
        json record = stats_json(result.stats);
        record["verdict"] = result.yes ? "yes" : "no";
        record["n"] = instance.size();
        record["wall_ms"] = ms;
        record["coloring"] = result.yes ? coloring_json(result.coloring) : json(nullptr);
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "# verdict " << (result.yes ? "yes" : "no") << " nodes=" << result.stats.nodes
                  << " depth=" << result.stats.max_depth
                  << " family=" << result.stats.family_elements << " wall_ms=" << ms << "\n";
        if (result.yes) std::cout << chord3::serialize_coloring(result.coloring);
    }
    return result.yes ? kExitYes : kExitNo;
}

int run_embed(const std::string& path, int base_threshold, const std::string& format) {
    chord3::OrderedGraph graph = chord3::parse_ordered_graph(read_file(path));
    auto start = std::chrono::steady_clock::now();
    auto pages = chord3::embed3(graph, {base_threshold});
    double ms = elapsed_ms(start);

    if (format == "json") {
        json record{{"verdict", pages ? "yes" : "no"},
                    {"vertices", graph.vertex_count},
                    {"edges", graph.edge_count()},
                    {"wall_ms", ms}};
        if (pages) {
            json assignment = json::object();
            for (int e = 0; e < graph.edge_count(); ++e)
                assignment[std::to_string(e)] = pages->page[e];
            record["pages"] = assignment;
        } else {
            record["pages"] = nullptr;
        }
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "# verdict " << (pages ? "yes" : "no") << " edges=" << graph.edge_count()
                  << " wall_ms=" << ms << "\n";
        if (pages)
            for (int e = 0; e < graph.edge_count(); ++e)
                std::cout << e << " " << pages->page[e] << "\n";
    }
    return pages ? kExitYes : kExitNo;
}

int run_oracle(const std::string& path, std::uint64_t budget, const std::string& format) {
    chord3::Instance instance = chord3::parse_instance(read_file(path));
    auto start = std::chrono::steady_clock::now();
    chord3::OracleResult result = chord3::oracle_solve(instance, budget);
    double ms = elapsed_ms(start);

    const char* verdict = result.status == chord3::OracleStatus::Yes ? "yes"
                          : result.status == chord3::OracleStatus::No ? "no"
                                                                      : "budget-exceeded";
    if (format == "json") {
        json record{{"verdict", verdict},
                    {"n", instance.size()},
                    {"nodes", result.nodes},
                    {"wall_ms", ms},
                    {"coloring", result.yes() ? coloring_json(result.coloring) : json(nullptr)}};
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "# verdict " << verdict << " nodes=" << result.nodes << " wall_ms=" << ms
                  << "\n";
        if (result.yes()) std::cout << chord3::serialize_coloring(result.coloring);
    }
    switch (result.status) {
        case chord3::OracleStatus::Yes: return kExitYes;
        case chord3::OracleStatus::No: return kExitNo;
        case chord3::OracleStatus::BudgetExceeded: return kExitBudget;
    }
    return kExitInputError;
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        sizes.push_back(std::stoi(token));
    }
    if (sizes.empty()) throw std::invalid_argument("--sizes needs at least one size");
    return sizes;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size();
    return k == 0 ? 0.0 : (k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]));
}

int run_bench(const std::string& sizes_csv, int trials, std::uint64_t seed,
              const std::string& density_name, int threads, int base_threshold) {
    std::vector<int> sizes = parse_sizes(sizes_csv);
    chord3::ListDensity density = chord3::density_from_string(density_name);
#ifdef _OPENMP
    const int bench_threads = threads > 0 ? threads : omp_get_max_threads();
#else
    const int bench_threads = 1;
#endif

    for (int n : sizes) {
        std::vector<double> serial_ms, parallel_ms;
        int yes_count = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t instance_seed = seed + 1000003ULL * n + trial;
            chord3::Instance instance = chord3::gen_random(n, instance_seed, density);

            auto t0 = std::chrono::steady_clock::now();
            chord3::SolveResult serial = chord3::solve(instance, {base_threshold});
            double s_ms = elapsed_ms(t0);
            serial_ms.push_back(s_ms);

            auto t1 = std::chrono::steady_clock::now();
            chord3::SolveResult parallel =
                chord3::solve_parallel(instance, {base_threshold, bench_threads, 0});
            double p_ms = elapsed_ms(t1);
            parallel_ms.push_back(p_ms);

            if (serial.yes != parallel.yes)
                throw std::logic_error("serial and parallel solvers disagree");
            yes_count += serial.yes;

            json record = stats_json(serial.stats);
            record["size"] = n;
            record["trial"] = trial;
            record["seed"] = instance_seed;
            record["density"] = chord3::to_string(density);
            record["verdict"] = serial.yes ? "yes" : "no";
            record["serial_ms"] = s_ms;
            record["parallel_ms"] = p_ms;
            record["speedup"] = p_ms > 0 ? s_ms / p_ms : 0.0;
            record["threads"] = bench_threads;
            std::cout << record.dump() << "\n";
        }
        std::cerr << "size " << n << ": yes " << yes_count << "/" << trials << ", median serial "
                  << median(serial_ms) << " ms, median parallel " << median(parallel_ms)
                  << " ms (threads=" << bench_threads << ")\n";
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list-3-coloring of circle graphs and 3-page book embedding"};
    app.require_subcommand(1);

    std::string input_path, output_path, coloring_path;
    std::string format = "text";
    std::string density = "full";
    std::string sizes = "16,24,32,48,60";
    int base_threshold = 8;
    int threads = 1;
    int gen_n = 1;
    int trials = 5;
    std::uint64_t seed = 1;
    std::uint64_t budget = chord3::kDefaultOracleBudget;
    double drop_p = 0.5;

    auto* solve_cmd = app.add_subcommand("solve", "decide list 3-colorability of a chord instance");
    solve_cmd->add_option("file", input_path)->required();
    solve_cmd->add_option("--base-threshold", base_threshold, "brute-force at or below this size");
    solve_cmd->add_option("--threads", threads, "workers for speculative branch evaluation")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* embed_cmd = app.add_subcommand("embed", "decide 3-page book embeddability");
    embed_cmd->add_option("file", input_path)->required();
    embed_cmd->add_option("--base-threshold", base_threshold);
    embed_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "reference backtracking solver");
    oracle_cmd->add_option("file", input_path)->required();
    oracle_cmd->add_option("--budget", budget, "node budget before giving up");
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gen_cmd = app.add_subcommand("gen", "generate a random chord instance");
    gen_cmd->add_option("--n", gen_n, "number of chords")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--density", density)->check(CLI::IsMember({"full", "drop-one", "mixed"}));
    gen_cmd->add_option("--drop-p", drop_p, "drop probability for drop-one");
    gen_cmd->add_option("-o,--output", output_path);

    auto* render_cmd = app.add_subcommand("render", "render a chord instance as SVG");
    render_cmd->add_option("file", input_path)->required();
    render_cmd->add_option("--coloring", coloring_path, "coloring file, e.g. solve output");
    render_cmd->add_option("-o,--output", output_path);

    auto* bench_cmd = app.add_subcommand("bench", "timing records for random instances");
    bench_cmd->add_option("--sizes", sizes, "comma-separated instance sizes");
    bench_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--density", density)->check(CLI::IsMember({"full", "drop-one", "mixed"}));
    bench_cmd->add_option("--threads", threads, "0 = all available");
    bench_cmd->add_option("--base-threshold", base_threshold);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitYes : kExitInputError;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(input_path, base_threshold, threads, format);
        if (embed_cmd->parsed()) return run_embed(input_path, base_threshold, format);
        if (oracle_cmd->parsed()) return run_oracle(input_path, budget, format);
        if (gen_cmd->parsed()) {
            chord3::Instance instance =
                chord3::gen_random(gen_n, seed, chord3::density_from_string(density), drop_p);
            write_output(output_path, chord3::serialize_instance(instance));
            return kExitYes;
        }
        if (render_cmd->parsed()) {
            chord3::Instance instance = chord3::parse_instance(read_file(input_path));
            chord3::PartialColoring coloring;
            const chord3::PartialColoring* coloring_ptr = nullptr;
            if (!coloring_path.empty()) {
                coloring = chord3::parse_coloring(read_file(coloring_path),
                                                  instance.diagram.vertex_capacity());
                coloring_ptr = &coloring;
            }
            write_output(output_path, chord3::render_svg(instance, coloring_ptr));
            return kExitYes;
        }
        if (bench_cmd->parsed())
            return run_bench(sizes, trials, seed, density, threads, base_threshold);
    } catch (const chord3::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
