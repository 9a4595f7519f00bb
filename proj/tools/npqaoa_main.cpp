// Command-line harness: instance generation, single runs, the full
// benchmark matrix, summaries, and SVG charts.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npqaoa/npqaoa.hpp"

namespace {

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(token, &pos);
        if (pos != token.size() || v == 0) {
            throw std::invalid_argument("bad size list entry: " + token);
        }
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    return sizes;
}

std::vector<npqaoa::OptimizerKind> parse_optimizers(const std::string& csv) {
    using npqaoa::OptimizerKind;
    if (csv == "all") {
        return {npqaoa::kAllOptimizers.begin(), npqaoa::kAllOptimizers.end()};
    }
    std::vector<OptimizerKind> kinds;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto kind = npqaoa::kind_from_name(token);
        if (!kind) throw std::invalid_argument("unknown optimizer: " + token);
        kinds.push_back(*kind);
    }
    if (kinds.empty()) throw std::invalid_argument("empty optimizer list");
    return kinds;
}

void print_record(const npqaoa::BenchRecord& rec) {
    std::cout << "optimizer=" << rec.optimizer << " n=" << rec.n
              << " best_energy=" << rec.best_energy
              << " R=" << npqaoa::format_double(rec.r)
              << " R-1=" << npqaoa::format_double(rec.r_minus_1)
              << " opt_gap=" << rec.opt_gap << " evals=" << rec.evals
              << " samples=" << rec.samples
              << " wall_time_s=" << npqaoa::format_double(rec.wall_time_s) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    using namespace npqaoa;

    CLI::App app{"Number-partitioning QAOA benchmark suite"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance file");
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::int64_t gen_min = 1, gen_max = 100;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Number of values")->required();
    gen->add_option("--seed", gen_seed, "Generation seed")->required();
    gen->add_option("--min", gen_min, "Smallest value", true);
    gen->add_option("--max", gen_max, "Largest value", true);
    gen->add_option("--out", gen_out, "Output instance JSON")->required();

    // run
    auto* run = app.add_subcommand("run", "Run one optimizer on one instance");
    std::string run_instance, run_optimizer, run_csv;
    std::size_t run_layers = 2, run_pop = 10, run_iters = 50;
    std::uint64_t run_seed_flag = 0;
    run->add_option("--instance", run_instance, "Instance JSON file")->required();
    run->add_option("--optimizer", run_optimizer,
                    "baseline|ga|de|pso|aco|sa-baseline")
        ->required();
    run->add_option("--layers", run_layers, "Ansatz layers p", true);
    run->add_option("--pop", run_pop, "Population size", true);
    run->add_option("--iters", run_iters, "Iterations", true);
    run->add_option("--seed", run_seed_flag, "Run seed")->required();
    run->add_option("--csv", run_csv, "Also write the record as CSV");

    // bench
    auto* bench = app.add_subcommand("bench", "Run the full benchmark matrix");
    std::string bench_sizes = "4,8,12", bench_optimizers = "all", bench_out;
    std::size_t bench_instances = 5, bench_layers = 2, bench_pop = 10,
                bench_iters = 50, bench_workers = 1;
    std::uint64_t bench_seed = 0;
    std::int64_t bench_min = 1, bench_max = 100;
    bench->add_option("--sizes", bench_sizes, "Comma-separated sizes", true);
    bench->add_option("--instances", bench_instances, "Instances per size", true);
    bench->add_option("--optimizers", bench_optimizers,
                      "Comma-separated optimizer names or 'all'", true);
    bench->add_option("--layers", bench_layers, "Ansatz layers p", true);
    bench->add_option("--pop", bench_pop, "Population size", true);
    bench->add_option("--iters", bench_iters, "Iterations", true);
    bench->add_option("--seed", bench_seed, "Master seed")->required();
    bench->add_option("--out", bench_out, "Output records CSV")->required();
    bench->add_option("--workers", bench_workers, "Concurrent cells", true);
    bench->add_option("--min", bench_min, "Smallest instance value", true);
    bench->add_option("--max", bench_max, "Largest instance value", true);

    // summarize
    auto* summarize_cmd = app.add_subcommand("summarize", "Aggregate a records CSV");
    std::string sum_in, sum_out;
    summarize_cmd->add_option("--in", sum_in, "Records CSV")->required();
    summarize_cmd->add_option("--out", sum_out, "Summary CSV")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "Render a summary CSV as an SVG chart");
    std::string plot_in, plot_metric = "r_minus_1", plot_out;
    plot->add_option("--in", plot_in, "Summary CSV")->required();
    plot->add_option("--metric", plot_metric, "r_minus_1|wall_time", true);
    plot->add_option("--out", plot_out, "Output SVG")->required();

    // solve-exact
    auto* solve = app.add_subcommand("solve-exact", "Optimal partition of an instance");
    std::string solve_instance;
    solve->add_option("--instance", solve_instance, "Instance JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            const NppInstance instance =
                generate_instance(gen_n, gen_seed, gen_min, gen_max);
            save_instance(instance, gen_out);
            std::cout << "wrote " << gen_out << " (n=" << instance.size()
                      << ", total=" << instance.total() << ")\n";
        } else if (run->parsed()) {
            const auto kind = kind_from_name(run_optimizer);
            if (!kind) {
                throw std::invalid_argument("unknown optimizer: " + run_optimizer);
            }
            const NppInstance instance = load_instance(run_instance);
            BenchPlan plan;
            plan.layers = run_layers;
            plan.population = run_pop;
            plan.iterations = run_iters;
            const BenchRecord rec = run_one(instance, *kind, plan, run_seed_flag);
            print_record(rec);
            if (!run_csv.empty()) {
                save_records_csv(run_csv, {rec});
            }
        } else if (bench->parsed()) {
            BenchPlan plan;
            plan.sizes = parse_sizes(bench_sizes);
            plan.instances_per_size = bench_instances;
            plan.optimizers = parse_optimizers(bench_optimizers);
            plan.layers = bench_layers;
            plan.population = bench_pop;
            plan.iterations = bench_iters;
            plan.master_seed = bench_seed;
            plan.value_lo = bench_min;
            plan.value_hi = bench_max;
            plan.workers = bench_workers;
            const BenchResult result = run_benchmark(plan);
            for (const BenchError& err : result.errors) {
                std::cerr << "error row: optimizer=" << err.optimizer << " n=" << err.n
                          << " instance=" << err.instance_index << ": " << err.message
                          << '\n';
            }
            save_records_csv(bench_out, result.records);
            std::cout << "wrote " << result.records.size() << " records ("
                      << result.errors.size() << " error rows) to " << bench_out
                      << '\n';
        } else if (summarize_cmd->parsed()) {
            save_summary_csv(sum_out, summarize(load_records_csv(sum_in)));
            std::cout << "wrote " << sum_out << '\n';
        } else if (plot->parsed()) {
            const auto metric = metric_from_name(plot_metric);
            if (!metric) {
                throw std::invalid_argument("unknown metric: " + plot_metric);
            }
            emit_plot(load_summary_csv(plot_in), *metric, plot_out);
            std::cout << "wrote " << plot_out << '\n';
        } else if (solve->parsed()) {
            const NppInstance instance = load_instance(solve_instance);
            const PartitionSolution sol = exact_best(instance);
            std::string bits;
            for (std::uint8_t b : sol.bits) bits.push_back(b ? '1' : '0');
            std::cout << "n=" << instance.size() << " d=" << sol.diff
                      << " energy=" << sol.energy << " R=" << format_double(sol.ratio)
                      << " bits=" << bits << '\n';
        }
        return 0;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
