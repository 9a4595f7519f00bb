#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "npqaoa/anneal.hpp"
#include "npqaoa/errors.hpp"
#include "npqaoa/metaheuristics.hpp"
#include "npqaoa/qaoa.hpp"
#include "npqaoa/simplex.hpp"

namespace npqaoa {

// Master seed shipped with the tool. The default-plan result files and the
// regression suite are recorded against it; changing it invalidates both.
inline constexpr std::uint64_t kDefaultMasterSeed = 7;

enum class OptimizerKind { Baseline, Ga, De, Pso, Aco, SaBaseline };

inline constexpr std::array<OptimizerKind, 6> kAllOptimizers = {
    OptimizerKind::Baseline, OptimizerKind::Ga,  OptimizerKind::De,
    OptimizerKind::Pso,      OptimizerKind::Aco, OptimizerKind::SaBaseline,
};

inline std::string_view kind_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::Baseline: return "baseline";
        case OptimizerKind::Ga: return "ga";
        case OptimizerKind::De: return "de";
        case OptimizerKind::Pso: return "pso";
        case OptimizerKind::Aco: return "aco";
        case OptimizerKind::SaBaseline: return "sa-baseline";
    }
    return "unknown";
}

inline std::optional<OptimizerKind> kind_from_name(std::string_view name) {
    for (OptimizerKind kind : kAllOptimizers) {
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

// The QAOA-parameter optimizers (everything except the annealing stand-in).
inline bool tunes_circuit(OptimizerKind kind) {
    return kind != OptimizerKind::SaBaseline;
}

inline OptimizerTrace run_optimizer(OptimizerKind kind, const ObjectiveSpec& obj,
                                    const OptimizerConfig& cfg, Rng& rng,
                                    OptimizerDiagnostics* diag = nullptr) {
    switch (kind) {
        case OptimizerKind::Baseline: return optimize_simplex(obj, cfg, rng, diag);
        case OptimizerKind::Ga: return optimize_ga(obj, cfg, rng, diag);
        case OptimizerKind::De: return optimize_de(obj, cfg, rng, diag);
        case OptimizerKind::Pso: return optimize_pso(obj, cfg, rng, diag);
        case OptimizerKind::Aco: return optimize_aco(obj, cfg, rng, diag);
        case OptimizerKind::SaBaseline: break;
    }
    throw std::invalid_argument("run_optimizer: not a circuit-parameter optimizer");
}

// The experimental matrix: sizes x instances x optimizers, everything
// seeded from one master seed.
struct BenchPlan {
    std::vector<std::size_t> sizes = {4, 8, 12};
    std::size_t instances_per_size = 5;
    std::vector<OptimizerKind> optimizers = {
        OptimizerKind::Baseline, OptimizerKind::Ga,  OptimizerKind::De,
        OptimizerKind::Pso,      OptimizerKind::Aco, OptimizerKind::SaBaseline};
    std::size_t layers = 2;
    std::size_t population = 10;
    std::size_t iterations = 50;
    std::uint64_t master_seed = kDefaultMasterSeed;
    std::int64_t value_lo = 1;
    std::int64_t value_hi = 100;
    std::size_t workers = 1;
    std::size_t anneal_reads = 1000;
    std::size_t anneal_sweeps = 1000;
};

inline void validate_plan(const BenchPlan& plan) {
    if (plan.sizes.empty()) throw std::invalid_argument("bench: no sizes given");
    if (plan.optimizers.empty()) throw std::invalid_argument("bench: no optimizers given");
    if (plan.instances_per_size < 1) {
        throw std::invalid_argument("bench: need at least one instance per size");
    }
    if (plan.layers < 1) throw std::invalid_argument("bench: need at least one layer");
    if (plan.value_lo < 1 || plan.value_lo > plan.value_hi) {
        throw std::invalid_argument("bench: need 1 <= value_lo <= value_hi");
    }
    if (plan.workers < 1) throw std::invalid_argument("bench: need at least one worker");
}

// Documented, test-pinned seed chain. Instances depend only on (master,
// size, index) so every optimizer in a cell sees the same instance; run
// seeds additionally hash the optimizer name.
inline std::uint64_t instance_seed(std::uint64_t master, std::size_t n,
                                   std::size_t instance_index) {
    return derive_seed(master, {1, n, instance_index});
}

inline std::uint64_t run_seed(std::uint64_t master, std::size_t n,
                              std::size_t instance_index, OptimizerKind kind) {
    return derive_seed(master, {2, n, instance_index, fnv1a64(kind_name(kind))});
}

// One result row of the benchmark matrix.
struct BenchRecord {
    std::string optimizer;
    std::size_t n = 0;
    std::uint64_t instance_seed = 0;
    std::uint64_t run_seed = 0;
    std::int64_t best_energy = 0;
    double r = 1.0;
    double r_minus_1 = 0.0;
    std::int64_t opt_gap = 0;
    std::size_t evals = 0;
    std::size_t samples = 0;
    double wall_time_s = 0.0;
};

struct BenchError {
    std::size_t n = 0;
    std::size_t instance_index = 0;
    std::string optimizer;
    std::string message;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<BenchError> errors;
};

// Runs one optimizer on one instance. Wall time covers the optimize plus
// finalize span only; model building and the exact reference solve stay
// outside the clock.
inline BenchRecord run_one(const NppInstance& instance, OptimizerKind kind,
                           const BenchPlan& plan, std::uint64_t run_seed_value) {
    const QuboModel model = build_qubo(instance);
    const PartitionSolution exact = exact_best(instance);

    BenchRecord rec;
    rec.optimizer = std::string(kind_name(kind));
    rec.n = instance.size();
    rec.instance_seed = instance.seed.value_or(0);
    rec.run_seed = run_seed_value;

    const auto start = std::chrono::steady_clock::now();
    if (kind == OptimizerKind::SaBaseline) {
        AnnealConfig acfg;
        acfg.reads = plan.anneal_reads;
        acfg.sweeps = plan.anneal_sweeps;
        acfg.seed = run_seed_value;
        const PartitionSolution sol = simulated_anneal(model, acfg);
        rec.best_energy = sol.energy;
        rec.r = sol.ratio;
        // effort columns for the stand-in: proposals made, reads taken
        rec.evals = plan.anneal_reads * plan.anneal_sweeps * instance.size();
        rec.samples = plan.anneal_reads;
    } else {
        const ObjectiveSpec obj = make_qaoa_objective(model, plan.layers);
        OptimizerConfig ocfg;
        ocfg.population = plan.population;
        ocfg.iterations = plan.iterations;
        ocfg.seed = run_seed_value;
        Rng rng(run_seed_value);
        const OptimizerTrace trace = run_optimizer(kind, obj, ocfg, rng);
        const QaoaOutcome outcome = finalize(
            model, QaoaParams::from_flat(trace.best_point), rng, trace.evaluations);
        rec.best_energy = outcome.best.energy;
        rec.r = outcome.best.ratio;
        rec.evals = outcome.evaluations;
        rec.samples = outcome.samples_taken;
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    rec.wall_time_s = std::max(elapsed.count(), 1e-9);
    rec.r_minus_1 = rec.r - 1.0;
    rec.opt_gap = rec.best_energy - exact.energy;
    return rec;
}

// Runs the full matrix. Cells are independent (each derives its own seeds)
// and run on up to plan.workers threads; rows come back sorted by
// (n, instance, optimizer-position) regardless of scheduling. A failing
// cell becomes an error entry instead of aborting the matrix.
inline BenchResult run_benchmark(const BenchPlan& plan) {
    validate_plan(plan);

    struct Task {
        std::size_t n;
        std::size_t instance_index;
        std::size_t optimizer_pos;
    };
    std::vector<Task> tasks;
    for (std::size_t n : plan.sizes) {
        for (std::size_t idx = 0; idx < plan.instances_per_size; ++idx) {
            for (std::size_t o = 0; o < plan.optimizers.size(); ++o) {
                tasks.push_back({n, idx, o});
            }
        }
    }

    std::vector<std::optional<BenchRecord>> slots(tasks.size());
    std::vector<std::optional<BenchError>> error_slots(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            const Task& task = tasks[t];
            const OptimizerKind kind = plan.optimizers[task.optimizer_pos];
            try {
                const NppInstance instance = generate_instance(
                    task.n, instance_seed(plan.master_seed, task.n, task.instance_index),
                    plan.value_lo, plan.value_hi);
                slots[t] = run_one(
                    instance, kind, plan,
                    run_seed(plan.master_seed, task.n, task.instance_index, kind));
            } catch (const std::exception& e) {
                error_slots[t] = BenchError{task.n, task.instance_index,
                                            std::string(kind_name(kind)), e.what()};
            }
        }
    };

    const std::size_t thread_count = std::min(plan.workers, tasks.size());
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    std::vector<std::size_t> order(tasks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Task& ta = tasks[a];
        const Task& tb = tasks[b];
        if (ta.n != tb.n) return ta.n < tb.n;
        if (ta.instance_index != tb.instance_index) {
            return ta.instance_index < tb.instance_index;
        }
        return ta.optimizer_pos < tb.optimizer_pos;
    });

    BenchResult result;
    for (std::size_t i : order) {
        if (slots[i]) result.records.push_back(std::move(*slots[i]));
        if (error_slots[i]) result.errors.push_back(std::move(*error_slots[i]));
    }
    return result;
}

// Per-(optimizer, n) means, grouped in optimizer first-appearance order
// with sizes ascending.
struct SummaryRow {
    std::string optimizer;
    std::size_t n = 0;
    double mean_r_minus_1 = 0.0;
    double mean_wall_time_s = 0.0;
    double mean_evals = 0.0;
    std::size_t runs = 0;
};

inline std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no records");
    }
    std::vector<std::string> optimizer_order;
    std::vector<std::size_t> sizes;
    for (const BenchRecord& rec : records) {
        if (std::find(optimizer_order.begin(), optimizer_order.end(), rec.optimizer) ==
            optimizer_order.end()) {
            optimizer_order.push_back(rec.optimizer);
        }
        if (std::find(sizes.begin(), sizes.end(), rec.n) == sizes.end()) {
            sizes.push_back(rec.n);
        }
    }
    std::sort(sizes.begin(), sizes.end());

    std::vector<SummaryRow> rows;
    for (const std::string& opt : optimizer_order) {
        for (std::size_t n : sizes) {
            SummaryRow row;
            row.optimizer = opt;
            row.n = n;
            for (const BenchRecord& rec : records) {
                if (rec.optimizer != opt || rec.n != n) continue;
                row.mean_r_minus_1 += rec.r_minus_1;
                row.mean_wall_time_s += rec.wall_time_s;
                row.mean_evals += static_cast<double>(rec.evals);
                ++row.runs;
            }
            if (row.runs == 0) continue;
            row.mean_r_minus_1 /= static_cast<double>(row.runs);
            row.mean_wall_time_s /= static_cast<double>(row.runs);
            row.mean_evals /= static_cast<double>(row.runs);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// ---- CSV ----------------------------------------------------------------

inline constexpr std::string_view kRecordCsvHeader =
    "optimizer,n,instance_seed,run_seed,best_energy,R,R_minus_1,opt_gap,evals,"
    "samples,wall_time_s";

inline constexpr std::string_view kSummaryCsvHeader =
    "optimizer,n,mean_R_minus_1,mean_wall_time_s,mean_evals,runs";

// Floats carry 12 significant digits, enough to survive a parse/format
// round trip unchanged.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

inline void write_records_csv(std::ostream& out,
                              const std::vector<BenchRecord>& records) {
    out << kRecordCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << r.optimizer << ',' << r.n << ',' << r.instance_seed << ','
            << r.run_seed << ',' << r.best_energy << ',' << format_double(r.r) << ','
            << format_double(r.r_minus_1) << ',' << r.opt_gap << ',' << r.evals << ','
            << r.samples << ',' << format_double(r.wall_time_s) << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace detail

inline std::vector<BenchRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        detail::split_csv_line(line) != detail::split_csv_line(std::string(kRecordCsvHeader))) {
        throw std::invalid_argument("records CSV: bad or missing header");
    }
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 11) {
            throw std::invalid_argument("records CSV: wrong field count");
        }
        BenchRecord r;
        r.optimizer = f[0];
        r.n = std::stoull(f[1]);
        r.instance_seed = std::stoull(f[2]);
        r.run_seed = std::stoull(f[3]);
        r.best_energy = std::stoll(f[4]);
        r.r = std::stod(f[5]);
        r.r_minus_1 = std::stod(f[6]);
        r.opt_gap = std::stoll(f[7]);
        r.evals = std::stoull(f[8]);
        r.samples = std::stoull(f[9]);
        r.wall_time_s = std::stod(f[10]);
        records.push_back(std::move(r));
    }
    return records;
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << kSummaryCsvHeader << '\n';
    for (const SummaryRow& row : rows) {
        out << row.optimizer << ',' << row.n << ',' << format_double(row.mean_r_minus_1)
            << ',' << format_double(row.mean_wall_time_s) << ','
            << format_double(row.mean_evals) << ',' << row.runs << '\n';
    }
}

inline std::vector<SummaryRow> read_summary_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        detail::split_csv_line(line) != detail::split_csv_line(std::string(kSummaryCsvHeader))) {
        throw std::invalid_argument("summary CSV: bad or missing header");
    }
    std::vector<SummaryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 6) {
            throw std::invalid_argument("summary CSV: wrong field count");
        }
        SummaryRow row;
        row.optimizer = f[0];
        row.n = std::stoull(f[1]);
        row.mean_r_minus_1 = std::stod(f[2]);
        row.mean_wall_time_s = std::stod(f[3]);
        row.mean_evals = std::stod(f[4]);
        row.runs = std::stoull(f[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void save_records_csv(const std::string& path,
                             const std::vector<BenchRecord>& records) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    write_records_csv(out, records);
    if (!out) throw io_error("write failed: " + path);
}

inline std::vector<BenchRecord> load_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    return read_records_csv(in);
}

inline void save_summary_csv(const std::string& path,
                             const std::vector<SummaryRow>& rows) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    write_summary_csv(out, rows);
    if (!out) throw io_error("write failed: " + path);
}

inline std::vector<SummaryRow> load_summary_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    return read_summary_csv(in);
}

}  // namespace npqaoa
