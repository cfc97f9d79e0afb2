#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace crossmin {

uint64_t derive_run_seed(uint64_t master_seed, uint64_t perm) {
    // splitmix64 of the combined value
    uint64_t x = master_seed + 0x9E3779B97F4A7C15ull * (perm + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

namespace {

int resolve_jobs(int jobs) {
    if (jobs > 0)
        return jobs;
    if (const char* env = std::getenv("CROSSMIN_JOBS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? (int)hc : 1;
}

struct PreparedInstance {
    std::string id;
    Graph graph;
    InstanceInit init;
    std::string error;  // non-empty: preparation failed
};

} // namespace

MatrixResult run_matrix(const std::vector<InstanceSpec>& instances,
                        const std::vector<HeuristicConfig>& configs,
                        const MatrixOptions& options) {
    if (options.permutations < 1)
        throw Error(ErrorCode::InvalidArgument, "permutations must be >= 1");

    MatrixResult result;

    std::vector<PreparedInstance> prepared(instances.size());
    for (size_t i = 0; i < instances.size(); ++i) {
        prepared[i].id = instances[i].id;
        try {
            prepared[i].graph = instances[i].build();
            prepared[i].init = prepare_instance(prepared[i].graph);
        } catch (const std::exception& ex) {
            prepared[i].error = ex.what();
            result.failures.push_back(prepared[i].id + ": " + ex.what());
        }
    }

    struct Task {
        size_t instance;
        size_t config;
        uint64_t perm;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < prepared.size(); ++i) {
        if (!prepared[i].error.empty())
            continue;
        for (size_t c = 0; c < configs.size(); ++c)
            for (int s = 0; s < options.permutations; ++s)
                tasks.push_back(Task{i, c, (uint64_t)s});
    }

    std::vector<RunRecord> slots(tasks.size());
    std::vector<std::string> task_errors(tasks.size());
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size())
                return;
            const Task& task = tasks[t];
            const PreparedInstance& inst = prepared[task.instance];
            const HeuristicConfig& cfg = configs[task.config];
            RunRecord rec;
            rec.instance = inst.id;
            rec.config = cfg.to_string();
            rec.seed = task.perm;
            try {
                uint64_t rng_seed = derive_run_seed(options.master_seed, task.perm);
                auto start = std::chrono::steady_clock::now();
                PipelineResult pr = run_pipeline(inst.graph, inst.init, cfg, rng_seed);
                auto stop = std::chrono::steady_clock::now();
                rec.crossings = pr.stats.crossings;
                rec.time_us =
                    std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
                rec.alpha_removed = pr.stats.alpha_removed;
                rec.beta_removed = pr.stats.beta_removed;
                rec.sweeps = pr.stats.sweeps;
                slots[t] = std::move(rec);
            } catch (const std::exception& ex) {
                task_errors[t] = inst.id + " / " + rec.config + " / seed " +
                                 std::to_string(task.perm) + ": " + ex.what();
            }
        }
    };

    int jobs = std::min<int>(resolve_jobs(options.jobs), std::max<size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    for (size_t t = 0; t < tasks.size(); ++t) {
        if (!task_errors[t].empty())
            result.failures.push_back(task_errors[t]);
        else
            result.records.push_back(std::move(slots[t]));
    }
    // Tasks were generated in (instance, config, seed) order already; keep it
    // stable regardless of thread scheduling.
    return result;
}

std::vector<AggregateRecord> aggregate(const std::vector<RunRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::vector<int64_t>> groups;
    for (const auto& r : records)
        groups[{r.instance, r.config}].push_back(r.crossings);

    std::vector<AggregateRecord> out;
    for (auto& [key, xs] : groups) {
        AggregateRecord a;
        a.instance = key.first;
        a.config = key.second;
        a.permutations = (int64_t)xs.size();
        a.best = *std::min_element(xs.begin(), xs.end());
        double sum = 0;
        for (int64_t x : xs)
            sum += (double)x;
        a.mean = sum / (double)xs.size();
        a.relative_improvement = a.mean > 0 ? (double)a.best / a.mean : 1.0;
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<std::pair<std::string, int64_t>> best_overall(const std::vector<RunRecord>& records) {
    std::map<std::string, int64_t> best;
    for (const auto& r : records) {
        auto it = best.find(r.instance);
        if (it == best.end() || r.crossings < it->second)
            best[r.instance] = r.crossings;
    }
    return {best.begin(), best.end()};
}

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "instance,config,seed,crossings,time_us,alpha_removed,beta_removed,sweeps\n";
    for (const auto& r : records) {
        out << r.instance << ',' << r.config << ',' << r.seed << ',' << r.crossings << ','
            << r.time_us << ',' << r.alpha_removed << ',' << r.beta_removed << ',' << r.sweeps
            << '\n';
    }
}

void emit_csv(const std::vector<AggregateRecord>& aggregates, std::ostream& out) {
    out << "instance,config,permutations,best,mean,relative_improvement\n";
    char buf[64];
    for (const auto& a : aggregates) {
        out << a.instance << ',' << a.config << ',' << a.permutations << ',' << a.best << ',';
        std::snprintf(buf, sizeof(buf), "%.6f", a.mean);
        out << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.6f", a.relative_improvement);
        out << buf << '\n';
    }
}

void emit_best_csv(const std::vector<std::pair<std::string, int64_t>>& best, std::ostream& out) {
    out << "instance,best\n";
    for (const auto& [inst, b] : best)
        out << inst << ',' << b << '\n';
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
    std::vector<RunRecord> out;
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::Parse, "empty results CSV");
    if (line != "instance,config,seed,crossings,time_us,alpha_removed,beta_removed,sweeps")
        throw Error(ErrorCode::Parse, "unexpected results CSV header: " + line);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> cols;
        std::istringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ','))
            cols.push_back(tok);
        if (cols.size() != 8)
            throw Error(ErrorCode::Parse, "bad results CSV row at line " + std::to_string(lineno));
        RunRecord r;
        r.instance = cols[0];
        r.config = cols[1];
        try {
            r.seed = (uint64_t)std::stoull(cols[2]);
            r.crossings = std::stoll(cols[3]);
            r.time_us = std::stoll(cols[4]);
            r.alpha_removed = std::stoll(cols[5]);
            r.beta_removed = std::stoll(cols[6]);
            r.sweeps = std::stoll(cols[7]);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "bad number in results CSV at line " + std::to_string(lineno));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace crossmin
