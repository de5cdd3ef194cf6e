#include "keller/bench.hpp"

#include "keller/corpus.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace keller {

namespace {

DeciderResult run_named(const std::string& criterion, const PolyMap& f, std::uint64_t bound) {
    if (criterion == "taylor") return run_taylor(f);
    if (criterion == "essen") return run_essen(f);
    if (criterion == "series") return run_series(f, bound);
    throw std::invalid_argument("unknown criterion '" + criterion + "'");
}

std::vector<BenchRow> bench_one(const PolyMap& f, const std::string& map_id,
                                const std::vector<std::string>& criteria) {
    std::uint64_t bound = 1;
    std::uint32_t deg = 0;
    try {
        deg = map_degree(f);
        bound = default_bound(f);
    } catch (const std::exception&) {
        // gate failures surface per criterion below
    }
    std::vector<BenchRow> rows;
    std::vector<Verdict> verdicts;
    for (const auto& name : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        DeciderResult r = run_named(name, f, bound);
        const auto t1 = std::chrono::steady_clock::now();
        BenchRow row;
        row.map_id = map_id;
        row.n = f.nvars();
        row.deg = deg;
        row.criterion = name;
        row.verdict = std::string(verdict_tag(r.verdict));
        row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.iters = r.steps;
        row.peak_terms = r.peak_terms;
        rows.push_back(std::move(row));
        verdicts.push_back(std::move(r.verdict));
    }
    // with every criterion present this is a full cross-check
    for (std::size_t i = 1; i < verdicts.size(); ++i) {
        if (verdict_tag(verdicts[i]) != verdict_tag(verdicts[0]))
            throw CriterionDisagreement("criterion disagreement on map " + map_id);
        if (std::holds_alternative<Invertible>(verdicts[0]) &&
            !(std::get<Invertible>(verdicts[i]).inverse == std::get<Invertible>(verdicts[0]).inverse))
            throw CriterionDisagreement("inverse certificates differ on map " + map_id);
    }
    return rows;
}

}  // namespace

std::vector<BenchRow> bench_maps(const std::vector<PolyMap>& maps,
                                 const std::vector<std::string>& criteria, unsigned jobs,
                                 const std::string& id_prefix) {
    auto map_id = [&](std::size_t i) {
        std::ostringstream os;
        os << id_prefix << std::setw(3) << std::setfill('0') << i;
        return os.str();
    };

    std::vector<std::vector<BenchRow>> per_map(maps.size());
    if (jobs <= 1 || maps.size() <= 1) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            per_map[i] = bench_one(maps[i], map_id(i), criteria);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= maps.size()) return;
                try {
                    per_map[i] = bench_one(maps[i], map_id(i), criteria);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned width = std::min<unsigned>(jobs, static_cast<unsigned>(maps.size()));
        pool.reserve(width);
        for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<BenchRow> rows;
    rows.reserve(maps.size() * criteria.size());
    for (auto& group : per_map)
        for (auto& row : group) rows.push_back(std::move(row));
    return rows;
}

std::vector<BenchRow> run_bench(const BenchParams& params) {
    const std::vector<PolyMap> maps =
        gen_triangular_corpus(params.seed, params.n, params.deg, params.layers, params.count);
    return bench_maps(maps, params.criteria, params.jobs);
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows,
               const std::string& provenance_comment) {
    if (!provenance_comment.empty()) os << "# " << provenance_comment << '\n';
    os << "map_id,n,deg,criterion,verdict,ms,iters,peak_terms\n";
    for (const auto& r : rows) {
        os << r.map_id << ',' << r.n << ',' << r.deg << ',' << r.criterion << ',' << r.verdict << ','
           << std::fixed << std::setprecision(3) << r.ms << ',' << r.iters << ',' << r.peak_terms
           << '\n';
    }
}

}  // namespace keller
