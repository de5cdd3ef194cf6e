#pragma once

#include "keller/criteria.hpp"
#include "keller/poly_map.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace keller {

// One benchmark measurement: a (map, criterion) pair.
struct BenchRow {
    std::string map_id;
    std::size_t n = 0;
    std::uint32_t deg = 0;
    std::string criterion;
    std::string verdict;
    double ms = 0.0;
    std::uint64_t iters = 0;
    std::size_t peak_terms = 0;
};

struct BenchParams {
    std::uint64_t seed = 1;
    std::size_t n = 3;
    std::uint32_t deg = 3;
    std::uint32_t layers = 3;
    std::size_t count = 5;
    std::vector<std::string> criteria = {"taylor", "essen", "series"};
    unsigned jobs = 1;  // parallelism across maps, never across criteria
};

// Runs the selected criteria sequentially on each generated map. With all
// three criteria selected the per-map run is a full cross-check, including
// the agreement test. Rows come back in deterministic (map, criterion)
// order regardless of the job count.
std::vector<BenchRow> run_bench(const BenchParams& params);

// Same measurement for an externally supplied map list.
std::vector<BenchRow> bench_maps(const std::vector<PolyMap>& maps,
                                 const std::vector<std::string>& criteria, unsigned jobs,
                                 const std::string& id_prefix = "m");

// Header 'map_id,n,deg,criterion,verdict,ms,iters,peak_terms'; the
// provenance comment documents the generated-corpus parameters. Only the
// ms column varies between runs with identical inputs.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows,
               const std::string& provenance_comment);

}  // namespace keller
