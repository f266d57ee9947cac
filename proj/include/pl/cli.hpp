#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pl::cli {

// Executes an ops script: a `family lines|parabolas` line followed by
// `insert <id> <p1> <p2>` | `delete <id>` | `query <x>` | `dump` |
// `validate`. `query` prints the envelope id at x, `dump` the envelope
// segment list. Returns 0 on success, 2 on parse errors, 1 on structural
// errors; messages name the offending line.
int run_script(std::istream& in, std::ostream& out, std::ostream& err);
int run_file(const std::string& path, std::ostream& out, std::ostream& err);

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 1000;
    std::size_t max_n = 128;
};

struct FuzzFailure {
    std::size_t case_index = 0;
    std::size_t step = 0;
    std::string message;
};

// Randomized insert/delete sequences for both families, checking after every
// operation: envelope equals the brute-force oracle exactly, storage stays
// linear, all structural invariants hold, and ray shooting matches the
// argmin at random points and at every breakpoint. Deterministic per seed;
// returns the first violation, if any.
std::optional<FuzzFailure> fuzz(const FuzzOptions& opt);
int fuzz_main(const FuzzOptions& opt, std::ostream& out, std::ostream& err);

struct BenchRow {
    std::size_t n = 0;
    std::string op;  // insert | delete | query | merge
    double mean_classify = 0;    // for query: mean locate steps
    double mean_split_join = 0;
    double mean_wall_ns = 0;
};

// Operation-count benchmark; counts, not wall time, are the complexity
// evidence. The query row reports mean locate steps in the mean_classify
// column (queries call no other primitive).
std::vector<BenchRow> bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                            std::uint64_t seed = 7);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Runs the script and renders the resulting envelope as a deterministic SVG
// over a bounding box of all breakpoints plus margin 1.
int plot_file(const std::string& script_path, const std::string& out_svg, std::ostream& err);

// Reads two pseudo-line set files (`family ...` line, then `<id> <p1> <p2>`
// per line), intersects their envelopes, and writes the per-iteration trace
// as TSV (Step, u, v, uStack, vStack, Case). Optionally also renders both
// envelopes with the visited points as SVG.
int trace_files(const std::string& left_path, const std::string& right_path,
                const std::string& out_tsv, const std::string& svg_path, std::ostream& err);

}  // namespace pl::cli
