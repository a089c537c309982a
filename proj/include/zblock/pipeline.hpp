#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zblock/blocks.hpp"
#include "zblock/bounds.hpp"

namespace zblock {

struct RunConfig {
    uint64_t seed = 12345;
    int degree_cap = kMaxFieldDegree;
    int max_order = kMaxGroupOrder;
    bool extended = false;
    std::vector<std::string> families;  // empty = every default family
    std::vector<int64_t> primes;        // empty = all primes dividing |G|
    std::vector<std::string> groups;    // explicit specs; overrides the family sweep
    bool assume_controlled_all = false;
    std::vector<std::pair<std::string, int>> assume_controlled;  // (spec, block), -1 = all
    int lemma7_max_group_order = 200;
    int jobs = 1;
    bool group_algebra_ll = false;
    int stop_after_tasks = -1;  // corpus interruption point (testing / resume)

    bool controlled_for(const std::string& spec, int block) const;
};

/// One (G, p) work item of a corpus sweep.
struct TaskKey {
    std::string spec;
    int64_t p = 2;
};

/// Deterministic content hash of (config, task); resume skips matches.
std::string task_hash(const RunConfig& cfg, const std::string& spec, int64_t p);

/// Default corpus: the family sweep filtered by config. Deterministic order.
std::vector<TaskKey> default_corpus(const RunConfig& cfg);

/// Full analysis document for one group at one prime (the `analyze` payload).
/// Field-degree cap produces a structured skip document instead of an error.
nlohmann::json analyze_group(const std::string& spec, int64_t p, const RunConfig& cfg);

/// All verdicts for one analyzed block: the pure bound checks plus the
/// lemma-based containment and subsection checks.
std::vector<BoundVerdict> block_verdicts(CenterAnalysis& an, const Block& B,
                                         const std::vector<Subsection>& subs,
                                         const RunConfig& cfg, bool assume_controlled);

nlohmann::json verdict_to_json(const BoundVerdict& v);

struct CorpusResult {
    int tasks = 0;
    int blocks = 0;
    int skipped = 0;
    int theorem_failures = 0;
    int invariant_failures = 0;
    int conjecture_counterexamples = 0;
    nlohmann::json summary;

    bool ok() const { return theorem_failures == 0 && invariant_failures == 0; }
};

/// Sweeps the corpus, appending one JSON line per block plus a done-marker
/// line per task to `out_path` (resumable via content hashes), and writes a
/// summary JSON to `summary_path`. Output bytes are deterministic for a
/// given config, independent of the worker count. Empty paths disable the
/// corresponding file.
CorpusResult run_corpus(const RunConfig& cfg, const std::string& out_path,
                        const std::string& summary_path, bool resume,
                        const std::string& csv_path = "");

/// Conjecture hunt: margins of the closing bound over all non-abelian-defect
/// blocks, sorted ascending; non-positive margins are counterexample entries.
/// Reads block records from `corpus_jsonl` when given, else runs the sweep.
nlohmann::json conjecture_report(const RunConfig& cfg, const std::string& corpus_jsonl = "");

}  // namespace zblock
