#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "zblock/bounds.hpp"
#include "zblock/pipeline.hpp"

namespace {

std::pair<std::string, int> parse_controlled(const std::string& s) {
    // "SPEC" or "SPEC:IDX"; specs may themselves contain ':' (C7:C3(2)),
    // so only split when the tail after the last ':' is a bare integer
    size_t pos = s.rfind(':');
    if (pos != std::string::npos && pos + 1 < s.size()) {
        std::string tail = s.substr(pos + 1);
        if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
            return {s.substr(0, pos), std::stoi(tail)};
    }
    return {s, -1};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t c = s.find(',', pos);
        if (c == std::string::npos) c = s.size();
        if (c > pos) out.push_back(s.substr(pos, c - pos));
        pos = c + 1;
        if (c == s.size()) break;
    }
    return out;
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << std::endl;
    } else {
        std::ofstream f(out_path, std::ios::trunc);
        f << doc.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zblock: block decompositions of modular group algebras, Loewy lengths of "
                 "block centers, and defect-group bound checks"};
    app.require_subcommand(1);

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "analyze all blocks of FG for one group");
    std::string a_group, a_out;
    int64_t a_prime = 0;
    zblock::RunConfig a_cfg;
    analyze->add_option("--group", a_group, "group descriptor, e.g. S4, D8, W(4,3), C7:C3(2)")
        ->required();
    analyze->add_option("--prime", a_prime, "characteristic p")->required();
    analyze->add_option("--seed", a_cfg.seed, "RNG seed recorded in the output");
    analyze->add_option("--out", a_out, "write JSON here instead of stdout");
    analyze->add_option("--lemma7-max-order", a_cfg.lemma7_max_group_order,
                        "group-order cap for the ideal-containment checks");
    bool a_controlled = false, a_gall = false;
    analyze->add_flag("--assume-controlled", a_controlled,
                      "assert the controlled-block hypothesis for all blocks");
    analyze->add_flag("--group-algebra-ll", a_gall,
                      "also compute LL(FD) for each defect group (|D| <= 243)");

    // ---- corpus ----
    auto* corpus = app.add_subcommand("corpus", "sweep the built-in corpus and verify bounds");
    zblock::RunConfig c_cfg;
    std::string c_out = "corpus.jsonl", c_summary = "corpus_summary.json", c_csv;
    std::string c_families, c_primes;
    std::vector<std::string> c_controlled, c_groups;
    bool c_resume = false;
    corpus->add_option("--out", c_out, "JSON-lines output (one line per block)");
    corpus->add_option("--summary", c_summary, "summary JSON path");
    corpus->add_option("--csv", c_csv, "optional CSV summary");
    corpus->add_option("--max-order", c_cfg.max_order, "skip groups larger than this");
    corpus->add_option("--families", c_families,
                       "comma list: abelian,cyclic,dihedral,quaternion,symmetric,"
                       "extraspecial,wfamily,semidirect,products");
    corpus->add_option("--primes", c_primes, "comma list of primes to restrict to");
    corpus->add_option("--group", c_groups, "explicit group spec (repeatable; overrides sweep)");
    corpus->add_option("--seed", c_cfg.seed, "RNG seed recorded in every record");
    corpus->add_option("--jobs", c_cfg.jobs, "worker threads (output bytes are unaffected)");
    corpus->add_option("--assume-controlled", c_controlled,
                       "SPEC or SPEC:BLOCK, repeatable; asserts the controlled hypothesis");
    corpus->add_flag("--resume", c_resume, "skip tasks already present in --out");
    corpus->add_flag("--extended", c_cfg.extended, "raise the family order caps");
    corpus->add_flag("--group-algebra-ll", c_cfg.group_algebra_ll,
                     "record LL(FD) for every defect group (|D| <= 243)");

    // ---- conjecture ----
    auto* conj = app.add_subcommand("conjecture",
                                    "margins of the closing bound over non-abelian defect "
                                    "groups; non-positive margin = counterexample");
    zblock::RunConfig j_cfg;
    std::string j_in, j_out, j_families, j_primes;
    conj->add_option("--in", j_in, "existing corpus JSON-lines to read instead of sweeping");
    conj->add_option("--out", j_out, "findings JSON path (default stdout)");
    conj->add_option("--max-order", j_cfg.max_order, "sweep cap when no --in is given");
    conj->add_option("--families", j_families, "sweep families when no --in is given");
    conj->add_option("--primes", j_primes, "restrict primes");
    conj->add_option("--seed", j_cfg.seed, "RNG seed");
    conj->add_flag("--extended", j_cfg.extended, "raise the family order caps");

    // ---- rho ----
    auto* rhocmd = app.add_subcommand("rho", "evaluate the bound function rho(m, n) at p");
    int64_t r_m = 0, r_n = 0, r_p = 2;
    bool r_table = false;
    rhocmd->add_option("m", r_m, "first argument")->required();
    rhocmd->add_option("n", r_n, "second argument")->required();
    rhocmd->add_option("p", r_p, "prime")->required();
    rhocmd->add_flag("--table", r_table, "print the full table for 0..m x 0..n");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            a_cfg.assume_controlled_all = a_controlled;
            a_cfg.group_algebra_ll = a_gall;
            nlohmann::json doc = zblock::analyze_group(a_group, a_prime, a_cfg);
            emit(doc, a_out);
            if (doc.value("skipped", false)) {
                std::cerr << "warning: skipped: " << doc.value("reason", "") << "\n";
                return 0;
            }
            return doc.value("theorem_failures", 0) == 0 &&
                           doc.value("invariant_failures", 0) == 0
                       ? 0
                       : 1;
        }
        if (*corpus) {
            for (auto& f : split_csv(c_families)) c_cfg.families.push_back(f);
            for (auto& p : split_csv(c_primes)) c_cfg.primes.push_back(std::stoll(p));
            for (auto& g : c_groups) c_cfg.groups.push_back(g);
            for (auto& s : c_controlled) c_cfg.assume_controlled.push_back(parse_controlled(s));
            zblock::CorpusResult res =
                zblock::run_corpus(c_cfg, c_out, c_summary, c_resume, c_csv);
            std::cerr << "corpus: " << res.tasks << " tasks, " << res.blocks << " blocks, "
                      << res.skipped << " skipped, " << res.theorem_failures
                      << " theorem failures, " << res.invariant_failures
                      << " invariant failures, " << res.conjecture_counterexamples
                      << " conjecture counterexamples\n";
            return res.ok() ? 0 : 1;
        }
        if (*conj) {
            for (auto& f : split_csv(j_families)) j_cfg.families.push_back(f);
            for (auto& p : split_csv(j_primes)) j_cfg.primes.push_back(std::stoll(p));
            nlohmann::json rep = zblock::conjecture_report(j_cfg, j_in);
            emit(rep, j_out);
            std::cerr << "conjecture: " << rep["entries"].size() << " non-abelian blocks, "
                      << rep["counterexample_count"] << " counterexamples\n";
            return 0;  // a counterexample is a finding, not an error
        }
        if (*rhocmd) {
            if (r_table) {
                for (int64_t i = 0; i <= r_m; ++i) {
                    for (int64_t j = 0; j <= r_n; ++j)
                        std::cout << (j ? "\t" : "") << zblock::rho(i, j, r_p);
                    std::cout << "\n";
                }
            } else {
                std::cout << zblock::rho(r_m, r_n, r_p) << "\n";
            }
            return 0;
        }
    } catch (const zblock::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
