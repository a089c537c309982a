#include "zblock/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace zblock {

using nlohmann::json;

bool RunConfig::controlled_for(const std::string& spec, int block) const {
    if (assume_controlled_all) return true;
    for (auto& [s, b] : assume_controlled)
        if (s == spec && (b < 0 || b == block)) return true;
    return false;
}

namespace {

uint64_t fnv1a_str(const std::string& s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::vector<int64_t> prime_divisors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, maxpart); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::string abelian_spec(int64_t p, const std::vector<int>& type) {
    if (type.size() == 1) return "C" + std::to_string(ipow_checked(p, type[0]));
    std::string s = "Ab[";
    for (size_t i = 0; i < type.size(); ++i)
        s += (i ? "," : "") + std::to_string(ipow_checked(p, type[i]));
    return s + "]";
}

}  // namespace

std::string task_hash(const RunConfig& cfg, const std::string& spec, int64_t p) {
    std::string key = "zblock.task/1|seed=" + std::to_string(cfg.seed) +
                      "|cap=" + std::to_string(cfg.degree_cap) +
                      "|l7=" + std::to_string(cfg.lemma7_max_group_order) +
                      "|gall=" + std::to_string(cfg.group_algebra_ll ? 1 : 0) +
                      "|ctl=" + std::to_string(cfg.assume_controlled_all ? 1 : 0);
    for (auto& [s, b] : cfg.assume_controlled)
        if (s == spec) key += "|ctlb=" + std::to_string(b);
    key += "|" + spec + "|p=" + std::to_string(p);
    return hex64(fnv1a_str(key));
}

std::vector<TaskKey> default_corpus(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> specs;  // (family, spec)
    auto add = [&specs](const std::string& fam, const std::string& spec) {
        specs.emplace_back(fam, spec);
    };

    // abelian p-groups
    for (int64_t p : {int64_t{2}, int64_t{3}}) {
        int64_t cap = cfg.extended ? (p == 2 ? 256 : 243) : (p == 2 ? 128 : 81);
        for (int e = 1; ipow_checked(p, e) <= cap; ++e)
            for (auto& type : partitions(e)) add("abelian", abelian_spec(p, type));
    }
    // mixed cyclic and abelian
    for (int n : {6, 10, 12, 15, 18, 20, 24, 30, 36, 40, 60}) add("cyclic", "C" + std::to_string(n));
    add("cyclic", "Ab[6,2]");
    add("cyclic", "Ab[10,2]");
    add("cyclic", "Ab[12,6]");
    // dihedral / quaternion
    {
        int cap = cfg.extended ? 128 : 64;
        for (int o = 6; o <= cap; o += 2) add("dihedral", "D" + std::to_string(o));
        for (int o = 8; o <= cap; o *= 2) add("quaternion", "Q" + std::to_string(o));
    }
    // symmetric / alternating
    for (int n = 3; n <= 6; ++n) add("symmetric", "S" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) add("symmetric", "A" + std::to_string(n));
    // extraspecial and the W family
    add("extraspecial", "ES+(3)");
    add("extraspecial", "ES+(5)");
    add("extraspecial", "ES+(7)");
    add("wfamily", "W(4,2)");
    add("wfamily", "W(5,2)");
    add("wfamily", "W(6,2)");
    add("wfamily", "W(4,3)");
    add("wfamily", "W(5,3)");
    if (cfg.extended) add("wfamily", "W(7,2)");
    // semidirect / metacyclic
    for (const char* s : {"C9:C3(4)", "C27:C3(10)", "C7:C3(2)", "C7:C6(3)", "C5:C4(2)",
                          "C5:C4(4)", "C13:C3(3)", "C11:C5(3)", "C3:C4(2)", "C5:C8(2)",
                          "C9:C6(2)"})
        add("semidirect", s);
    // direct products
    for (const char* s : {"D8*C2", "Q8*C3", "S3*C3", "S3*S3", "A4*C2", "D10*C5", "D8*C4",
                          "S4*C2"})
        add("products", s);

    std::vector<TaskKey> tasks;
    std::set<std::string> seen;
    for (auto& [fam, spec] : specs) {
        if (!cfg.families.empty() &&
            std::find(cfg.families.begin(), cfg.families.end(), fam) == cfg.families.end())
            continue;
        if (!seen.insert(spec).second) continue;
        FiniteGroup G;
        try {
            G = group_build(spec);
        } catch (const Error&) {
            continue;
        }
        if (G.size() > cfg.max_order) continue;
        for (int64_t p : prime_divisors(G.size())) {
            if (!cfg.primes.empty() &&
                std::find(cfg.primes.begin(), cfg.primes.end(), p) == cfg.primes.end())
                continue;
            tasks.push_back(TaskKey{spec, p});
        }
    }
    if (!cfg.groups.empty()) {
        tasks.clear();
        for (auto& spec : cfg.groups) {
            FiniteGroup G = group_build(spec);
            std::vector<int64_t> ps = cfg.primes;
            if (ps.empty()) ps = prime_divisors(G.size());
            for (int64_t p : ps) tasks.push_back(TaskKey{spec, p});
        }
    }
    return tasks;
}

namespace {

json rhs_json(const BoundVerdict& v) {
    if (v.rhs_den == 1) return v.rhs_num;
    return std::to_string(v.rhs_num) + "/" + std::to_string(v.rhs_den);
}

}  // namespace

json verdict_to_json(const BoundVerdict& v) {
    json j;
    j["check"] = v.check;
    j["applicable"] = v.applicable;
    j["lhs"] = v.lhs;
    j["rhs"] = rhs_json(v);
    j["strict"] = v.strict;
    j["satisfied"] = v.satisfied;
    j["classification"] =
        v.classification == BoundVerdict::Kind::theorem ? "theorem" : "conjecture";
    j["hypothesis_note"] = v.hypothesis_note;
    return j;
}

std::vector<BoundVerdict> block_verdicts(CenterAnalysis& an, const Block& B,
                                         const std::vector<Subsection>& subs,
                                         const RunConfig& cfg, bool assume_controlled) {
    using Kind = BoundVerdict::Kind;
    const GroupAlgebraCenter& Z = an.Z;
    const FiniteGroup& G = *Z.G;
    const int64_t p = Z.p;

    BlockFacts f;
    f.p = p;
    f.d = B.defect;
    f.e = B.e_log;
    f.ll_zb = B.ll_zb();
    f.ll_zb_mod_rb = B.ll_zb_mod_rb;
    f.dim_zb = B.dim_zb;
    f.d_abelian = B.d_abelian;
    f.d_cyclic = B.d_cyclic;
    f.d_metacyclic = B.d_metacyclic;
    f.d_is_w = B.d_is_w;
    f.d_is_es_plus = B.d_is_es_plus;
    f.d_abelian_type = B.d_abelian_type;
    f.group_is_defect_group = (B.defect_group.order() == G.size());
    f.assume_controlled = assume_controlled;
    f.kulshammer_exponent = B.kulshammer_exponent;
    std::vector<BoundVerdict> out = check_block(f);

    // Lemma 6 (1): LL(ZB/RB) <= max LL(Zb/Rb) over subsections with o(u) = p
    {
        int rhs = 0;
        bool have = false;
        for (auto& s : subs)
            if (s.u_order == p) {
                have = true;
                rhs = std::max(rhs, s.ll_zb_mod_rb);
            }
        out.push_back(make_verdict("lemma6_1_reynolds_quotient", B.defect >= 1 && have,
                                   B.ll_zb_mod_rb, rhs, 1, false, Kind::theorem,
                                   "max over subsections with o(u) = p"));
    }
    // Lemma 6 (2): LL(Zb) <= o(u) * LL(Zbbar), one verdict per subsection
    for (size_t i = 0; i < subs.size(); ++i) {
        const Subsection& s = subs[i];
        out.push_back(make_verdict(
            "lemma6_2_subsection_bound", true, s.ll_zb,
            static_cast<int64_t>(s.u_order) * s.ll_zbbar, 1, false, Kind::theorem,
            "subsection #" + std::to_string(i) + ", o(u) = " + std::to_string(s.u_order)));
    }
    // Lemma 3: J(ZB)^M inside Z_{<=Z(D)}(B); vacuous for abelian D, gated on
    // the user-asserted controlled hypothesis otherwise
    {
        int nonmajor = 0, M = 0;
        for (auto& s : subs)
            if (!s.major) {
                ++nonmajor;
                M = std::max(M, s.ll_zb);
            }
        if (B.d_abelian) {
            out.push_back(make_verdict("lemma3_controlled_containment", true, nonmajor, 0, 1,
                                       false, Kind::theorem,
                                       "vacuous: D abelian, every subsection is major"));
        } else if (assume_controlled && nonmajor > 0) {
            Subgroup ZD;
            for (int z : B.defect_group.elems) {
                bool ok = true;
                for (int d2 : B.defect_group.elems)
                    if (G.mul(z, d2) != G.mul(d2, z)) {
                        ok = false;
                        break;
                    }
                if (ok) ZD.elems.push_back(z);
            }
            RowBasis JM = radical_power(Z, B, M);
            RowBasis target = z_leq_ideal(an, B, ZD);
            int64_t before = static_cast<int64_t>(target.dim());
            for (size_t r = 0; r < JM.dim(); ++r) target.insert(JM.row(r));
            int64_t excess = static_cast<int64_t>(target.dim()) - before;
            out.push_back(make_verdict("lemma3_controlled_containment", true, excess, 0, 1,
                                       false, Kind::theorem,
                                       "hypothesis user-asserted: controlled, M = " +
                                           std::to_string(M)));
        } else {
            out.push_back(make_verdict("lemma3_controlled_containment", false, 0, 0, 1, false,
                                       Kind::theorem,
                                       "needs --assume-controlled (fusion not decidable here)"));
        }
    }
    // Lemma 7: Z_{<=P}(B) * J(ZB)^{LL(FP)} inside Z_{<P}(B) for P <= Z(D)
    if (!B.d_abelian && B.defect >= 1 && G.size() <= cfg.lemma7_max_group_order) {
        Subgroup ZD;
        for (int z : B.defect_group.elems) {
            bool ok = true;
            for (int d2 : B.defect_group.elems)
                if (G.mul(z, d2) != G.mul(d2, z)) {
                    ok = false;
                    break;
                }
            if (ok) ZD.elems.push_back(z);
        }
        std::vector<Subgroup> ps = all_subgroups(G, ZD);
        std::sort(ps.begin(), ps.end(), [](const Subgroup& a, const Subgroup& b) {
            if (a.order() != b.order()) return a.order() < b.order();
            return a.elems < b.elems;
        });
        for (size_t pi = 0; pi < ps.size(); ++pi) {
            const Subgroup& P = ps[pi];
            int64_t L = ll_abelian_formula(abelian_type(G, P, p), p).value;
            RowBasis JL = radical_power(Z, B, static_cast<int>(L));
            RowBasis zleq = z_leq_ideal(an, B, P);
            RowBasis zlt = z_lt_ideal(an, B, P);
            IdealBasis prod = ideal_product(Z.Z, zleq, JL);
            int64_t before = static_cast<int64_t>(zlt.dim());
            for (size_t r = 0; r < prod.rows.dim(); ++r) zlt.insert(prod.rows.row(r));
            int64_t excess = static_cast<int64_t>(zlt.dim()) - before;
            out.push_back(make_verdict(
                "lemma7_ideal_containment", true, excess, 0, 1, false, Kind::theorem,
                "P #" + std::to_string(pi) + " <= Z(D), |P| = " + std::to_string(P.order()) +
                    ", LL(FP) = " + std::to_string(L)));
        }
    }
    return out;
}

namespace {

struct TaskResult {
    TaskKey key;
    std::vector<std::string> lines;
    bool skipped = false;
    std::string skip_reason;
    bool errored = false;
    std::string error;
    int blocks = 0;
    int theorem_failures = 0;
    int invariant_failures = 0;
    int conjecture_counterexamples = 0;
    std::vector<json> records;  // block records (for in-memory consumers)
    std::vector<std::string> failure_notes;
};

json block_record(const RunConfig& cfg, const std::string& spec, const std::string& hash,
                  CenterAnalysis& an, const Block& B, const std::vector<Subsection>& subs,
                  const std::vector<BoundVerdict>& verdicts, bool assume_controlled) {
    const GroupAlgebraCenter& Z = an.Z;
    json rec;
    rec["schema"] = "zblock.block/1";
    rec["kind"] = "block";
    rec["group"] = spec;
    rec["group_order"] = Z.G->size();
    rec["prime"] = Z.p;
    rec["field_degree"] = Z.F->k();
    rec["splitting_modulus"] = Z.splitting_modulus;
    rec["seed"] = cfg.seed;
    rec["task_hash"] = hash;
    rec["block_index"] = B.index;
    rec["num_blocks"] = static_cast<int>(an.blocks.size());
    rec["principal"] = B.principal;
    rec["defect"] = B.defect;
    rec["exponent_log"] = B.e_log;
    rec["dim_zb"] = B.dim_zb;
    rec["ll_zb"] = B.ll_zb();
    rec["ll_zb_mod_rb"] = B.ll_zb_mod_rb;
    rec["loewy_dims"] = B.loewy.dims;
    rec["kulshammer_exponent"] = B.kulshammer_exponent;
    rec["rho_d_e"] = rho(B.defect, B.e_log, Z.p);
    json dg;
    dg["order"] = B.defect_group.order();
    dg["abelian"] = B.d_abelian;
    dg["cyclic"] = B.d_cyclic;
    dg["metacyclic"] = B.d_metacyclic;
    dg["abelian_type"] = B.d_abelian ? json(B.d_abelian_type) : json(nullptr);
    dg["is_w_family"] = B.d_is_w.has_value() ? json(*B.d_is_w) : json(nullptr);
    dg["is_extraspecial_plus"] = B.d_is_es_plus;
    dg["center_order"] = B.d_center_order;
    rec["defect_group"] = dg;
    rec["assume_controlled"] = assume_controlled;
    int major = 0;
    json sj = json::array();
    for (auto& s : subs) {
        if (s.major) ++major;
        json e;
        e["u_class"] = s.u_class;
        e["u_order"] = s.u_order;
        e["major"] = s.major;
        e["normalized"] = s.normalized;
        e["b_defect"] = s.b_defect;
        e["ll_zb"] = s.ll_zb;
        e["ll_zb_mod_rb"] = s.ll_zb_mod_rb;
        e["ll_zbbar"] = s.ll_zbbar;
        sj.push_back(e);
    }
    rec["num_subsections"] = static_cast<int>(subs.size());
    rec["num_major_subsections"] = major;
    rec["subsections"] = sj;
    if (cfg.group_algebra_ll && B.defect_group.order() <= kMaxGroupAlgebraOrder) {
        SubgroupGroup dgp = subgroup_as_group(*Z.G, B.defect_group);
        rec["group_algebra_ll"] = ll_group_algebra_pgroup(dgp.group, Z.p).length;
    } else {
        rec["group_algebra_ll"] = nullptr;
    }
    json vj = json::array();
    for (auto& v : verdicts) vj.push_back(verdict_to_json(v));
    rec["verdicts"] = vj;
    return rec;
}

TaskResult run_task(const RunConfig& cfg, const std::string& spec,
                    std::shared_ptr<const FiniteGroup> G, const ClassStructure& cs, int64_t p) {
    TaskResult res;
    res.key = TaskKey{spec, p};
    std::string hash = task_hash(cfg, spec, p);
    json marker;
    marker["kind"] = "task";
    marker["group"] = spec;
    marker["prime"] = p;
    marker["task_hash"] = hash;
    try {
        CenterAnalysis an = analyze_center(G, p, cfg.seed, cfg.degree_cap, &cs);
        for (const Block& B : an.blocks) {
            std::vector<Subsection> subs = subsections(an, B);
            bool assume = cfg.controlled_for(spec, B.index);
            std::vector<BoundVerdict> verdicts = block_verdicts(an, B, subs, cfg, assume);
            for (auto& v : verdicts) {
                if (!v.failed()) continue;
                std::string note = spec + " p=" + std::to_string(p) + " block " +
                                   std::to_string(B.index) + ": " + v.check;
                if (v.classification == BoundVerdict::Kind::theorem) {
                    ++res.theorem_failures;
                    res.failure_notes.push_back("THEOREM " + note);
                } else {
                    ++res.conjecture_counterexamples;
                    res.failure_notes.push_back("CONJECTURE " + note);
                }
            }
            json rec = block_record(cfg, spec, hash, an, B, subs, verdicts, assume);
            res.lines.push_back(rec.dump());
            res.records.push_back(std::move(rec));
            ++res.blocks;
        }
        for (auto& fail : verify_center_invariants(an)) {
            ++res.invariant_failures;
            res.failure_notes.push_back("INVARIANT " + fail);
        }
        marker["status"] = "done";
        marker["blocks"] = res.blocks;
    } catch (const CapError& e) {
        res.skipped = true;
        res.skip_reason = e.what();
        marker["status"] = "skipped";
        marker["reason"] = res.skip_reason;
    }
    res.lines.push_back(marker.dump());
    return res;
}

}  // namespace

json analyze_group(const std::string& spec, int64_t p, const RunConfig& cfg) {
    auto G = std::make_shared<const FiniteGroup>(group_build(spec));
    ClassStructure cs = class_structure(*G);
    json doc;
    doc["schema"] = "zblock.analysis/1";
    doc["group"] = spec;
    doc["group_order"] = G->size();
    doc["prime"] = p;
    doc["seed"] = cfg.seed;
    TaskResult res = run_task(cfg, spec, G, cs, p);
    if (res.skipped) {
        doc["skipped"] = true;
        doc["reason"] = res.skip_reason;
        doc["blocks"] = json::array();
        return doc;
    }
    doc["skipped"] = false;
    doc["field_degree"] = res.records.empty() ? nlohmann::json(1) : res.records[0]["field_degree"];
    doc["num_blocks"] = static_cast<int>(res.records.size());
    doc["blocks"] = res.records;
    doc["theorem_failures"] = res.theorem_failures;
    doc["invariant_failures"] = res.invariant_failures;
    json notes = json::array();
    for (auto& n : res.failure_notes) notes.push_back(n);
    doc["failure_notes"] = notes;
    return doc;
}

namespace {

struct ResumeData {
    std::map<std::string, std::vector<std::string>> lines_by_hash;  // complete tasks only
};

ResumeData parse_resume(const std::string& path) {
    ResumeData rd;
    std::ifstream in(path);
    if (!in) return rd;
    std::string line;
    std::vector<std::string> buffer;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (...) {
            break;  // truncated tail; everything from here is incomplete
        }
        buffer.push_back(line);
        if (j.value("kind", "") == "task") {
            std::string status = j.value("status", "");
            if (status == "done" || status == "skipped")
                rd.lines_by_hash[j.value("task_hash", "")] = buffer;
            buffer.clear();
        }
    }
    return rd;
}

}  // namespace

CorpusResult run_corpus(const RunConfig& cfg, const std::string& out_path,
                        const std::string& summary_path, bool resume,
                        const std::string& csv_path) {
    std::vector<TaskKey> tasks = default_corpus(cfg);
    int limit = cfg.stop_after_tasks >= 0
                    ? std::min<int>(cfg.stop_after_tasks, static_cast<int>(tasks.size()))
                    : static_cast<int>(tasks.size());

    ResumeData rd;
    if (resume && !out_path.empty()) rd = parse_resume(out_path);

    // group-level jobs: consecutive tasks sharing a spec reuse the built
    // group and its integer class structure
    struct Job {
        std::string spec;
        std::vector<int> task_idx;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < limit; ++i) {
        if (jobs.empty() || jobs.back().spec != tasks[i].spec)
            jobs.push_back(Job{tasks[i].spec, {}});
        jobs.back().task_idx.push_back(i);
    }

    std::vector<std::unique_ptr<TaskResult>> results(tasks.size());
    std::vector<bool> from_resume(tasks.size(), false);
    for (int i = 0; i < limit; ++i) {
        auto it = rd.lines_by_hash.find(task_hash(cfg, tasks[i].spec, tasks[i].p));
        if (it != rd.lines_by_hash.end()) {
            auto r = std::make_unique<TaskResult>();
            r->key = tasks[i];
            r->lines = it->second;
            from_resume[i] = true;
            // counts for resumed tasks are reconstructed from the records
            for (size_t li = 0; li + 1 < r->lines.size(); ++li) {
                json rec = json::parse(r->lines[li]);
                if (rec.value("kind", "") != "block") continue;
                ++r->blocks;
                r->records.push_back(rec);
                for (auto& v : rec["verdicts"]) {
                    if (!v["applicable"].get<bool>() || v["satisfied"].get<bool>()) continue;
                    if (v["classification"] == "theorem")
                        ++r->theorem_failures;
                    else
                        ++r->conjecture_counterexamples;
                }
            }
            json marker = json::parse(r->lines.back());
            if (marker.value("status", "") == "skipped") {
                r->skipped = true;
                r->skip_reason = marker.value("reason", "");
            }
            results[i] = std::move(r);
        }
    }

    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next_job{0};
    int nworkers = std::max(1, cfg.jobs);
    auto worker = [&]() {
        while (true) {
            size_t ji = next_job.fetch_add(1);
            if (ji >= jobs.size()) return;
            const Job& job = jobs[ji];
            std::shared_ptr<const FiniteGroup> G;
            ClassStructure cs;
            bool built = false;
            for (int ti : job.task_idx) {
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (results[ti]) continue;  // resumed
                }
                auto r = std::make_unique<TaskResult>();
                try {
                    if (!built) {
                        G = std::make_shared<const FiniteGroup>(group_build(job.spec));
                        cs = class_structure(*G);
                        built = true;
                    }
                    *r = run_task(cfg, job.spec, G, cs, tasks[ti].p);
                } catch (const std::exception& e) {
                    r->key = tasks[ti];
                    r->errored = true;
                    r->error = e.what();
                    json marker;
                    marker["kind"] = "task";
                    marker["group"] = job.spec;
                    marker["prime"] = tasks[ti].p;
                    marker["task_hash"] = task_hash(cfg, job.spec, tasks[ti].p);
                    marker["status"] = "error";
                    marker["reason"] = r->error;
                    r->lines.push_back(marker.dump());
                }
                {
                    std::lock_guard<std::mutex> lk(mu);
                    results[ti] = std::move(r);
                }
                cv.notify_all();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);

    // ordered writer
    std::ofstream out;
    if (!out_path.empty()) out.open(out_path, std::ios::trunc);
    CorpusResult cr;
    json per_check = json::object();
    json failures = json::array(), counterex = json::array(), skipped = json::array(),
         invariants = json::array(), errors = json::array();
    std::vector<json> all_records;
    for (int i = 0; i < limit; ++i) {
        std::unique_ptr<TaskResult> r;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return results[i] != nullptr; });
            r = std::move(results[i]);
        }
        for (auto& line : r->lines)
            if (out.is_open()) out << line << "\n";
        if (out.is_open()) out.flush();
        ++cr.tasks;
        cr.blocks += r->blocks;
        cr.theorem_failures += r->theorem_failures;
        cr.invariant_failures += r->invariant_failures;
        cr.conjecture_counterexamples += r->conjecture_counterexamples;
        if (r->skipped) {
            ++cr.skipped;
            json s;
            s["group"] = r->key.spec;
            s["prime"] = r->key.p;
            s["reason"] = r->skip_reason;
            skipped.push_back(s);
        }
        if (r->errored) {
            ++cr.invariant_failures;
            json s;
            s["group"] = r->key.spec;
            s["prime"] = r->key.p;
            s["error"] = r->error;
            errors.push_back(s);
        }
        for (auto& note : r->failure_notes) {
            if (note.rfind("THEOREM", 0) == 0)
                failures.push_back(note);
            else if (note.rfind("CONJECTURE", 0) == 0)
                counterex.push_back(note);
            else
                invariants.push_back(note);
        }
        for (auto& rec : r->records) {
            for (auto& v : rec["verdicts"]) {
                std::string name = v["check"];
                if (!per_check.contains(name)) {
                    per_check[name] = json::object();
                    per_check[name]["applicable"] = 0;
                    per_check[name]["failed"] = 0;
                }
                if (v["applicable"].get<bool>()) {
                    per_check[name]["applicable"] = per_check[name]["applicable"].get<int>() + 1;
                    if (!v["satisfied"].get<bool>())
                        per_check[name]["failed"] = per_check[name]["failed"].get<int>() + 1;
                }
            }
            all_records.push_back(std::move(rec));
        }
    }
    for (auto& t : pool) t.join();

    json summary;
    summary["schema"] = "zblock.corpus-summary/1";
    json cfgj;
    cfgj["seed"] = cfg.seed;
    cfgj["extended"] = cfg.extended;
    cfgj["max_order"] = cfg.max_order;
    cfgj["families"] = cfg.families;
    cfgj["primes"] = cfg.primes;
    cfgj["lemma7_max_group_order"] = cfg.lemma7_max_group_order;
    cfgj["group_algebra_ll"] = cfg.group_algebra_ll;
    summary["config"] = cfgj;
    summary["tasks"] = cr.tasks;
    summary["blocks"] = cr.blocks;
    summary["skipped"] = skipped;
    summary["errors"] = errors;
    summary["per_check"] = per_check;
    summary["theorem_failures"] = failures;
    summary["conjecture_counterexamples"] = counterex;
    summary["invariant_failures"] = invariants;
    summary["theorem_failure_count"] = cr.theorem_failures;
    summary["invariant_failure_count"] = cr.invariant_failures;
    cr.summary = summary;
    if (!summary_path.empty() && cfg.stop_after_tasks < 0) {
        std::ofstream s(summary_path, std::ios::trunc);
        s << summary.dump(2) << "\n";
    }
    if (!csv_path.empty() && cfg.stop_after_tasks < 0) {
        std::ofstream c(csv_path, std::ios::trunc);
        c << "group,prime,field_degree,block,principal,defect,exponent_log,dim_zb,ll_zb,"
             "ll_zb_mod_rb,d_abelian,d_metacyclic,rho_d_e\n";
        for (auto& rec : all_records) {
            c << rec["group"].get<std::string>() << "," << rec["prime"] << ","
              << rec["field_degree"] << "," << rec["block_index"] << ","
              << (rec["principal"].get<bool>() ? 1 : 0) << "," << rec["defect"] << ","
              << rec["exponent_log"] << "," << rec["dim_zb"] << "," << rec["ll_zb"] << ","
              << rec["ll_zb_mod_rb"] << ","
              << (rec["defect_group"]["abelian"].get<bool>() ? 1 : 0) << ","
              << (rec["defect_group"]["metacyclic"].get<bool>() ? 1 : 0) << ","
              << rec["rho_d_e"] << "\n";
        }
    }
    return cr;
}

json conjecture_report(const RunConfig& cfg, const std::string& corpus_jsonl) {
    std::vector<json> records;
    if (!corpus_jsonl.empty()) {
        std::ifstream in(corpus_jsonl);
        if (!in) throw InputError("conjecture_report: cannot read " + corpus_jsonl);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j;
            try {
                j = json::parse(line);
            } catch (...) {
                continue;
            }
            if (j.value("kind", "") == "block") records.push_back(std::move(j));
        }
    } else {
        std::vector<TaskKey> tasks = default_corpus(cfg);
        std::string prev_spec;
        std::shared_ptr<const FiniteGroup> G;
        ClassStructure cs;
        for (auto& t : tasks) {
            if (t.spec != prev_spec) {
                G = std::make_shared<const FiniteGroup>(group_build(t.spec));
                cs = class_structure(*G);
                prev_spec = t.spec;
            }
            TaskResult r = run_task(cfg, t.spec, G, cs, t.p);
            for (auto& rec : r.records) records.push_back(std::move(rec));
        }
    }
    struct Entry {
        int64_t margin;
        json j;
    };
    std::vector<Entry> entries;
    int excluded = 0;
    for (auto& rec : records) {
        if (rec["defect_group"]["abelian"].get<bool>()) {
            ++excluded;
            continue;
        }
        for (auto& v : rec["verdicts"]) {
            if (v["check"] != "conjecture_nonabelian_strict") continue;
            int64_t lhs = v["lhs"].get<int64_t>();
            int64_t rhs = v["rhs"].get<int64_t>();
            json e;
            e["group"] = rec["group"];
            e["prime"] = rec["prime"];
            e["block_index"] = rec["block_index"];
            e["defect"] = rec["defect"];
            e["exponent_log"] = rec["exponent_log"];
            e["ll_zb"] = lhs;
            e["bound"] = rhs;
            e["margin"] = rhs - lhs;
            e["counterexample"] = (rhs - lhs <= 0);
            e["reproduce"] = "zblock analyze --group '" + rec["group"].get<std::string>() +
                             "' --prime " + rec["prime"].dump() + " --seed " +
                             std::to_string(cfg.seed);
            entries.push_back(Entry{rhs - lhs, std::move(e)});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.margin != b.margin) return a.margin < b.margin;
        auto ka = std::make_tuple(a.j["group"].get<std::string>(), a.j["prime"].get<int64_t>(),
                                  a.j["block_index"].get<int>());
        auto kb = std::make_tuple(b.j["group"].get<std::string>(), b.j["prime"].get<int64_t>(),
                                  b.j["block_index"].get<int>());
        return ka < kb;
    });
    json rep;
    rep["schema"] = "zblock.conjecture/1";
    rep["seed"] = cfg.seed;
    rep["excluded_abelian_blocks"] = excluded;
    json ej = json::array(), cj = json::array();
    for (auto& e : entries) {
        if (e.margin <= 0) cj.push_back(e.j);
        ej.push_back(e.j);
    }
    rep["entries"] = ej;
    rep["counterexamples"] = cj;
    rep["counterexample_count"] = static_cast<int>(cj.size());
    return rep;
}

}  // namespace zblock
