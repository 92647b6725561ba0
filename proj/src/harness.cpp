#include "hyperforge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

namespace hyperforge {

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::vector<const IdentityEntry*> select_entries(const RunConfig& cfg) {
    std::set<std::string> ids(cfg.identities.begin(), cfg.identities.end());
    std::set<std::string> cases(cfg.cases.begin(), cfg.cases.end());
    for (const auto& id : ids) identity(id);  // throws on unknown ids
    std::vector<const IdentityEntry*> out;
    for (const auto& e : catalog_identities()) {
        bool by_id = ids.count(e.id) > 0, by_case = cases.count(e.case_label) > 0;
        if ((ids.empty() && cases.empty()) || by_id || by_case) out.push_back(&e);
    }
    return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a, stable across builds unlike std::hash
std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void fill(CheckRecord& c, const IdentityCheck& r) {
    c.lhs = r.lhs;
    c.rhs = r.rhs;
    c.discrepancy = r.rel_discrepancy;
    c.exact = r.exact;
    c.terms = r.terms_used;
    c.status = r.passed ? Status::Pass : Status::Fail;
    if (!r.passed) c.reason = r.exact ? "sides differ exactly" : "relative discrepancy above 10^(16-P)";
}

// One (entry, sample) job; results land in a fixed slot so order is stable.
struct Unit {
    size_t entry;
    long index;
    std::function<CheckRecord()> run;
};

void run_units(std::vector<Unit>& units, std::vector<std::vector<CheckRecord>>& slots, int threads) {
    std::vector<CheckRecord> results(units.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < units.size();) {
            auto t0 = Clock::now();
            try {
                results[i] = units[i].run();
            } catch (const std::exception& err) {
                results[i].status = Status::Fail;
                results[i].reason = err.what();
            }
            results[i].elapsed_ms = ms_since(t0);
        }
    };
    unsigned n = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, std::max<size_t>(1, units.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < units.size(); ++i) slots[units[i].entry].push_back(std::move(results[i]));
}

void summarize(VerificationReport& r) {
    ReportSummary s;
    for (const auto& e : r.entries)
        for (const auto& c : e.checks) {
            if (c.status == Status::Pass) ++s.pass;
            else if (c.status == Status::Fail) ++s.fail;
            else ++s.skipped;
            if (c.discrepancy && !c.exact && (!s.worst || *c.discrepancy > *s.worst)) s.worst = c.discrepancy;
        }
    for (const auto& a : r.adjudications)
        if (a.checks == 0 || a.corrected_failures > 0) ++s.fail;
    r.summary = s;
}

VerificationReport start(const char* command, const RunConfig& cfg, const std::vector<const IdentityEntry*>& sel) {
    VerificationReport r;
    r.command = command;
    r.config = cfg;
    for (const auto* e : sel) r.entries.push_back({e->id, e->anchor, {}});
    return r;
}

CheckRecord skipped(const std::string& kind, const std::string& reason) {
    CheckRecord c;
    c.kind = kind;
    c.status = Status::Skipped;
    c.reason = reason;
    return c;
}

}  // namespace

std::uint64_t unit_seed(std::uint64_t seed, const std::string& id, long index) {
    return splitmix(splitmix(seed ^ fnv(id)) + std::uint64_t(index));
}

VerificationReport run_verify(const RunConfig& cfg) {
    auto sel = select_entries(cfg);
    VerificationReport r = start("verify", cfg, sel);
    set_working_precision(cfg.precision);
    bool exact = cfg.mode == "exact" || cfg.mode == "both";
    bool numeric = cfg.mode == "numeric" || cfg.mode == "both";
    if (!exact && !numeric) fail(ErrorKind::Unsupported, "mode must be exact, numeric or both");

    std::vector<Unit> units;
    std::vector<std::vector<CheckRecord>> slots(sel.size());
    for (size_t i = 0; i < sel.size(); ++i) {
        const IdentityEntry& e = *sel[i];
        for (long s = 0; exact && s < cfg.samples; ++s)
            units.push_back({i, s, [&e, &cfg, s] {
                                 Sampler g(unit_seed(cfg.seed, e.id, s));
                                 auto p = draw_admissible(e, g);
                                 if (!p) return skipped("exact", "no admissible draw in 400 attempts");
                                 CheckRecord c;
                                 c.kind = "exact";
                                 c.params = p->fields();
                                 fill(c, verify_identity(e, *p, VerifyMode::Exact, cfg.precision, cfg.budget));
                                 return c;
                             }});
        if (!numeric || cfg.samples == 0) continue;
        if (e.numeric.empty()) {
            slots[i].push_back(skipped("numeric", "no numeric extension"));
            continue;
        }
        for (size_t w = 0; w < e.numeric.size(); ++w)
            for (long s = 0; s < cfg.samples; ++s)
                units.push_back({i, s, [&e, &cfg, w, s] {
                                     Sampler g(unit_seed(cfg.seed, e.id + "#" + std::to_string(w), s));
                                     auto p = draw_numeric(e, w, g);
                                     CheckRecord c = skipped("numeric", "no admissible draw in 400 attempts");
                                     c.extension = e.numeric[w].note;
                                     if (!p) return c;
                                     c.params = p->fields();
                                     try {
                                         fill(c, verify_numeric_extension(e, w, *p, cfg.precision, cfg.budget));
                                     } catch (const MathError& err) {
                                         c.status = Status::Fail;
                                         c.reason = std::string(to_string(err.kind())) + ": " + err.what();
                                     }
                                     return c;
                                 }});
    }
    run_units(units, slots, cfg.threads);
    for (size_t i = 0; i < sel.size(); ++i) r.entries[i].checks = std::move(slots[i]);
    if (cfg.samples > 0) {
        std::set<std::string> chosen;
        for (const auto* e : sel) chosen.insert(e->id);
        for (auto& a : adjudicate_all(cfg.samples, cfg.seed))
            if (a.entry == "rakha_rathie" || chosen.count(a.entry)) r.adjudications.push_back(std::move(a));
    }
    summarize(r);
    return r;
}

VerificationReport run_derive(const RunConfig& cfg) {
    auto sel = select_entries(cfg);
    VerificationReport r = start("derive", cfg, sel);
    set_working_precision(cfg.precision);
    std::vector<Unit> units;
    std::vector<std::vector<CheckRecord>> slots(sel.size());
    for (size_t i = 0; i < sel.size(); ++i) {
        const IdentityEntry& e = *sel[i];
        if (!e.derivation) {
            slots[i].push_back(skipped("derive", "no derivation metadata: " + e.no_derivation));
            continue;
        }
        for (long s = 0; s < cfg.samples; ++s)
            units.push_back({i, s, [&e, &cfg, s] {
                                 Sampler g(unit_seed(cfg.seed, e.id, s));
                                 CheckRecord c = skipped("derive", "no admissible draw in 400 attempts");
                                 // a pole of the rule's closed form at some k makes the draw unusable
                                 for (int attempt = 0; attempt < 8; ++attempt) {
                                     auto p = draw_admissible(e, g);
                                     if (!p) return c;
                                     c.params = p->fields();
                                     try {
                                         Regeneration reg = regenerate_rhs(e, *p, 7);
                                         c.exact = true;
                                         c.terms = long(reg.terms.size());
                                         c.status = reg.passed ? Status::Pass : Status::Fail;
                                         if (!reg.lhs_matches) c.reason = "lemma left side differs from the printed series";
                                         else if (!reg.passed) {
                                             for (const auto& t : reg.terms)
                                                 if (!t.matches) {
                                                     c.reason = "term " + std::to_string(t.k) + " differs";
                                                     break;
                                                 }
                                         }
                                         return c;
                                     } catch (const MathError& err) {
                                         c.reason = std::string(to_string(err.kind())) + ": " + err.what();
                                         if (err.kind() == ErrorKind::SummationPatternMismatch) {
                                             c.status = Status::Fail;
                                             return c;
                                         }
                                     }
                                 }
                                 return c;
                             }});
    }
    run_units(units, slots, cfg.threads);
    for (size_t i = 0; i < sel.size(); ++i) r.entries[i].checks = std::move(slots[i]);
    summarize(r);
    return r;
}

std::string scalar_text(const Scalar& s, int digits) {
    return s.exact ? to_string(s.q) : to_string(s.r, digits);
}

nlohmann::json to_json(const VerificationReport& r, bool timing) {
    using nlohmann::json;
    const RunConfig& c = r.config;
    int digits = c.precision;
    auto num = [&](const Scalar& s) -> json {
        if (s.exact) return to_string(s.q);
        return json{{"decimal", to_string(s.r, digits)}, {"digits", digits}};
    };
    json out;
    out["command"] = r.command;
    out["config"] = {{"identities", c.identities}, {"cases", c.cases}, {"samples", c.samples},
                     {"seed", std::to_string(c.seed)}, {"mode", c.mode},   {"precision", c.precision},
                     {"budget", c.budget}};
    out["entries"] = json::array();
    for (const auto& e : r.entries) {
        json checks = json::array();
        for (const auto& k : e.checks) {
            json j;
            j["kind"] = k.kind;
            if (!k.extension.empty()) j["extension"] = k.extension;
            json params = json::object();
            for (const auto& [name, v] : k.params) params[name] = v;
            j["params"] = params;
            if (k.lhs) j["lhs"] = num(*k.lhs);
            if (k.rhs) j["rhs"] = num(*k.rhs);
            if (k.discrepancy) j["discrepancy"] = to_string(*k.discrepancy, 6);
            j["exact"] = k.exact;
            j["terms"] = k.terms;
            j["status"] = k.status == Status::Skipped ? "skipped(" + k.reason + ")" : to_string(k.status);
            if (k.status == Status::Fail && !k.reason.empty()) j["reason"] = k.reason;
            if (timing) j["elapsed_ms"] = k.elapsed_ms;
            checks.push_back(j);
        }
        out["entries"].push_back({{"id", e.id}, {"anchor", e.anchor}, {"checks", checks}});
    }
    json adj = json::array();
    for (const auto& a : r.adjudications)
        adj.push_back({{"entry", a.entry},
                       {"subject", a.subject},
                       {"checks", a.checks},
                       {"printed_failures", a.printed_failures},
                       {"corrected_failures", a.corrected_failures},
                       {"verdict", a.verdict}});
    out["adjudications"] = adj;
    json flags = json::array();
    for (const auto& a : r.adjudications) flags.push_back(a.entry + ": " + a.verdict);
    const ReportSummary& s = r.summary;
    out["summary"] = {{"pass", s.pass},
                      {"fail", s.fail},
                      {"skipped", s.skipped},
                      {"worst_discrepancy", s.worst ? json(to_string(*s.worst, 6)) : json(nullptr)},
                      {"adjudication_flags", flags}};
    return out;
}

}  // namespace hyperforge
