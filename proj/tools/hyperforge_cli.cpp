// hyperforge: list the catalogs, verify identities, regenerate right sides.

#include "hyperforge/harness.hpp"
#include "hyperforge/transforms.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace hyperforge;

namespace {

void list_identities(const RunConfig& cfg) {
    for (const auto* e : select_entries(cfg)) {
        std::cout << std::left << std::setw(7) << e->id << std::setw(5) << e->case_label << std::setw(52) << e->anchor;
        if (e->derivation)
            std::cout << e->derivation->transform << " + " << e->derivation->rule
                      << (e->derivation->reversed ? " (reversed)" : "");
        else
            std::cout << "-";
        if (!e->numeric.empty()) std::cout << "  [numeric x" << e->numeric.size() << "]";
        std::cout << "\n";
    }
}

void list_transforms() {
    for (const auto& t : catalog_base_transforms())
        std::cout << std::left << std::setw(7) << t.id << std::setw(5) << t.case_label << t.name << "  (w,u,v) = ("
                  << t.w << "," << t.u << "," << t.v << ")  M = " << to_string(t.M) << "  D = " << to_string(t.D)
                  << "\n";
}

void print_text(const VerificationReport& r) {
    for (const auto& e : r.entries) {
        long pass = 0, fail = 0, skip = 0;
        for (const auto& c : e.checks) {
            if (c.status == Status::Pass) ++pass;
            else if (c.status == Status::Fail) ++fail;
            else ++skip;
        }
        std::cout << std::left << std::setw(7) << e.id << " pass " << std::setw(4) << pass << " fail " << std::setw(4)
                  << fail << " skipped " << skip << "\n";
        for (const auto& c : e.checks) {
            if (c.status == Status::Pass) continue;
            std::cout << "    " << c.kind << " " << to_string(c.status) << ": " << c.reason;
            if (!c.extension.empty()) std::cout << " [" << c.extension << "]";
            if (c.discrepancy) std::cout << " rel " << to_string(*c.discrepancy, 3);
            std::cout << "\n";
            if (!c.params.empty()) {
                std::cout << "      params:";
                for (const auto& [k, v] : c.params) std::cout << " " << k << "=" << v;
                std::cout << "\n";
            }
        }
    }
    for (const auto& a : r.adjudications)
        std::cout << "adjudication " << a.entry << " (" << a.subject << "): " << a.verdict << " [" << a.checks
                  << " checks]\n";
    const auto& s = r.summary;
    std::cout << "summary: pass " << s.pass << " fail " << s.fail << " skipped " << s.skipped;
    if (s.worst) std::cout << " worst " << to_string(*s.worst, 3);
    std::cout << "\n";
}

int emit(const VerificationReport& r, const std::string& json_path) {
    if (json_path.empty()) {
        print_text(r);
    } else {
        std::string doc = to_json(r).dump(2) + "\n";
        if (json_path == "-") {
            std::cout << doc;
        } else {
            std::ofstream(json_path) << doc;
            print_text(r);
        }
    }
    return r.summary.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for hypergeometric identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.precision = default_precision();
    std::string json_path;
    bool transforms = false;

    auto filters = [&](CLI::App* sub) {
        sub->add_option("--identity", cfg.identities, "identity id, e.g. IV-9 (repeatable)");
        sub->add_option("--case", cfg.cases, "case label I..VI (repeatable)");
    };
    int verify_samples = 20, derive_samples = 5;
    auto run_opts = [&](CLI::App* sub, int& samples) {
        sub->add_option("--samples", samples, "samples per identity")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "64-bit seed");
        sub->add_option("--precision", cfg.precision, "target digits")->check(CLI::Range(16, 2000));
        sub->add_option("--budget", cfg.budget, "terms per series")->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
        sub->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    };

    auto* list = app.add_subcommand("list", "print the identity catalog, or the base transforms");
    filters(list);
    list->add_flag("--transforms", transforms, "list the base transforms instead");

    auto* verify = app.add_subcommand("verify", "check sampled instances of each identity");
    filters(verify);
    run_opts(verify, verify_samples);
    verify->add_option("--mode", cfg.mode, "exact | numeric | both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));

    auto* derive = app.add_subcommand("derive", "rebuild right sides from transform and summation rule");
    std::vector<std::string> positional;
    derive->add_option("ids", positional, "identity ids (default: all)");
    filters(derive);
    run_opts(derive, derive_samples);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            if (transforms) list_transforms();
            else list_identities(cfg);
            return 0;
        }
        if (*verify) {
            cfg.samples = verify_samples;
            return emit(run_verify(cfg), json_path);
        }
        if (*derive) {
            cfg.samples = derive_samples;
            cfg.identities.insert(cfg.identities.end(), positional.begin(), positional.end());
            return emit(run_derive(cfg), json_path);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
