/*
   Copyright 2026 The qlk authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlk/engine.hpp"
#include "qlk/hopfcheck.hpp"
#include "qlk/json_io.hpp"
#include "qlk/oracle.hpp"

namespace {

using namespace qlk;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::vector<BraidWord> load_braids(const std::string& braid_text, const std::string& file) {
    if (!braid_text.empty() && !file.empty())
        throw qlk::ParseError("give either a braid or --file, not both");
    if (!braid_text.empty()) return {parse_braid(braid_text)};
    if (file.empty()) throw qlk::ParseError("no braid given (positional word or --file)");
    std::ifstream in(file);
    if (!in) throw qlk::ParseError("cannot open braid file " + file);
    return parse_braid_list(in);
}

std::string render_invariant(const LaurentPoly& p, const std::string& var) {
    if (var == "t") return p.str_squared("t");
    if (var == "t0") return p.str_squared("t0");
    return p.str();
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<Json> cache_get(const std::string& dir, const std::string& key) {
    if (dir.empty()) return std::nullopt;
    const std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j;
    in >> j;
    return j;
}

void cache_put(const std::string& dir, const std::string& key, const Json& j) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / (key + ".json"));
    out << j.dump(2) << "\n";
}

LaurentPoly poly_from_json(const Json& terms, Var v) {
    LaurentPoly p(v);
    for (const auto& t : terms)
        p.add_term(t.at(0).get<std::int32_t>(), Int(t.at(1).get<std::string>()));
    return p;
}

struct InvariantCmd {
    std::string braid_text;
    std::string file;
    std::string var;
    std::string cache_dir;
    bool json = false;
    int n = 1; // lg only
    EngineOptions opts;
};

int run_invariant(const InvariantCmd& cmd, bool lg) {
    const std::vector<BraidWord> braids = load_braids(cmd.braid_text, cmd.file);
    const Var native = lg ? Var::Tau : Var::S;
    Json all = Json::array();
    for (const BraidWord& b : braids) {
        const std::string model = lg ? "lg(" + std::to_string(cmd.n) + ")" : "sl2";
        const std::string key =
            model + "-" + std::to_string(fnv1a(model + "|" + render(b)));
        Json out;
        if (auto hit = cache_get(cmd.cache_dir, key)) {
            out = *hit;
        } else {
            if (lg) check_budget(b, cmd.n, cmd.opts);
            const RibbonData rib = lg ? build_lg_qm1_ribbon(cmd.n) : build_sl2_ribbon();
            const InvariantResult res = invariant(b, rib, cmd.opts);
            out = invariant_to_json(b, res);
            cache_put(cmd.cache_dir, key, out);
        }
        if (cmd.json) {
            all.push_back(out);
        } else {
            const LaurentPoly p = poly_from_json(out.at("scalar"), native);
            std::cout << render_invariant(p, cmd.var) << "\n";
        }
    }
    if (cmd.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& file, int n_min, int n_max, bool json,
               const EngineOptions& opts) {
    std::ifstream in(file);
    if (!in) throw qlk::ParseError("cannot open corpus file " + file);
    const std::vector<BraidWord> braids = parse_braid_list(in);
    if (braids.empty()) {
        std::cerr << "warning: corpus " << file << " contains no braids\n";
        std::cout << "0/0 checks — all pass\n";
        return kExitOk;
    }
    int pass = 0, fail = 0, skipped = 0;
    Json rows = Json::array();
    for (int n = n_min; n <= n_max; ++n) {
        for (const BraidWord& b : braids) {
            if (static_cast<long long>(n) * b.strands > opts.budget_bits) {
                ++skipped;
                if (!json)
                    std::cout << "SKIP  n=" << n << "  " << render(b) << "  (budget)\n";
                continue;
            }
            const TheoremReport rep = verify_theorem(b, n, opts);
            if (json) rows.push_back(theorem_to_json(rep));
            const bool ok = rep.equal_normalized;
            ok ? ++pass : ++fail;
            if (!json)
                std::cout << (ok ? "PASS" : "FAIL") << "  n=" << n << "  " << render(b)
                          << (rep.raw_equal ? "  (raw equal)" : "  (units differ)") << "\n";
        }
    }
    if (json) {
        std::cout << Json{{"results", rows}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << pass << "/" << (pass + fail) << " checks";
        if (skipped) std::cout << " (" << skipped << " skipped over budget)";
        std::cout << (fail == 0 ? " — all pass" : " — FAILURES") << "\n";
    }
    return fail == 0 ? kExitOk : kExitVerifyFail;
}

int run_hopf(std::uint64_t seed, int samples) {
    if (samples == 0) std::cerr << "warning: running with zero samples\n";
    const int ratio_samples = samples == 0 ? 0 : std::max(samples, 50);
    const auto reports = run_all_checks(seed, samples, ratio_samples);
    const Json j = check_report_to_json(reports, seed, samples);
    std::cout << j.dump(2) << "\n";
    return j.at("all_pass").get<bool>() ? kExitOk : kExitVerifyFail;
}

int run_ribbon_dump(const std::string& model, int n) {
    if (model == "sl2") {
        std::cout << ribbon_to_json(build_sl2_ribbon()).dump(2) << "\n";
        return kExitOk;
    }
    if (model == "lg") {
        std::cout << ribbon_to_json(build_lg_qm1_ribbon(n)).dump(2) << "\n";
        return kExitOk;
    }
    throw qlk::ParseError("unknown model " + model + " (expected sl2 or lg)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlk — exact quantum link invariants from braid words"};
    app.require_subcommand(1);

    InvariantCmd alex_cmd{.var = "s"};
    CLI::App* alex = app.add_subcommand("alex", "Alexander-Conway polynomial (sl2 model)");
    alex->add_option("braid", alex_cmd.braid_text, "braid word, e.g. \"2; 1 1 1\"");
    alex->add_option("--file", alex_cmd.file, "braid list file (one braid per line)");
    alex->add_option("--var", alex_cmd.var, "output variable: s (default) or t = s^2")
        ->check(CLI::IsMember({"s", "t"}));
    alex->add_flag("--json", alex_cmd.json, "machine-readable output");
    alex->add_option("--cache", alex_cmd.cache_dir, "result cache directory");
    alex->add_option("--workers", alex_cmd.opts.workers, "parallel trace workers");

    InvariantCmd lg_cmd{.var = "tau"};
    CLI::App* lg = app.add_subcommand("lg", "Links-Gould LG^{n,1} at q = -1");
    lg->add_option("-n,--n", lg_cmd.n, "superalgebra size n >= 1")->required();
    lg->add_option("braid", lg_cmd.braid_text, "braid word");
    lg->add_option("--file", lg_cmd.file, "braid list file");
    lg->add_option("--var", lg_cmd.var, "output variable: tau (default) or t0 = tau^2")
        ->check(CLI::IsMember({"tau", "t0"}));
    lg->add_flag("--json", lg_cmd.json, "machine-readable output");
    lg->add_option("--cache", lg_cmd.cache_dir, "result cache directory");
    lg->add_option("--budget", lg_cmd.opts.budget_bits, "max log2(state space), default 24");
    lg->add_option("--workers", lg_cmd.opts.workers, "parallel trace workers");

    std::string verify_file = "data/corpus.braids";
    int n_min = 1, n_max = 3;
    bool verify_json = false;
    EngineOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "check LG^{n,1}(tau,-1) = Delta(tau^2)^n");
    verify->add_option("corpus", verify_file, "braid list file (default data/corpus.braids)");
    verify->add_option("--n-min", n_min, "smallest n (default 1)");
    verify->add_option("--n-max", n_max, "largest n (default 3)");
    verify->add_flag("--json", verify_json, "machine-readable output");
    verify->add_option("--budget", verify_opts.budget_bits, "max log2(state space)");
    verify->add_option("--workers", verify_opts.workers, "parallel trace workers");

    std::uint64_t seed = 20260810;
    int samples = 20;
    CLI::App* hopf = app.add_subcommand("hopf", "numeric Hopf-algebra lemma checks");
    hopf->add_option("--seed", seed, "RNG seed (default 20260810)");
    hopf->add_option("--samples", samples, "parameter draws per check (default 20)");

    std::string ribbon_model = "sl2";
    int ribbon_n = 1;
    CLI::App* ribbon = app.add_subcommand("ribbon", "dump ribbon data as JSON");
    ribbon->add_option("--model", ribbon_model, "sl2 or lg");
    ribbon->add_option("-n,--n", ribbon_n, "n for the lg model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (alex->parsed()) return run_invariant(alex_cmd, false);
        if (lg->parsed()) return run_invariant(lg_cmd, true);
        if (verify->parsed())
            return run_verify(verify_file, n_min, n_max, verify_json, verify_opts);
        if (hopf->parsed()) return run_hopf(seed, samples);
        if (ribbon->parsed()) return run_ribbon_dump(ribbon_model, ribbon_n);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const qlk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegenerateParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitInput;
}
