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

// End-to-end acceptance suite. Each test prints one [PASS]/[FAIL] line so a
// run of this binary doubles as the project checklist.

#include <catch2/catch_amalgamated.hpp>

#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "qlk/engine.hpp"
#include "qlk/hopfcheck.hpp"
#include "qlk/oracle.hpp"

using namespace qlk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<BraidWord>& corpus() {
    static const std::vector<BraidWord> braids = [] {
        std::ifstream in(QLK_CORPUS_FILE);
        REQUIRE(in.good());
        return parse_braid_list(in);
    }();
    return braids;
}

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << std::endl;
    CHECK(ok);
}

long peak_rss_bytes() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return u.ru_maxrss * 1024; // Linux reports KiB
}

} // namespace

TEST_CASE("criterion 1: oracle equivalence over corpus and 50 random braids") {
    const auto t0 = Clock::now();
    std::vector<BraidWord> braids = corpus();
    REQUIRE(braids.size() >= 25);
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 50; ++i)
        braids.push_back(random_braid(2 + static_cast<int>(rng() % 3),
                                      static_cast<int>(rng() % 11), rng()));
    int checked = 0;
    bool all_ok = true;
    for (const BraidWord& b : braids) {
        const bool ok = unit_equal(alexander(b), alexander_oracle(b));
        all_ok = all_ok && ok;
        if (!ok) std::cout << "  oracle mismatch on " << render(b) << "\n";
        ++checked;
    }
    const double elapsed = seconds_since(t0);
    const bool in_time = elapsed < 10.0;
    report(1, all_ok && in_time,
           "unit_normalize(alexander) = unit_normalize(oracle) on " + std::to_string(checked) +
               " braids in " + std::to_string(elapsed) + " s (< 10 s)");
}

TEST_CASE("criterion 2: LG^{n,1}(tau,-1) = Delta(tau^2)^n for n = 1,2,3") {
    bool all_ok = true;
    int checked = 0;
    double n3_elapsed = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const auto t0 = Clock::now();
        for (const BraidWord& b : corpus()) {
            if (n * b.strands > 12) continue;
            const TheoremReport rep = verify_theorem(b, n);
            const bool ok = rep.equal_normalized && rep.raw_equal;
            all_ok = all_ok && ok;
            if (!ok) std::cout << "  theorem fails at n=" << n << " on " << render(b) << "\n";
            ++checked;
        }
        if (n == 3) n3_elapsed = seconds_since(t0);
    }
    const bool in_time = n3_elapsed < 300.0;
    report(2, all_ok && in_time,
           std::to_string(checked) + " (braid, n) pairs, exact (raw and unit-normalized); n=3 " +
               "pass took " + std::to_string(n3_elapsed) + " s (< 300 s)");
}

TEST_CASE("criterion 3: Markov invariance, 30 seeded moves per model") {
    bool all_ok = true;
    for (int n = 0; n <= 3; ++n) { // n = 0 stands for the sl2 model
        const RibbonData rib = (n == 0) ? build_sl2_ribbon() : build_lg_qm1_ribbon(n);
        std::mt19937_64 rng(500 + static_cast<std::uint64_t>(n));
        for (int i = 0; i < 30; ++i) {
            const int strands = 2 + static_cast<int>(rng() % 2);
            const BraidWord b = random_braid(strands, 1 + static_cast<int>(rng() % 6), rng());
            BraidWord moved;
            if (rng() & 1u) {
                moved = conjugate(b, 1 + static_cast<int>(rng() % (strands - 1)),
                                  (rng() & 1u) ? 1 : -1);
            } else {
                moved = stabilize(b, (rng() & 1u) ? 1 : -1);
            }
            const bool ok =
                unit_equal(invariant(b, rib).scalar, invariant(moved, rib).scalar);
            all_ok = all_ok && ok;
            if (!ok)
                std::cout << "  Markov failure in " << rib.model << " on " << render(b) << " -> "
                          << render(moved) << "\n";
        }
    }
    report(3, all_ok, "30 (braid, move) pairs per model {sl2, lg(1), lg(2), lg(3)}, exact");
}

TEST_CASE("criterion 4: closure traces are scalar multiples of the identity") {
    bool all_ok = true;
    int checked = 0;
    for (const BraidWord& b : corpus()) {
        for (int n = 0; n <= 3; ++n) {
            if (n * b.strands > 12) continue;
            const RibbonData rib = (n == 0) ? build_sl2_ribbon() : build_lg_qm1_ribbon(n);
            try {
                all_ok = all_ok && invariant(b, rib).proportionality_ok;
                ++checked;
            } catch (const NotProportionalToIdentity& e) {
                all_ok = false;
                std::cout << "  " << e.what() << "\n";
            }
        }
    }
    report(4, all_ok,
           "NotProportionalToIdentity never fired over " + std::to_string(checked) +
               " (braid, model) evaluations");
}

TEST_CASE("criterion 5: Yang-Baxter and framing normalization, exact") {
    bool all_ok = true;
    auto probe = [&](const RibbonData& rib) {
        const bool ybe = check_yang_baxter(rib);
        const bool framing = check_framing_identity(rib);
        const bool inverse = check_inverse_identity(rib);
        if (!(ybe && framing && inverse))
            std::cout << "  failure for " << rib.model << " (ybe=" << ybe
                      << ", framing=" << framing << ", inverse=" << inverse << ")\n";
        all_ok = all_ok && ybe && framing && inverse;
    };
    probe(build_sl2_ribbon());
    for (int n = 1; n <= 3; ++n) probe(build_lg_qm1_ribbon(n));
    report(5, all_ok, "exact YBE + trace_2((Id (x) pivot) B) = Id for sl2 and lg(1..3)");
}

TEST_CASE("criterion 6: Hopf-algebra checks") {
    const auto reports = run_all_checks(20260810, 20, 50);
    bool all_ok = true;
    for (const auto& rep : reports) {
        if (!rep.pass)
            std::cout << "  " << rep.name << " residual " << rep.max_residual << " tolerance "
                      << rep.tolerance << "\n";
        all_ok = all_ok && rep.pass;
    }
    report(6, all_ok,
           "U relations, D^H / D^sigma conjugation (20 samples, < 1e-8), ratio formula "
           "(50 samples, spread and |lambda - formula| < 1e-8, s = +-1 to 1e-10)");
}

TEST_CASE("criterion 7: lg braiding factorizes through the interleaving permutation") {
    const SparseOperator b1 = build_sl2_ribbon().braiding.with_variable(Var::Tau);
    const SparseOperator b1i = build_sl2_ribbon().braiding_inv.with_variable(Var::Tau);
    bool all_ok = true;
    for (int n = 2; n <= 3; ++n) {
        SparseOperator power = b1, power_inv = b1i;
        for (int i = 1; i < n; ++i) {
            power = SparseOperator::kron(power, b1);
            power_inv = SparseOperator::kron(power_inv, b1i);
        }
        const auto perm = interleave_permutation(n);
        const RibbonData lg = build_lg_qm1_ribbon(n);
        const bool ok = lg.braiding == power.conjugate_by_permutation(perm) &&
                        lg.braiding_inv == power_inv.conjugate_by_permutation(perm);
        if (!ok) std::cout << "  factorization mismatch at n=" << n << "\n";
        all_ok = all_ok && ok;
    }
    report(7, all_ok, "lg(n) braiding = permuted n-fold tensor power of lg(1), n = 2, 3, exact");
}

TEST_CASE("criterion 8: performance envelope and worker determinism") {
    const BraidWord b = parse_braid("6; 1 2 3 4 5 1 2 3 4 5");
    const RibbonData rib = build_lg_qm1_ribbon(2);

    EngineOptions one, eight;
    one.workers = 1;
    eight.workers = 8;

    const auto t0 = Clock::now();
    const SparseOperator m1 = closure_trace(b, rib, one);
    const double elapsed = seconds_since(t0);
    const SparseOperator m8 = closure_trace(b, rib, eight);

    const bool identical = (m1 == m8);
    const bool in_time = elapsed < 60.0;
    const long rss = peak_rss_bytes();
    const bool in_memory = rss < (2L << 30);
    report(8, identical && in_time && in_memory,
           "n=2, l=6 trace in " + std::to_string(elapsed) + " s (< 60 s), peak rss " +
               std::to_string(rss / (1024 * 1024)) + " MiB (< 2048), 1 vs 8 workers identical");
}
