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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlk/engine.hpp"
#include "qlk/oracle.hpp"

using namespace qlk;

namespace {

LaurentPoly sp(std::initializer_list<std::pair<int, long long>> ts) {
    return LaurentPoly::from_terms(Var::S, ts);
}

Int coefficient_sum(const LaurentPoly& p) {
    Int acc = 0;
    for (const auto& [e, c] : p.terms()) acc += c;
    return acc;
}

} // namespace

TEST_CASE("apply_local on the sl2 braiding") {
    const RibbonData rib = build_sl2_ribbon();
    const LocalOp fwd = LocalOp::from(rib.braiding, rib.dim);
    const LocalOp id = LocalOp::from(SparseOperator::identity(4, Var::S), rib.dim);

    // identity local operator keeps the basis column
    const SparseColumn same = apply_local(id, 1, 2, 2);
    REQUIRE(same.size() == 1);
    CHECK(same.at(2) == LaurentPoly::one(Var::S));

    // braiding on e0 (x) e1 -> e1 (x) e0 with coefficient 1
    const SparseColumn swap01 = apply_local(fwd, 1, 2, 1);
    REQUIRE(swap01.size() == 1);
    CHECK(swap01.at(2) == LaurentPoly::one(Var::S));

    // braiding on e1 (x) e0 -> e0 (x) e1 + (s^-1 - s) e1 (x) e0
    const SparseColumn mixed = apply_local(fwd, 1, 2, 2);
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(1) == LaurentPoly::one(Var::S));
    CHECK(mixed.at(2) == sp({{-1, 1}, {1, -1}}));

    CHECK_THROWS_AS(apply_local(fwd, 2, 2, 0), IndexOutOfRange);

    // middle position on 3 strands: state e0 e1 e0 = index 2, sigma_2
    const SparseColumn shifted = apply_local(fwd, 2, 3, 2);
    REQUIRE(shifted.size() == 1);
    CHECK(shifted.at(1) == LaurentPoly::one(Var::S)); // e0 (x) (e0 e1)
}

TEST_CASE("braid_image_column") {
    const RibbonData rib = build_sl2_ribbon();

    // empty braid: input column unchanged
    const SparseColumn idcol = braid_image_column(parse_braid("2;"), rib, 3);
    REQUIRE(idcol.size() == 1);
    CHECK(idcol.at(3) == LaurentPoly::one(Var::S));

    // sigma_1 sigma_1^{-1}: inverse pair
    const SparseColumn inv = braid_image_column(parse_braid("2; 1 -1"), rib, 2);
    REQUIRE(inv.size() == 1);
    CHECK(inv.at(2) == LaurentPoly::one(Var::S));

    // sigma_1^2 on e0 (x) e1: the square of the braiding
    const SparseColumn sq = braid_image_column(parse_braid("2; 1 1"), rib, 1);
    REQUIRE(sq.size() == 2);
    CHECK(sq.at(1) == LaurentPoly::one(Var::S));
    CHECK(sq.at(2) == sp({{-1, 1}, {1, -1}}));
}

TEST_CASE("closure_trace basics") {
    const RibbonData rib = build_sl2_ribbon();

    // empty braid on >= 2 strands: pivot is traceless, the unlink vanishes
    CHECK(closure_trace(parse_braid("2;"), rib) == SparseOperator(2, Var::S));
    CHECK(closure_trace(parse_braid("3;"), rib) == SparseOperator(2, Var::S));

    // 1-strand empty braid: identity, Delta(unknot) = 1
    CHECK(closure_trace(parse_braid("1;"), rib) == SparseOperator::identity(2, Var::S));

    // trefoil: (s^2 - 1 + s^-2) Id exactly
    const SparseOperator m = closure_trace(parse_braid("2; 1 1 1"), rib);
    const LaurentPoly trefoil = sp({{2, 1}, {0, -1}, {-2, 1}});
    CHECK(m.entry(0, 0) == trefoil);
    CHECK(m.entry(1, 1) == trefoil);
    CHECK(m.entry(0, 1).is_zero());
    CHECK(m.entry(1, 0).is_zero());
}

TEST_CASE("alexander on the standard small links") {
    CHECK(alexander(parse_braid("1;")) == LaurentPoly::one(Var::S));
    CHECK(alexander(parse_braid("2; 1 1 1")) == sp({{2, 1}, {0, -1}, {-2, 1}}));
    // positive Hopf link, Conway-normalized value from the engine
    CHECK(alexander(parse_braid("2; 1 1")) == sp({{-1, 1}, {1, -1}}));
    // figure-eight after unit normalization
    CHECK(alexander(parse_braid("3; 1 -2 1 -2")).unit_normalize() ==
          sp({{2, 1}, {0, -3}, {-2, 1}}));
    // stabilized unknots stay exactly 1 (framing normalization)
    CHECK(alexander(parse_braid("2; 1")) == LaurentPoly::one(Var::S));
    CHECK(alexander(parse_braid("2; -1")) == LaurentPoly::one(Var::S));
    CHECK(alexander(parse_braid("3; 1 2")) == LaurentPoly::one(Var::S));
}

TEST_CASE("Conway normalization: Delta(1) = 1 for knots, 0 for links") {
    std::mt19937_64 rng(321);
    int knots = 0, links = 0;
    for (int i = 0; i < 40; ++i) {
        const BraidWord b = random_braid(2 + static_cast<int>(rng() % 3),
                                         2 + static_cast<int>(rng() % 8), rng());
        const LaurentPoly d = alexander(b);
        if (closure_components(b) == 1) {
            CHECK(coefficient_sum(d) == 1);
            ++knots;
        } else {
            CHECK(coefficient_sum(d) == 0);
            ++links;
        }
    }
    CHECK(knots > 0);
    CHECK(links > 0);
}

TEST_CASE("invariant result metadata") {
    const InvariantResult res = invariant(parse_braid("2; 1 1 1"), build_sl2_ribbon());
    CHECK(res.proportionality_ok);
    CHECK(res.strands == 2);
    CHECK(res.writhe == 3);
    CHECK(res.model == "sl2");
    CHECK(res.elapsed_ms >= 0.0);
}

TEST_CASE("a wrong pivot is caught by the proportionality check") {
    RibbonData broken = build_sl2_ribbon();
    broken.pivot[1] = broken.pivot[0]; // diag(s, s) instead of diag(s, -s)
    CHECK_THROWS_AS(invariant(parse_braid("2; 1 1"), broken), NotProportionalToIdentity);
}

TEST_CASE("mirror property") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        const BraidWord b = random_braid(2 + static_cast<int>(rng() % 3),
                                         1 + static_cast<int>(rng() % 8), rng());
        const LaurentPoly d = alexander(b);
        const LaurentPoly dm = alexander(mirrored(b));
        CHECK(unit_equal(dm, d.invert_variable()));
    }
}

TEST_CASE("Markov moves leave the invariant unchanged exactly") {
    std::mt19937_64 rng(88);
    const RibbonData sl2 = build_sl2_ribbon();
    const RibbonData lg2 = build_lg_qm1_ribbon(2);
    for (int i = 0; i < 8; ++i) {
        const BraidWord b = random_braid(2 + static_cast<int>(rng() % 2),
                                         1 + static_cast<int>(rng() % 6), rng());
        const int idx = 1 + static_cast<int>(rng() % (b.strands - 1));
        const int sgn = (rng() & 1u) ? 1 : -1;
        for (const RibbonData& rib : {sl2, lg2}) {
            const LaurentPoly base = invariant(b, rib).scalar;
            CHECK(invariant(conjugate(b, idx, sgn), rib).scalar == base);
            CHECK(invariant(stabilize(b, sgn), rib).scalar == base);
        }
    }
}

TEST_CASE("links_gould_qm1 small cases") {
    // n = 1 is the Alexander pipeline with the variable renamed
    const BraidWord fig8 = parse_braid("3; 1 -2 1 -2");
    CHECK(links_gould_qm1(fig8, 1) == alexander(fig8).with_variable(Var::Tau));

    CHECK(links_gould_qm1(parse_braid("1;"), 2) == LaurentPoly::one(Var::Tau));

    // n = 2 trefoil: (tau^2 - 1 + tau^-2)^2 expanded
    CHECK(links_gould_qm1(parse_braid("2; 1 1 1"), 2) ==
          LaurentPoly::from_terms(Var::Tau, {{4, 1}, {2, -2}, {0, 3}, {-2, -2}, {-4, 1}}));
}

TEST_CASE("budget guard") {
    EngineOptions opts;
    opts.budget_bits = 24;
    CHECK_THROWS_AS(links_gould_qm1(random_braid(12, 3, 5), 2, opts), BudgetExceeded);
    opts.budget_bits = 10;
    CHECK_THROWS_AS(links_gould_qm1(parse_braid("2; 1 1 1"), 5, opts), BudgetExceeded);
    CHECK_NOTHROW(links_gould_qm1(parse_braid("2; 1 1 1"), 2, opts));
}

TEST_CASE("verify_theorem") {
    const TheoremReport r1 = verify_theorem(parse_braid("2; 1 1 1"), 1);
    CHECK(r1.equal_normalized);
    CHECK(r1.raw_equal);

    const TheoremReport r2 = verify_theorem(parse_braid("2; 1 1 1"), 2);
    CHECK(r2.equal_normalized);
    CHECK(r2.raw_equal);

    const TheoremReport r3 = verify_theorem(parse_braid("3; 1 -2 1 -2"), 3);
    CHECK(r3.equal_normalized);
    CHECK(r3.raw_equal);
}

TEST_CASE("worker count does not change the result") {
    const BraidWord b = parse_braid("3; 1 -2 1 -2");
    const RibbonData rib = build_lg_qm1_ribbon(2);
    EngineOptions one, eight;
    one.workers = 1;
    eight.workers = 8;
    CHECK(closure_trace(b, rib, one) == closure_trace(b, rib, eight));
}
