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

#include "qlk/hopfcheck.hpp"
#include "qlk/ribbon.hpp"

using namespace qlk;

namespace {
LaurentPoly mono(Var v, int e, long long c) { return LaurentPoly::monomial(v, e, c); }
} // namespace

TEST_CASE("sl2 braiding entries") {
    const RibbonData rib = build_sl2_ribbon();
    REQUIRE(rib.dim == 2);
    CHECK(rib.braiding.entry(0, 0) == mono(Var::S, -1, 1));
    CHECK(rib.braiding.entry(2, 1) == LaurentPoly::one(Var::S));
    CHECK(rib.braiding.entry(1, 2) == LaurentPoly::one(Var::S));
    CHECK(rib.braiding.entry(2, 2) == mono(Var::S, -1, 1) + mono(Var::S, 1, -1));
    CHECK(rib.braiding.entry(3, 3) == mono(Var::S, 1, -1));
    CHECK(rib.braiding.entry(1, 1).is_zero());
    CHECK(rib.braiding.nonzero_count() == 5);

    REQUIRE(rib.pivot.size() == 2);
    CHECK(rib.pivot[0] == mono(Var::S, 1, 1));
    CHECK(rib.pivot[1] == mono(Var::S, 1, -1));
}

TEST_CASE("sl2 ribbon identities are exact") {
    const RibbonData rib = build_sl2_ribbon();
    CHECK(check_inverse_identity(rib));
    CHECK(check_framing_identity(rib));
    CHECK(check_yang_baxter(rib));
}

TEST_CASE("lg(1) is the sl2 ribbon with the variable renamed") {
    const RibbonData lg1 = build_lg_qm1_ribbon(1);
    const RibbonData sl2 = build_sl2_ribbon();
    CHECK(lg1.dim == 2);
    CHECK(lg1.var == Var::Tau);
    CHECK(lg1.braiding == sl2.braiding.with_variable(Var::Tau));
    CHECK(lg1.braiding_inv == sl2.braiding_inv.with_variable(Var::Tau));
    REQUIRE(lg1.pivot.size() == 2);
    CHECK(lg1.pivot[0] == sl2.pivot[0].with_variable(Var::Tau));
    CHECK(lg1.pivot[1] == sl2.pivot[1].with_variable(Var::Tau));
}

TEST_CASE("lg(2) basics") {
    const RibbonData lg2 = build_lg_qm1_ribbon(2);
    CHECK(lg2.dim == 4);
    CHECK(lg2.braiding.dim() == 16);
    // both copies in state e0 (x) e0: product of two (0,0) entries s^-1 s^-1
    CHECK(lg2.braiding.entry(0, 0) == mono(Var::Tau, -2, 1));
    CHECK(check_framing_identity(lg2));
    CHECK(check_inverse_identity(lg2));

    // pivot = (diag(tau, -tau))^{(x) 2}
    REQUIRE(lg2.pivot.size() == 4);
    CHECK(lg2.pivot[0] == mono(Var::Tau, 2, 1));
    CHECK(lg2.pivot[1] == mono(Var::Tau, 2, -1));
    CHECK(lg2.pivot[2] == mono(Var::Tau, 2, -1));
    CHECK(lg2.pivot[3] == mono(Var::Tau, 2, 1));
}

TEST_CASE("lg braiding factorizes as the permuted tensor power") {
    // Independent route: Kronecker power conjugated by the interleaving
    // permutation, compared entrywise against the direct construction.
    const SparseOperator b1 = build_sl2_ribbon().braiding.with_variable(Var::Tau);
    for (int n = 2; n <= 3; ++n) {
        SparseOperator power = b1;
        for (int i = 1; i < n; ++i) power = SparseOperator::kron(power, b1);
        // kron nests strand bits as (x1 y1 x2 y2 ...): copy-major order. The
        // builder indexes strand-major, so conjugate by the interleave map.
        const SparseOperator expected =
            power.conjugate_by_permutation(interleave_permutation(n));
        CHECK(build_lg_qm1_ribbon(n).braiding == expected);
    }
}

TEST_CASE("interleave permutation is an involution for n = 2") {
    const auto perm = interleave_permutation(2);
    for (std::uint64_t x = 0; x < perm.size(); ++x) CHECK(perm[perm[x]] == x);
}
