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

#ifndef QLK_RIBBON_HPP
#define QLK_RIBBON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qlk/laurent.hpp"
#include "qlk/sparse.hpp"

namespace qlk {

/// Framing-normalized local braiding data for one model: the braiding
/// acting on V (x) V, its exact inverse, and the pivot inserted on the
/// traced strands. All entries are exact Laurent polynomials.
///
/// Invariants (exercised by the hopfcheck suite):
///   braiding * braiding_inv   = identity,
///   Yang-Baxter for braiding  on V (x) V (x) V,
///   trace_2((Id (x) pivot) braiding) = identity    (framing normalization).
struct RibbonData {
    std::uint32_t dim = 0; // local representation dimension d
    Var var = Var::S;
    SparseOperator braiding;     // d^2 x d^2
    SparseOperator braiding_inv; // d^2 x d^2
    std::vector<LaurentPoly> pivot; // diagonal of the d x d pivot

    std::string model; // "sl2" or "lg(n)"
};

/// The two-dimensional unrolled quantum sl(2) model. In basis order
/// (e0e0, e0e1, e1e0, e1e1) the twist-normalized braiding is
///
///   [ s^-1  0     0        0  ]
///   [ 0     0     1        0  ]
///   [ 0     1     s^-1 - s 0  ]
///   [ 0     0     0       -s  ]
///
/// with s = t^{1/2}, and the pivot is diag(s, -s).
inline RibbonData build_sl2_ribbon() {
    const Var v = Var::S;
    auto mono = [&](int e, long long c) { return LaurentPoly::monomial(v, e, c); };

    RibbonData rib;
    rib.dim = 2;
    rib.var = v;
    rib.model = "sl2";

    SparseOperator b(4, v);
    b.set(0, 0, mono(-1, 1));
    b.set(2, 1, mono(0, 1));
    b.set(1, 2, mono(0, 1));
    b.set(2, 2, mono(-1, 1) + mono(1, -1));
    b.set(3, 3, mono(1, -1));
    rib.braiding = b;

    SparseOperator bi(4, v);
    bi.set(0, 0, mono(1, 1));
    bi.set(1, 1, mono(1, 1) + mono(-1, -1));
    bi.set(2, 1, mono(0, 1));
    bi.set(1, 2, mono(0, 1));
    bi.set(3, 3, mono(-1, -1));
    rib.braiding_inv = bi;

    rib.pivot = {mono(1, 1), mono(1, -1)};
    return rib;
}

/// Permutation carrying strand-major order on (C^2)^{(x) 2n} (all n bits of
/// the first tensor factor, then all n bits of the second) to copy-major
/// order (the two bits of copy i adjacent). interleave[X] is the copy-major
/// index of strand-major basis state X.
inline std::vector<std::uint64_t> interleave_permutation(int n) {
    const std::uint64_t dim = std::uint64_t(1) << (2 * n);
    std::vector<std::uint64_t> perm(dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        const std::uint64_t left = x >> n;          // first strand bits, MSB = copy 1
        const std::uint64_t right = x & ((std::uint64_t(1) << n) - 1);
        std::uint64_t y = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t li = (left >> (n - 1 - i)) & 1;
            const std::uint64_t ri = (right >> (n - 1 - i)) & 1;
            y = (y << 2) | (li << 1) | ri;
        }
        perm[x] = y;
    }
    return perm;
}

namespace detail {

// Entrywise construction of the interleaved n-fold tensor power of a 4x4
// local operator: out[X', X] = prod_i base[pair_i(X'), pair_i(X)], where
// pair_i extracts the (first-strand bit i, second-strand bit i) 2-bit index.
inline SparseOperator interleaved_power(const SparseOperator& base, int n, Var v) {
    const std::uint64_t d = std::uint64_t(1) << n;
    const std::uint64_t dim = d * d;
    SparseOperator out(dim, v);
    std::vector<const SparseColumn*> cols(static_cast<std::size_t>(n));
    std::vector<SparseColumn::const_iterator> its(static_cast<std::size_t>(n));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const std::uint64_t x = col >> n;
        const std::uint64_t y = col & (d - 1);
        bool empty = false;
        for (int i = 0; i < n && !empty; ++i) {
            const std::uint64_t xi = (x >> (n - 1 - i)) & 1;
            const std::uint64_t yi = (y >> (n - 1 - i)) & 1;
            cols[i] = &base.column(2 * xi + yi);
            empty = cols[i]->empty();
        }
        if (empty) continue;
        for (int i = 0; i < n; ++i) its[i] = cols[i]->begin();
        // Odometer over the per-copy column entries.
        while (true) {
            std::uint64_t xr = 0, yr = 0;
            LaurentPoly p = LaurentPoly::one(v);
            for (int i = 0; i < n; ++i) {
                const std::uint64_t r = its[i]->first;
                xr = (xr << 1) | (r >> 1);
                yr = (yr << 1) | (r & 1);
                p *= its[i]->second;
            }
            out.add((xr << n) | yr, col, p);
            int i = n - 1;
            while (i >= 0) {
                if (++its[i] != cols[i]->end()) break;
                its[i] = cols[i]->begin();
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

} // namespace detail

/// Links-Gould LG^{n,1} local data at q = -1. The 2^n-dimensional local
/// space is the n-fold tensor power of the two-dimensional space, basis
/// index bit i (MSB first) recording the occupation of f_i, and the
/// braiding is the interleaving-permutation conjugate of the n-fold tensor
/// power of the sl2 braiding, in the variable tau = t0^{1/2}. For n = 1
/// this is exactly build_sl2_ribbon() with the variable renamed.
inline RibbonData build_lg_qm1_ribbon(int n) {
    if (n < 1) throw IndexOutOfRange("build_lg_qm1_ribbon: n must be >= 1");
    const Var v = Var::Tau;
    const RibbonData base = build_sl2_ribbon();
    const SparseOperator b1 = base.braiding.with_variable(v);
    const SparseOperator b1i = base.braiding_inv.with_variable(v);

    RibbonData rib;
    rib.dim = std::uint32_t(1) << n;
    rib.var = v;
    rib.model = "lg(" + std::to_string(n) + ")";
    rib.braiding = detail::interleaved_power(b1, n, v);
    rib.braiding_inv = detail::interleaved_power(b1i, n, v);

    rib.pivot.reserve(rib.dim);
    for (std::uint32_t x = 0; x < rib.dim; ++x) {
        const bool odd = __builtin_popcount(x) & 1;
        rib.pivot.push_back(LaurentPoly::monomial(v, n, odd ? -1 : 1));
    }
    return rib;
}

} // namespace qlk

#endif // QLK_RIBBON_HPP
