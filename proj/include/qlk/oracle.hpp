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

#ifndef QLK_ORACLE_HPP
#define QLK_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "qlk/braid.hpp"
#include "qlk/laurent.hpp"

namespace qlk {

/// (ell-1) x (ell-1) dense matrix over Z[s^{+-1}] with t = s^2; the image of
/// a braid under the reduced Burau representation.
class BurauMatrix {
public:
    explicit BurauMatrix(std::size_t size)
        : size_(size), a_(size * size, LaurentPoly::zero(Var::S)) {}

    static BurauMatrix identity(std::size_t size) {
        BurauMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = LaurentPoly::one(Var::S);
        return m;
    }

    std::size_t size() const { return size_; }
    LaurentPoly& operator()(std::size_t r, std::size_t c) { return a_[r * size_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return a_[r * size_ + c]; }

    BurauMatrix operator*(const BurauMatrix& rhs) const {
        BurauMatrix out(size_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t k = 0; k < size_; ++k) {
                const LaurentPoly& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < size_; ++j) out(i, j).add_product(v, rhs(k, j));
            }
        return out;
    }

    bool operator==(const BurauMatrix& rhs) const { return size_ == rhs.size_ && a_ == rhs.a_; }

    /// Cofactor expansion along the first remaining row, memoized on the
    /// column mask; exact, division-free, fine for size <= 10 or so.
    LaurentPoly determinant() const {
        std::vector<LaurentPoly> memo(std::size_t(1) << size_, LaurentPoly::zero(Var::S));
        std::vector<bool> seen(std::size_t(1) << size_, false);
        return det_rec((std::size_t(1) << size_) - 1, 0, memo, seen);
    }

private:
    LaurentPoly det_rec(std::size_t mask, std::size_t row, std::vector<LaurentPoly>& memo,
                        std::vector<bool>& seen) const {
        if (mask == 0) return LaurentPoly::one(Var::S);
        if (seen[mask]) return memo[mask];
        LaurentPoly acc = LaurentPoly::zero(Var::S);
        int parity = 0;
        for (std::size_t c = 0; c < size_; ++c) {
            if (!(mask & (std::size_t(1) << c))) continue;
            const LaurentPoly& v = (*this)(row, c);
            if (!v.is_zero()) {
                LaurentPoly sub = det_rec(mask & ~(std::size_t(1) << c), row + 1, memo, seen);
                if (parity & 1)
                    acc -= v * sub;
                else
                    acc += v * sub;
            }
            ++parity;
        }
        seen[mask] = true;
        memo[mask] = acc;
        return acc;
    }

    std::size_t size_;
    std::vector<LaurentPoly> a_;
};

namespace detail {

// Reduced Burau image of sigma_index^{+-1} on `strands` strands, entries in
// Z[s^{+-2}] (t = s^2). Only the column index-1 differs from the identity:
//   sigma_i   : rows (i-2, i-1, i) get (t, -t, 1), clipped at the edges,
//   sigma_i^-1: rows (i-2, i-1, i) get (1, -t^{-1}, t^{-1}), clipped.
inline BurauMatrix burau_generator(int strands, int index, int sign) {
    BurauMatrix m = BurauMatrix::identity(static_cast<std::size_t>(strands - 1));
    auto mono = [](int e, long long c) { return LaurentPoly::monomial(Var::S, e, c); };
    const std::size_t col = static_cast<std::size_t>(index - 1);
    if (sign > 0) {
        if (index > 1) m(col - 1, col) = mono(2, 1);
        m(col, col) = mono(2, -1);
        if (index < strands - 1) m(col + 1, col) = mono(0, 1);
    } else {
        if (index > 1) m(col - 1, col) = mono(0, 1);
        m(col, col) = mono(-2, -1);
        if (index < strands - 1) m(col + 1, col) = mono(-2, 1);
    }
    return m;
}

} // namespace detail

/// Product of the reduced Burau generator images over the word.
inline BurauMatrix burau_reduced(const BraidWord& b) {
    if (b.strands < 2) throw IndexOutOfRange("burau_reduced: needs at least 2 strands");
    BurauMatrix m = BurauMatrix::identity(static_cast<std::size_t>(b.strands - 1));
    for (const auto& l : b.letters) {
        check_index(b, l.index, "burau_reduced");
        m = m * detail::burau_generator(b.strands, l.index, l.sign);
    }
    return m;
}

/// Alexander polynomial of the braid closure, up to a unit, from
/// det(burau_reduced(b) - Id) divided exactly by 1 + t + ... + t^{ell-1};
/// the division leaving a remainder signals an implementation bug. Split
/// links give the zero polynomial; nonzero results are unit_normalized.
inline LaurentPoly alexander_oracle(const BraidWord& b) {
    if (b.strands == 1) return LaurentPoly::one(Var::S);
    BurauMatrix m = burau_reduced(b);
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= LaurentPoly::one(Var::S);
    const LaurentPoly det = m.determinant();
    if (det.is_zero()) return LaurentPoly::zero(Var::S);
    LaurentPoly cyclotomic_like = LaurentPoly::zero(Var::S);
    for (int i = 0; i < b.strands; ++i) cyclotomic_like += LaurentPoly::monomial(Var::S, 2 * i, 1);
    return det.divide_exact(cyclotomic_like).unit_normalize();
}

} // namespace qlk

#endif // QLK_ORACLE_HPP
