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

#ifndef QLK_SPARSE_HPP
#define QLK_SPARSE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qlk/laurent.hpp"

namespace qlk {

/// Sparse column vector over LaurentPoly, keyed by basis-state index.
using SparseColumn = std::map<std::uint64_t, LaurentPoly>;

/// Sparse square matrix over LaurentPoly, stored column-major. Stored
/// entries are nonzero canonical polynomials; anything absent is zero.
class SparseOperator {
public:
    explicit SparseOperator(std::uint64_t dim = 0, Var v = Var::S)
        : dim_(dim), var_(v), cols_(dim) {}

    static SparseOperator identity(std::uint64_t dim, Var v) {
        SparseOperator op(dim, v);
        for (std::uint64_t i = 0; i < dim; ++i) op.cols_[i].emplace(i, LaurentPoly::one(v));
        return op;
    }

    std::uint64_t dim() const { return dim_; }
    Var variable() const { return var_; }

    void set(std::uint64_t row, std::uint64_t col, LaurentPoly value) {
        if (value.is_zero())
            cols_[col].erase(row);
        else
            cols_[col].insert_or_assign(row, std::move(value));
    }

    void add(std::uint64_t row, std::uint64_t col, const LaurentPoly& value) {
        if (value.is_zero()) return;
        auto [it, inserted] = cols_[col].try_emplace(row, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) cols_[col].erase(it);
        }
    }

    LaurentPoly entry(std::uint64_t row, std::uint64_t col) const {
        auto it = cols_[col].find(row);
        return it == cols_[col].end() ? LaurentPoly::zero(var_) : it->second;
    }

    const SparseColumn& column(std::uint64_t col) const { return cols_[col]; }

    std::uint64_t nonzero_count() const {
        std::uint64_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    bool operator==(const SparseOperator& rhs) const {
        return dim_ == rhs.dim_ && var_ == rhs.var_ && cols_ == rhs.cols_;
    }
    bool operator!=(const SparseOperator& rhs) const { return !(*this == rhs); }

    SparseOperator with_variable(Var v) const {
        SparseOperator r(dim_, v);
        for (std::uint64_t c = 0; c < dim_; ++c)
            for (const auto& [row, p] : cols_[c]) r.cols_[c].emplace(row, p.with_variable(v));
        return r;
    }

    /// Matrix product this * rhs.
    SparseOperator operator*(const SparseOperator& rhs) const {
        SparseOperator r(dim_, var_);
        for (std::uint64_t c = 0; c < dim_; ++c) {
            SparseColumn& out = r.cols_[c];
            for (const auto& [mid, w] : rhs.cols_[c]) {
                for (const auto& [row, p] : cols_[mid]) {
                    auto [it, inserted] = out.try_emplace(row, LaurentPoly::zero(var_));
                    it->second.add_product(p, w);
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return r;
    }

    /// Kronecker product; row/column indices are (i_left * rhs.dim + i_right).
    static SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
        SparseOperator r(a.dim_ * b.dim_, a.var_);
        for (std::uint64_t ca = 0; ca < a.dim_; ++ca)
            for (const auto& [ra, pa] : a.cols_[ca])
                for (std::uint64_t cb = 0; cb < b.dim_; ++cb)
                    for (const auto& [rb, pb] : b.cols_[cb])
                        r.cols_[ca * b.dim_ + cb].emplace(ra * b.dim_ + rb, pa * pb);
        return r;
    }

    /// P^T * this * P for a permutation P given as perm[old_index] = new_index,
    /// i.e. relabel both row and column indices through perm^{-1} on entries:
    /// result[perm^{-1}r, perm^{-1}c]... Concretely: result entry at
    /// (r, c) equals this entry at (perm[r], perm[c]).
    SparseOperator conjugate_by_permutation(const std::vector<std::uint64_t>& perm) const {
        std::vector<std::uint64_t> inv(dim_);
        for (std::uint64_t i = 0; i < dim_; ++i) inv[perm[i]] = i;
        SparseOperator r(dim_, var_);
        for (std::uint64_t c = 0; c < dim_; ++c)
            for (const auto& [row, p] : cols_[c]) r.cols_[inv[c]].emplace(inv[row], p);
        return r;
    }

private:
    std::uint64_t dim_;
    Var var_;
    std::vector<SparseColumn> cols_;
};

} // namespace qlk

#endif // QLK_SPARSE_HPP
