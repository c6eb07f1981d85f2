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

#ifndef QLK_LAURENT_HPP
#define QLK_LAURENT_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlk/errors.hpp"

namespace qlk {

using Int = boost::multiprecision::cpp_int;

/// Formal variable of a Laurent polynomial. The link-invariant pipelines
/// work in half-integer-power variables: s = t^{1/2} for the Alexander side,
/// tau = t0^{1/2} for the Links-Gould side. Exponents stored in a LaurentPoly
/// are plain integers *in the named variable*, so t and t0 are s^2 and tau^2.
enum class Var : std::uint8_t { S, Tau, T };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::S: return "s";
        case Var::Tau: return "tau";
        default: return "t";
    }
}

/// Exact univariate Laurent polynomial with arbitrary-precision integer
/// coefficients.
///
/// Canonical form: terms sorted by increasing exponent, no zero coefficient
/// is ever stored. Two polynomials are equal iff variable and term lists are
/// equal. Values are immutable in spirit: every operation returns a fresh
/// polynomial, and the mutating helpers are only used internally while a
/// value is still private to one thread.
class LaurentPoly {
public:
    using Term = std::pair<std::int32_t, Int>;

    explicit LaurentPoly(Var v = Var::S) : var_(v) {}

    /// c * x^e
    static LaurentPoly monomial(Var v, std::int32_t exponent, Int coefficient) {
        LaurentPoly p(v);
        if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
        return p;
    }

    static LaurentPoly zero(Var v) { return LaurentPoly(v); }
    static LaurentPoly one(Var v) { return monomial(v, 0, 1); }

    /// Build from (exponent, coefficient) pairs in any order.
    static LaurentPoly from_terms(Var v, std::initializer_list<std::pair<int, long long>> ts) {
        LaurentPoly p(v);
        for (const auto& [e, c] : ts) p.add_term(static_cast<std::int32_t>(e), Int(c));
        return p;
    }

    Var variable() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// True when the polynomial is a single term c * x^e.
    bool is_monomial() const { return terms_.size() == 1; }

    std::int32_t min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.front().first;
    }
    std::int32_t max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.back().first;
    }

    Int coefficient(std::int32_t exponent) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, std::int32_t e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return Int(0);
    }

    bool operator==(const LaurentPoly& rhs) const {
        return var_ == rhs.var_ && terms_ == rhs.terms_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly operator-() const {
        LaurentPoly r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& rhs) const {
        require_same_variable(rhs, "add");
        LaurentPoly r(var_);
        merge_into(r.terms_, terms_, rhs.terms_, false);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& rhs) const {
        require_same_variable(rhs, "subtract");
        LaurentPoly r(var_);
        merge_into(r.terms_, terms_, rhs.terms_, true);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        *this = *this + rhs;
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        *this = *this - rhs;
        return *this;
    }

    LaurentPoly operator*(const LaurentPoly& rhs) const {
        require_same_variable(rhs, "multiply");
        LaurentPoly r(var_);
        if (is_zero() || rhs.is_zero()) return r;
        // Monomial factors are the common case in the contraction engine.
        if (is_monomial()) {
            r.terms_ = rhs.shifted_scaled(terms_[0].first, terms_[0].second);
            return r;
        }
        if (rhs.is_monomial()) {
            r.terms_ = shifted_scaled(rhs.terms_[0].first, rhs.terms_[0].second);
            return r;
        }
        for (const auto& [e, c] : rhs.terms_) {
            std::vector<Term> part = shifted_scaled(e, c);
            std::vector<Term> merged;
            merge_into(merged, r.terms_, part, false);
            r.terms_ = std::move(merged);
        }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    /// this += a * b. Hot path of the contraction engine.
    void add_product(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_variable(a, "add_product");
        a.require_same_variable(b, "add_product");
        if (a.is_zero() || b.is_zero()) return;
        if (a.is_monomial()) {
            std::vector<Term> part = b.shifted_scaled(a.terms_[0].first, a.terms_[0].second);
            std::vector<Term> merged;
            merge_into(merged, terms_, part, false);
            terms_ = std::move(merged);
            return;
        }
        *this += a * b;
    }

    friend LaurentPoly pow(const LaurentPoly& base, unsigned n) {
        LaurentPoly acc = LaurentPoly::one(base.var_);
        LaurentPoly sq = base;
        while (n > 0) {
            if (n & 1u) acc *= sq;
            n >>= 1u;
            if (n) sq *= sq;
        }
        return acc;
    }

    /// Same exponent/coefficient data under a new variable tag.
    LaurentPoly with_variable(Var v) const {
        LaurentPoly r = *this;
        r.var_ = v;
        return r;
    }

    /// x -> 1/x on the formal variable (mirror images of links).
    LaurentPoly invert_variable() const {
        LaurentPoly r(var_);
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.emplace_back(-it->first, it->second);
        return r;
    }

    std::complex<double> eval_complex(std::complex<double> z) const {
        if (z == std::complex<double>(0.0, 0.0))
            throw PoleAtZero("eval_complex: evaluation at z = 0");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_)
            acc += c.convert_to<double>() * std::pow(z, e);
        return acc;
    }

    /// Canonical representative modulo multiplication by +-x^k: exponents are
    /// centered (max = -min for even spread, max+min = 1 for odd spread) and
    /// the leading coefficient is positive.
    LaurentPoly unit_normalize() const {
        if (is_zero()) throw ZeroPolynomial("unit_normalize: zero polynomial has no unit form");
        const std::int32_t lo = terms_.front().first;
        const std::int32_t hi = terms_.back().first;
        const std::int32_t sum = hi + lo;
        // For odd spread the centered sum 0 is unreachable; land on +1.
        const std::int32_t shift = ((sum % 2) == 0) ? -sum / 2 : -(sum - 1) / 2;
        const bool flip = terms_.back().second < 0;
        LaurentPoly r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_)
            r.terms_.emplace_back(e + shift, flip ? Int(-c) : c);
        return r;
    }

    /// Exact division; throws NonExactDivision if rhs does not divide this.
    LaurentPoly divide_exact(const LaurentPoly& rhs) const {
        require_same_variable(rhs, "divide");
        if (rhs.is_zero()) throw NonExactDivision("divide_exact: division by zero");
        if (is_zero()) return zero(var_);
        LaurentPoly rem = *this;
        LaurentPoly q(var_);
        const auto& dlead = rhs.terms_.back();
        while (!rem.is_zero()) {
            const auto& rlead = rem.terms_.back();
            Int c = rlead.second / dlead.second;
            if (c * dlead.second != rlead.second)
                throw NonExactDivision("divide_exact: leading coefficient not divisible");
            LaurentPoly m = monomial(var_, rlead.first - dlead.first, std::move(c));
            q += m;
            rem -= m * rhs;
            if (!rem.is_zero() && rem.terms_.back().first >= rlead.first)
                throw NonExactDivision("divide_exact: no degree progress");
        }
        return q;
    }

    /// Terms in decreasing exponent order, e.g. "s^2 - 1 + s^-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (mag != 1 || e == 0) out << mag.str();
            if (e != 0) {
                out << var_name(var_);
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

    /// Rendering in the whole-power variable (t = s^2, t0 = tau^2); odd
    /// exponents appear as explicit half powers, e.g. "t^(1/2) - t^(-1/2)".
    std::string str_squared(const std::string& name) const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (mag != 1 || e == 0) out << mag.str();
            if (e != 0) {
                out << name;
                if (e % 2 == 0) {
                    if (e != 2) out << "^" << e / 2;
                } else {
                    out << "^(" << e << "/2)";
                }
            }
        }
        return out.str();
    }

    // Internal builder: accumulate a term, keeping canonical form.
    void add_term(std::int32_t exponent, const Int& coefficient) {
        if (coefficient == 0) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, std::int32_t e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.emplace(it, exponent, coefficient);
        }
    }

private:
    void require_same_variable(const LaurentPoly& rhs, const char* op) const {
        if (var_ != rhs.var_)
            throw VariableClash(std::string(op) + ": variables " + var_name(var_) + " vs " +
                                var_name(rhs.var_));
    }
    void require_nonzero(const char* op) const {
        if (is_zero()) throw ZeroPolynomial(std::string(op) + ": zero polynomial");
    }

    std::vector<Term> shifted_scaled(std::int32_t shift, const Int& scale) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(e + shift, c * scale);
        return out;
    }

    static void merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                           const std::vector<Term>& b, bool negate_b) {
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) {
                out.push_back(a[i++]);
            } else if (a[i].first > b[j].first) {
                out.emplace_back(b[j].first, negate_b ? Int(-b[j].second) : b[j].second);
                ++j;
            } else {
                Int c = negate_b ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
                if (c != 0) out.emplace_back(a[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j)
            out.emplace_back(b[j].first, negate_b ? Int(-b[j].second) : b[j].second);
    }

    Var var_;
    std::vector<Term> terms_;
};

/// Equality modulo +-x^k, with zero handled (zero is only equal to zero).
inline bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.unit_normalize() == b.unit_normalize();
}

inline LaurentPoly substitute_variable(const LaurentPoly& p, Var v) { return p.with_variable(v); }

} // namespace qlk

#endif // QLK_LAURENT_HPP
