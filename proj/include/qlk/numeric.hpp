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

#ifndef QLK_NUMERIC_HPP
#define QLK_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qlk/errors.hpp"

namespace qlk {

using Cplx = std::complex<double>;

/// i^x on the principal branch: exp(i pi x / 2).
inline Cplx ipow(Cplx x) {
    const Cplx factor(0.0, std::acos(-1.0) / 2.0);
    return std::exp(factor * x);
}

/// Small dense complex matrix, just enough linear algebra for the 2x2 and
/// 4x4 representation checks.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMat diag(const std::vector<Cplx>& d) {
        CMat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CMat operator*(const CMat& rhs) const {
        CMat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Cplx v = (*this)(i, k);
                if (v == Cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
            }
        return out;
    }

    CMat operator+(const CMat& rhs) const {
        CMat out = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
        return out;
    }
    CMat operator-(const CMat& rhs) const {
        CMat out = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
        return out;
    }
    CMat operator*(Cplx s) const {
        CMat out = *this;
        for (auto& v : out.a_) v *= s;
        return out;
    }

    static CMat kron(const CMat& a, const CMat& b) {
        CMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        return out;
    }

    /// Gauss-Jordan inverse; fine for the tiny matrices used here.
    CMat inverse() const {
        const std::size_t n = rows_;
        CMat a = *this;
        CMat inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
            if (std::abs(a(piv, col)) < 1e-300)
                throw DegenerateParameter("CMat::inverse: singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const Cplx d = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) /= d;
                inv(col, j) /= d;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                const Cplx f = a(r, col);
                if (f == Cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    friend double max_abs_diff(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cplx> a_;
};

/// The switch x (x) y -> y (x) x on C^2 (x) C^2.
inline CMat switch_matrix() {
    CMat t(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) t(2 * j + i, 2 * i + j) = 1.0;
    return t;
}

/// Two-dimensional representation V_alpha of the unrolled quantum sl(2)
/// at q = i, on the basis (e0, e1):
///   H = diag(alpha+1, alpha-1), K = diag(a, -a) with a = i^{alpha+1},
///   E = single 1 at (0,1), F = single a - a^{-1} at (1,0).
struct Sl2NumericRep {
    Cplx alpha;
    Cplx a;
    CMat H, K, E, F;
};

inline Sl2NumericRep build_sl2_numeric(Cplx alpha) {
    const Cplx a = ipow(alpha + 1.0);
    if (std::abs(a * a - 1.0) < 1e-9)
        throw DegenerateParameter("build_sl2_numeric: alpha is an odd integer (a^2 = 1)");
    Sl2NumericRep r;
    r.alpha = alpha;
    r.a = a;
    r.H = CMat::diag({alpha + 1.0, alpha - 1.0});
    r.K = CMat::diag({a, -a});
    r.E = CMat(2, 2);
    r.E(0, 1) = 1.0;
    r.F = CMat(2, 2);
    r.F(1, 0) = a - 1.0 / a;
    return r;
}

/// Two-dimensional representation of the bosonized U_q gl(1|1), parameters
/// (q, j, J, epsilon), with j solved from (-1)^epsilon q^{-2j} = a = i^{alpha+1}
/// on the principal logarithm branch.
///
/// The basis is normalized so that the restriction to the common subalgebra
/// U equals build_sl2_numeric(alpha) entrywise: the textbook family carries
/// the a - a^{-1} weight on e instead of f, and the two are intertwined by
/// diag(1, a - a^{-1}). In this basis
///   X = single -(-1)^epsilon / (q - q^{-1}) at (0,1),
///   Y = single a - a^{-1} at (1,0),
/// while I, G, sigma, C are diagonal and unaffected by the normalization.
struct Gl11NumericRep {
    Cplx q, alpha, a, j, J;
    int epsilon = 0;
    CMat I, G, X, Y, sigma, C;
    CMat e, f, k; // derived: e = (q - q^{-1}) X sigma, f = Y, k = C^{-1} sigma
};

inline Gl11NumericRep build_gl11_numeric(Cplx q, Cplx alpha, int epsilon, Cplx J) {
    if (std::abs(q) < 1e-9 || std::abs(q - 1.0) < 1e-9 || std::abs(q + 1.0) < 1e-9)
        throw DegenerateParameter("build_gl11_numeric: q in {0, 1, -1}");
    const Cplx a = ipow(alpha + 1.0);
    if (std::abs(a * a - 1.0) < 1e-9)
        throw DegenerateParameter("build_gl11_numeric: alpha is an odd integer (a^2 = 1)");
    const double sgn = epsilon ? -1.0 : 1.0;

    Gl11NumericRep r;
    r.q = q;
    r.alpha = alpha;
    r.a = a;
    r.J = J;
    r.epsilon = epsilon;
    r.j = -std::log(sgn * a) / (2.0 * std::log(q));

    const Cplx q2j = std::exp(2.0 * r.j * std::log(q));
    const Cplx qmq = q - 1.0 / q;
    const Cplx c = a - 1.0 / a;

    r.I = CMat::diag({2.0 * r.j, 2.0 * r.j});
    r.G = CMat::diag({(J + 1.0) / 2.0, (J - 1.0) / 2.0});
    r.sigma = CMat::diag({sgn, -sgn});
    r.C = CMat::diag({q2j, q2j});
    r.X = CMat(2, 2);
    r.X(0, 1) = -sgn / qmq;
    r.Y = CMat(2, 2);
    r.Y(1, 0) = c;

    r.e = (r.X * r.sigma) * qmq;
    r.f = r.Y;
    r.k = r.C.inverse() * r.sigma;
    return r;
}

/// D^H = i^{H (x) H / 2} = exp(i pi / 4 * H (x) H) on V_alpha (x) V_beta.
inline CMat dh_matrix(const Sl2NumericRep& r1, const Sl2NumericRep& r2) {
    std::vector<Cplx> d(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            d[2 * i + j] = ipow(r1.H(i, i) * r2.H(j, j) / 2.0);
    return CMat::diag(d);
}

/// R^H = i^{H (x) H / 2} (1 + E (x) F), not twist-normalized, no switch.
inline CMat braiding_numeric_sl2H(const Sl2NumericRep& r1, const Sl2NumericRep& r2) {
    return dh_matrix(r1, r2) * (CMat::identity(4) + CMat::kron(r1.E, r2.F));
}

/// R_1 = (1/2)(1 (x) 1 + sigma (x) 1 + 1 (x) sigma - sigma (x) sigma).
inline CMat r1_matrix(const Gl11NumericRep& r1, const Gl11NumericRep& r2) {
    const CMat id2 = CMat::identity(2);
    return (CMat::kron(id2, id2) + CMat::kron(r1.sigma, id2) + CMat::kron(id2, r2.sigma) -
            CMat::kron(r1.sigma, r2.sigma)) *
           Cplx(0.5, 0.0);
}

/// D' = q^{-(I (x) G + G (x) I)}; diagonal on this family.
inline CMat dprime_matrix(const Gl11NumericRep& r1, const Gl11NumericRep& r2) {
    std::vector<Cplx> d(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Cplx expo = -(r1.I(i, i) * r2.G(j, j) + r1.G(i, i) * r2.I(j, j));
            d[2 * i + j] = std::exp(expo * std::log(r1.q));
        }
    return CMat::diag(d);
}

/// R^sigma = R_1 q^{-(I (x) G + G (x) I)} (1 + e (x) f).
inline CMat braiding_numeric_gl11(const Gl11NumericRep& r1, const Gl11NumericRep& r2) {
    if (std::abs(r1.q - r2.q) > 1e-12)
        throw QMismatch("braiding_numeric_gl11: representations with different q");
    return r1_matrix(r1, r2) * dprime_matrix(r1, r2) *
           (CMat::identity(4) + CMat::kron(r1.e, r2.f));
}

} // namespace qlk

#endif // QLK_NUMERIC_HPP
