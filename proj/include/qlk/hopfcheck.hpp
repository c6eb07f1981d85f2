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

#ifndef QLK_HOPFCHECK_HPP
#define QLK_HOPFCHECK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlk/numeric.hpp"
#include "qlk/ribbon.hpp"
#include "qlk/sparse.hpp"

namespace qlk {

/// Residuals of the defining relations of U on a 2x2 triple (e, f, k):
/// ke+ek, kf+fk, e^2, f^2 and (ef-fe) - (k-k^{-1}). The sl2 overload also
/// checks that the central element ef+fe acts by (a - a^{-1}) Id.
inline double check_U_relations(const CMat& e, const CMat& f, const CMat& k) {
    const CMat ki = k.inverse();
    double r = 0.0;
    r = std::max(r, (k * e + e * k).max_abs());
    r = std::max(r, (k * f + f * k).max_abs());
    r = std::max(r, (e * e).max_abs());
    r = std::max(r, (f * f).max_abs());
    r = std::max(r, (e * f - f * e - (k - ki)).max_abs());
    return r;
}

inline double check_U_relations(const Sl2NumericRep& rep) {
    double r = check_U_relations(rep.E, rep.F, rep.K);
    const CMat central = rep.E * rep.F + rep.F * rep.E;
    r = std::max(r, max_abs_diff(central, CMat::identity(2) * (rep.a - 1.0 / rep.a)));
    return r;
}

inline double check_U_relations(const Gl11NumericRep& rep) {
    return check_U_relations(rep.e, rep.f, rep.k);
}

/// Entrywise distance between the U-triples of matched sl2 and gl(1|1)
/// representations with the same alpha.
inline double check_U_match(const Sl2NumericRep& s, const Gl11NumericRep& g) {
    double r = max_abs_diff(s.E, g.e);
    r = std::max(r, max_abs_diff(s.F, g.f));
    r = std::max(r, max_abs_diff(s.K, g.k));
    return r;
}

/// Conjugation by D^H = i^{H (x) H / 2} realizes the outer automorphism D of
/// U (x) U on V_alpha (x) V_alpha': e(x)1 -> e(x)k, f(x)1 -> f(x)k^{-1},
/// k(x)1 fixed, and the switch-symmetric versions.
inline double check_DH_conjugation(Cplx alpha, Cplx alpha2) {
    const Sl2NumericRep r1 = build_sl2_numeric(alpha);
    const Sl2NumericRep r2 = build_sl2_numeric(alpha2);
    const CMat D = dh_matrix(r1, r2);
    const CMat Di = D.inverse();
    const CMat id2 = CMat::identity(2);
    const CMat K1i = r1.K.inverse();
    const CMat K2i = r2.K.inverse();

    const std::pair<CMat, CMat> cases[] = {
        {CMat::kron(r1.E, id2), CMat::kron(r1.E, r2.K)},
        {CMat::kron(r1.F, id2), CMat::kron(r1.F, K2i)},
        {CMat::kron(r1.K, id2), CMat::kron(r1.K, id2)},
        {CMat::kron(id2, r2.E), CMat::kron(r1.K, r2.E)},
        {CMat::kron(id2, r2.F), CMat::kron(K1i, r2.F)},
        {CMat::kron(id2, r2.K), CMat::kron(id2, r2.K)},
    };
    double r = 0.0;
    for (const auto& [x, expected] : cases) r = std::max(r, max_abs_diff(D * x * Di, expected));
    return r;
}

/// Conjugation by D^sigma = R_1 D' realizes the same automorphism D, via the
/// d_G-degrees [G,x] = d_G(x) x; the R_1 and D' factors are checked against
/// their own closed forms as well.
inline double check_Dsigma_conjugation(const Gl11NumericRep& r1, const Gl11NumericRep& r2) {
    if (std::abs(r1.q - r2.q) > 1e-12)
        throw QMismatch("check_Dsigma_conjugation: representations with different q");
    const CMat R1 = r1_matrix(r1, r2);
    const CMat Dp = dprime_matrix(r1, r2);
    const CMat Ds = R1 * Dp;
    const CMat R1i = R1.inverse();
    const CMat Dpi = Dp.inverse();
    const CMat Dsi = Ds.inverse();
    const CMat id2 = CMat::identity(2);
    const CMat k1i = r1.k.inverse();
    const CMat k2i = r2.k.inverse();
    const Cplx c1 = r1.C(0, 0); // C acts by the scalar q^{2j}
    const Cplx c2 = r2.C(0, 0);

    double r = 0.0;
    // R_1 (x (x) y) R_1^{-1} = sigma^{|y|} x (x) y sigma^{|x|} on generators.
    const std::tuple<CMat, CMat> r1_cases[] = {
        {CMat::kron(r1.e, id2), CMat::kron(r1.e, r2.sigma)},
        {CMat::kron(r1.f, id2), CMat::kron(r1.f, r2.sigma)},
        {CMat::kron(r1.k, id2), CMat::kron(r1.k, id2)},
        {CMat::kron(id2, r2.e), CMat::kron(r1.sigma, r2.e)},
        {CMat::kron(id2, r2.f), CMat::kron(r1.sigma, r2.f)},
        {CMat::kron(id2, r2.k), CMat::kron(id2, r2.k)},
    };
    for (const auto& [x, expected] : r1_cases)
        r = std::max(r, max_abs_diff(R1 * x * R1i, expected));

    // D' (x (x) y) D'^{-1} = x C^{-d_G(y)} (x) y C^{-d_G(x)}, d_G(e) = 1,
    // d_G(f) = -1, d_G(k) = 0.
    const std::tuple<CMat, Cplx> dp_cases[] = {
        {CMat::kron(r1.e, id2), 1.0 / c2}, {CMat::kron(r1.f, id2), c2},
        {CMat::kron(r1.k, id2), 1.0},      {CMat::kron(id2, r2.e), 1.0 / c1},
        {CMat::kron(id2, r2.f), c1},       {CMat::kron(id2, r2.k), 1.0},
    };
    for (const auto& [x, scale] : dp_cases) r = std::max(r, max_abs_diff(Dp * x * Dpi, x * scale));

    // D^sigma (x (x) y) (D^sigma)^{-1} = k^{d_G(y)} x (x) y k^{d_G(x)} = D(x (x) y).
    const std::tuple<CMat, CMat> ds_cases[] = {
        {CMat::kron(r1.e, id2), CMat::kron(r1.e, r2.k)},
        {CMat::kron(r1.f, id2), CMat::kron(r1.f, k2i)},
        {CMat::kron(r1.k, id2), CMat::kron(r1.k, id2)},
        {CMat::kron(id2, r2.e), CMat::kron(r1.k, r2.e)},
        {CMat::kron(id2, r2.f), CMat::kron(k1i, r2.f)},
        {CMat::kron(id2, r2.k), CMat::kron(id2, r2.k)},
    };
    for (const auto& [x, expected] : ds_cases)
        r = std::max(r, max_abs_diff(Ds * x * Dsi, expected));
    return r;
}

/// Output of the R^H / R^sigma comparison on one matched parameter set.
struct RatioCheck {
    Cplx lambda;  // measured entrywise ratio R^H / R^sigma
    Cplx formula; // s s' (-1)^{eps eps'} i^{eps+eps'} i^{(aa'-1)/2} q^{jJ'+j'J}
    Cplx s1, s2;  // the +-1 signs from the branch choice
    double spread = 0.0;     // max |R^H - lambda R^sigma|
    double diff = 0.0;       // |lambda - formula|
    double s_unit_dev = 0.0; // max distance of s, s' from {+1, -1}
};

inline RatioCheck check_ratio_formula(Cplx alpha, Cplx alpha2, int eps, int eps2, Cplx J, Cplx J2,
                                      Cplx q) {
    const Sl2NumericRep h1 = build_sl2_numeric(alpha);
    const Sl2NumericRep h2 = build_sl2_numeric(alpha2);
    const Gl11NumericRep g1 = build_gl11_numeric(q, alpha, eps, J);
    const Gl11NumericRep g2 = build_gl11_numeric(q, alpha2, eps2, J2);
    const CMat RH = braiding_numeric_sl2H(h1, h2);
    const CMat RS = braiding_numeric_gl11(g1, g2);

    // Pick lambda from the best-conditioned entry of R^sigma.
    std::size_t bi = 0, bj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (std::abs(RS(i, j)) > best) {
                best = std::abs(RS(i, j));
                bi = i;
                bj = j;
            }
    RatioCheck out;
    out.lambda = RH(bi, bj) / RS(bi, bj);
    out.spread = max_abs_diff(RH, RS * out.lambda);
    if (out.spread > 1e-4)
        throw NotProportional("check_ratio_formula: R^H and R^sigma not proportional, spread = " +
                              std::to_string(out.spread));

    out.s1 = std::exp(g1.j * std::log(q)) * ipow((alpha - 3.0 - 2.0 * eps) / 2.0);
    out.s2 = std::exp(g2.j * std::log(q)) * ipow((alpha2 - 3.0 - 2.0 * eps2) / 2.0);
    out.s_unit_dev = std::max(std::min(std::abs(out.s1 - 1.0), std::abs(out.s1 + 1.0)),
                              std::min(std::abs(out.s2 - 1.0), std::abs(out.s2 + 1.0)));
    out.formula = out.s1 * out.s2 * (eps * eps2 ? -1.0 : 1.0) * ipow(Cplx(eps + eps2)) *
                  ipow((alpha * alpha2 - 1.0) / 2.0) *
                  std::exp((g1.j * J2 + g2.j * J) * std::log(q));
    out.diff = std::abs(out.lambda - out.formula);
    return out;
}

/// Exact symbolic Yang-Baxter check on V (x) V (x) V:
/// (B (x) I)(I (x) B)(B (x) I) = (I (x) B)(B (x) I)(I (x) B).
inline bool check_yang_baxter(const RibbonData& rib) {
    const SparseOperator id = SparseOperator::identity(rib.dim, rib.var);
    const SparseOperator bi = SparseOperator::kron(rib.braiding, id);
    const SparseOperator ib = SparseOperator::kron(id, rib.braiding);
    return bi * ib * bi == ib * bi * ib;
}

/// Exact framing normalization: trace_2((Id (x) pivot) braiding) = Id.
inline bool check_framing_identity(const RibbonData& rib) {
    const std::uint64_t d = rib.dim;
    SparseOperator m(d, rib.var);
    for (std::uint64_t a0 = 0; a0 < d; ++a0)
        for (std::uint64_t b0 = 0; b0 < d; ++b0) {
            LaurentPoly acc(rib.var);
            for (std::uint64_t r = 0; r < d; ++r)
                acc.add_product(rib.pivot[static_cast<std::size_t>(r)],
                                rib.braiding.entry(a0 * d + r, b0 * d + r));
            m.add(a0, b0, acc);
        }
    return m == SparseOperator::identity(d, rib.var);
}

/// Exact braiding * braiding_inv = Id.
inline bool check_inverse_identity(const RibbonData& rib) {
    return rib.braiding * rib.braiding_inv ==
           SparseOperator::identity(rib.braiding.dim(), rib.var);
}

/// Numeric evaluation of a symbolic operator at a complex point.
inline CMat eval_operator(const SparseOperator& op, Cplx z) {
    CMat m(op.dim(), op.dim());
    for (std::uint64_t c = 0; c < op.dim(); ++c)
        for (const auto& [r, p] : op.column(c)) m(r, c) = p.eval_complex(z);
    return m;
}

/// Cross-validation of the two sl2 routes: the numeric twist-normalized
/// braiding tau R^H / theta_alpha against the symbolic braiding evaluated at
/// s = i^{-alpha-1}.
inline double check_sl2_numeric_vs_symbolic(Cplx alpha) {
    const Sl2NumericRep r = build_sl2_numeric(alpha);
    const Cplx theta = ipow((alpha * alpha - 1.0) / 2.0);
    const CMat numeric = switch_matrix() * braiding_numeric_sl2H(r, r) * (1.0 / theta);
    const CMat symbolic = eval_operator(build_sl2_ribbon().braiding, ipow(-alpha - 1.0));
    return max_abs_diff(numeric, symbolic);
}

/// One row of the check report.
struct CheckReport {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0; // 0 means the check is exact
    bool pass = false;
};

namespace detail {

/// Parameter sampler: complex draws from the annulus 0.5 < |z| < 2 with the
/// degenerate loci (a^2 = 1, q near {0, +-1}) rejected, and the derived
/// weight j kept small so that magnitudes like q^{jJ'} stay well inside
/// double precision.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    Cplx annulus() {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        while (true) {
            const Cplx z(u(rng_), u(rng_));
            const double m = std::abs(z);
            if (m > 0.5 && m < 2.0) return z;
        }
    }

    Cplx alpha() {
        while (true) {
            const Cplx z = annulus();
            const Cplx a = ipow(z + 1.0);
            if (std::abs(a * a - 1.0) > 0.3) return z;
        }
    }

    Cplx q() {
        while (true) {
            const Cplx z = annulus();
            if (std::abs(z - 1.0) > 0.3 && std::abs(z + 1.0) > 0.3) return z;
        }
    }

    int epsilon() { return static_cast<int>(rng_() & 1u); }

    /// (q, alpha, epsilon) with the principal-branch weight j bounded.
    std::tuple<Cplx, Cplx, int> matched_params() {
        while (true) {
            const Cplx qv = q();
            const Cplx av = alpha();
            const int ev = epsilon();
            const Cplx a = ipow(av + 1.0);
            const Cplx j = -std::log((ev ? -1.0 : 1.0) * a) / (2.0 * std::log(qv));
            if (std::abs(j) < 2.5) return {qv, av, ev};
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace detail

/// Run every check with a fixed seed; `samples` draws for the residual
/// checks and `ratio_samples` for the R^H / R^sigma comparison.
inline std::vector<CheckReport> run_all_checks(std::uint64_t seed, int samples,
                                               int ratio_samples = 50) {
    std::vector<CheckReport> out;
    detail::ParamSampler sampler(seed);
    const double tol = 1e-8;

    auto residual_check = [&](const std::string& name, int n, double tolerance, auto&& draw) {
        CheckReport rep{name, n, 0.0, tolerance, true};
        for (int i = 0; i < n; ++i) rep.max_residual = std::max(rep.max_residual, draw());
        rep.pass = rep.max_residual < tolerance || n == 0;
        out.push_back(rep);
    };

    residual_check("u_relations_sl2", samples, tol, [&] {
        return check_U_relations(build_sl2_numeric(sampler.alpha()));
    });
    residual_check("u_relations_gl11", samples, tol, [&] {
        const auto [qv, av, ev] = sampler.matched_params();
        return check_U_relations(build_gl11_numeric(qv, av, ev, sampler.annulus()));
    });
    residual_check("gl11_matches_sl2_entrywise", samples, tol, [&] {
        const auto [qv, av, ev] = sampler.matched_params();
        return check_U_match(build_sl2_numeric(av),
                             build_gl11_numeric(qv, av, ev, sampler.annulus()));
    });
    residual_check("dh_conjugation", samples, tol, [&] {
        const Cplx a1 = sampler.alpha();
        const Cplx a2 = sampler.alpha();
        return check_DH_conjugation(a1, a2);
    });
    residual_check("dsigma_conjugation", samples, tol, [&] {
        const auto [qv, a1, e1] = sampler.matched_params();
        Cplx a2;
        int e2 = 0;
        while (true) {
            a2 = sampler.alpha();
            e2 = sampler.epsilon();
            const Cplx a = ipow(a2 + 1.0);
            const Cplx j = -std::log((e2 ? -1.0 : 1.0) * a) / (2.0 * std::log(qv));
            if (std::abs(j) < 2.5) break;
        }
        const Cplx j1 = sampler.annulus();
        const Cplx j2 = sampler.annulus();
        return check_Dsigma_conjugation(build_gl11_numeric(qv, a1, e1, j1),
                                        build_gl11_numeric(qv, a2, e2, j2));
    });
    residual_check("sl2_numeric_vs_symbolic", samples, 1e-10,
                   [&] { return check_sl2_numeric_vs_symbolic(sampler.alpha()); });

    CheckReport spread{"ratio_proportionality", ratio_samples, 0.0, tol, true};
    CheckReport diff{"ratio_closed_form", ratio_samples, 0.0, tol, true};
    CheckReport sdev{"ratio_sign_is_unit", ratio_samples, 0.0, 1e-10, true};
    for (int i = 0; i < ratio_samples; ++i) {
        const auto [qv, a1, e1] = sampler.matched_params();
        Cplx a2;
        int e2 = 0;
        while (true) {
            a2 = sampler.alpha();
            e2 = sampler.epsilon();
            const Cplx a = ipow(a2 + 1.0);
            const Cplx j = -std::log((e2 ? -1.0 : 1.0) * a) / (2.0 * std::log(qv));
            if (std::abs(j) < 2.5) break;
        }
        const Cplx J1 = sampler.annulus();
        const Cplx J2 = sampler.annulus();
        const RatioCheck rc = check_ratio_formula(a1, a2, e1, e2, J1, J2, qv);
        spread.max_residual = std::max(spread.max_residual, rc.spread);
        diff.max_residual = std::max(diff.max_residual, rc.diff);
        sdev.max_residual = std::max(sdev.max_residual, rc.s_unit_dev);
    }
    spread.pass = spread.max_residual < spread.tolerance || ratio_samples == 0;
    diff.pass = diff.max_residual < diff.tolerance || ratio_samples == 0;
    sdev.pass = sdev.max_residual < sdev.tolerance || ratio_samples == 0;
    out.push_back(spread);
    out.push_back(diff);
    out.push_back(sdev);

    auto exact_check = [&](const std::string& name, bool ok) {
        out.push_back(CheckReport{name, 1, ok ? 0.0 : 1.0, 0.0, ok});
    };
    const RibbonData sl2 = build_sl2_ribbon();
    exact_check("yang_baxter_sl2", check_yang_baxter(sl2));
    exact_check("framing_sl2", check_framing_identity(sl2));
    exact_check("inverse_sl2", check_inverse_identity(sl2));
    for (int n = 1; n <= 3; ++n) {
        const RibbonData lg = build_lg_qm1_ribbon(n);
        const std::string suffix = "_lg" + std::to_string(n);
        exact_check("yang_baxter" + suffix, check_yang_baxter(lg));
        exact_check("framing" + suffix, check_framing_identity(lg));
        exact_check("inverse" + suffix, check_inverse_identity(lg));
    }
    return out;
}

} // namespace qlk

#endif // QLK_HOPFCHECK_HPP
