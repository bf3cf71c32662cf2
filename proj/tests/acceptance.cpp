// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every check is exact: equality on the nose or membership in the relation
// ideal at the recorded slack, never a numerical tolerance.
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "cpn/module_functor.hpp"
#include "cpn/state_map.hpp"
#include "cpn/suite.hpp"
#include "cpn/taut_bimodule.hpp"

using namespace cpn;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << what << note << "\n" << std::flush;
    if (!ok) ++failures;
}

const IdealDecider& ideal_for(int n) {
    static IdealDecider i2(2), i3(3);
    return n == 2 ? i2 : i3;
}

bool e_equiv(const EFormElement& a, const EFormElement& b, const IdealDecider& ideal) {
    return e_is_zero(a - b, ideal);
}

// trace condition holds, representation law fails; dimension 2 so the
// commutator of the actions survives (scalar actions always commute)
LeftModule non_representation(int n) {
    LeftModule m(n, 2);
    m.set_L(1, 1, 1, 1, GaussianRational(1));
    m.set_L(1, 1, 2, 2, GaussianRational(1));
    m.set_L(1, 2, 1, 2, GaussianRational(1));
    m.set_L(1, 2, 2, 1, GaussianRational(1));
    m.set_L(2, 1, 1, 1, GaussianRational(1));
    return m;
}

}  // namespace

int main() {
    criterion(1, "calculus laws hold at n = 2 and n = 3", [] {
        for (int n : {2, 3}) {
            SuiteConfig cfg;
            cfg.n = n;
            cfg.suite = "calculus";
            if (!run_suite(cfg).ok()) return false;
        }
        return true;
    });

    criterion(2, "connection laws hold for the canonical and a perturbed connection at n = 2 and n = 3", [] {
        for (int n : {2, 3}) {
            SuiteConfig cfg;
            cfg.n = n;
            cfg.suite = "connection";
            if (!run_suite(cfg).ok()) return false;
        }
        return true;
    });

    criterion(3, "curvature matches its closed forms; its left-module defect has the expected shape", [] {
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            GammaField X = X_field(gamma);
            // contracted coefficient table equals the closed form
            for (int p = 1; p <= n; ++p)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        Form contracted(n);
                        for (int q = 1; q <= n; ++q) contracted += ScalarPoly::cv(n, q) * X.at(p, q, i, j);
                        Form closed = ScalarPoly::cv(n, j) * wedge(Form::d_gen(n, p, true), Form::d_gen(n, i, false));
                        if (!ideal.is_zero(contracted - closed)) return false;
                    }
            // curvature of each generator equals its closed form
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    EFormElement r = curvature_R_E(gamma, X, EFormElement::generator(n, i, j));
                    EFormElement closed(n, 2);
                    for (int p = 1; p <= n; ++p)
                        closed.add(p, ScalarPoly::cv(n, j) * wedge(Form::d_gen(n, p, true), Form::d_gen(n, i, false)));
                    if (!e_equiv(r, closed, ideal)) return false;
                }
            // left-module defect, all index tuples; visible only where
            // 2-forms survive, so it must be nonzero somewhere at n = 3
            bool some_defect_nonzero = false;
            for (int r = 1; r <= n; ++r)
                for (int t = 1; t <= n; ++t)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            MatTensor a = MatTensor::unit(n, r, t);
                            EFormElement x = EFormElement::generator(n, i, j);
                            EFormElement defect = curvature_R_E(gamma, X, act(a, x)) - act(a, curvature_R_E(gamma, X, x));
                            EFormElement expected(n, 2);
                            for (int p = 1; p <= n; ++p)
                                for (int q = 1; q <= n; ++q) {
                                    if (t == i) expected.add(p, ScalarPoly::cv(n, q) * X.at(p, q, r, j));
                                    if (t == p) expected.add(r, -(ScalarPoly::cv(n, q) * X.at(p, q, i, j)));
                                }
                            if (!e_equiv(defect, expected, ideal)) return false;
                            if (!e_is_zero(defect, ideal)) some_defect_nonzero = true;
                        }
            if (some_defect_nonzero != (n >= 3)) return false;
        }
        return true;
    });

    criterion(4, "closed and recursive braiding extensions agree on universal forms", [] {
        std::mt19937 rng(67);
        {
            int n = 2;
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            std::uniform_int_distribution<int> idx(1, n);
            for (int m = 1; m <= 3; ++m)
                for (const MatTensor& xi : uni_basis(m, n)) {
                    EFormElement x = EFormElement::generator(n, idx(rng), idx(rng));
                    if (!e_equiv(sigma_hat(gamma, xi, x), sigma_hat_recursive(gamma, xi, x), ideal)) return false;
                }
        }
        {
            int n = 3;
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            std::uniform_int_distribution<int> idx(1, n);
            for (int m = 1; m <= 2; ++m) {
                auto basis = uni_basis(m, n);
                std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
                for (int t = 0; t < 6; ++t) {
                    const MatTensor& xi = basis[pick(rng)];
                    EFormElement x = EFormElement::generator(n, idx(rng), idx(rng));
                    if (!e_equiv(sigma_hat(gamma, xi, x), sigma_hat_recursive(gamma, xi, x), ideal)) return false;
                }
            }
        }
        return true;
    });

    criterion(5, "full-d identity holds with its correction, whose closed form is certified nonzero", [] {
        // identity sweep on degree-1 and degree-2 universal forms at n = 2
        {
            int n = 2;
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            GammaField X = X_field(gamma);
            for (int m : {1, 2})
                for (const MatTensor& xi : uni_basis(m, n)) {
                    Form lhs = d(phi_forms(gamma, xi)) - phi_forms(gamma, d_uni(xi));
                    Form corr = d_cochain_defect(gamma, X, xi);
                    if (xi.k() % 2 != 0) corr = -corr;
                    if (!ideal.is_zero(lhs - corr)) return false;
                }
        }
        // closed form of the two-factor correction and its nonzero
        // certification; the term is a 2-form, so it can only survive where
        // 2-forms do, i.e. at n = 3, not on the projective line
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            GammaField X = X_field(gamma);
            bool some_nonzero = false;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int r = 1; r <= n; ++r)
                        for (int t = 1; t <= n; ++t) {
                            MatTensor xi = tensor(MatTensor::unit(n, a, b), MatTensor::unit(n, r, t));
                            Form defect = d_cochain_defect(gamma, X, xi);
                            Form closed = (ScalarPoly::v(n, a) * ScalarPoly::cv(n, t)) *
                                          wedge(Form::d_gen(n, b, true), Form::d_gen(n, r, false));
                            if (!ideal.is_zero(defect - closed)) return false;
                            if (b != r && !ideal.member(defect, 2)) some_nonzero = true;
                        }
            if (some_nonzero != (n >= 3)) return false;
        }
        return true;
    });

    criterion(6, "antiholomorphic evaluation is a cochain map; the unprojected one fails with a witness", [] {
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            CochainReport dbar = dbar_cochain_check(gamma, n == 2 ? 2 : 2, ideal);
            if (!dbar.ok) return false;
            CochainReport full = d_cochain_check(gamma, 2, ideal);
            // degenerate pass on the projective line, where every 2-form is
            // in the ideal; genuine failure with a reproducible witness at n = 3
            if (full.ok != (n == 2)) return false;
            if (!full.ok) {
                if (full.witness_xi.empty()) return false;
                Form gap = Form::parse(n, full.witness_lhs) - Form::parse(n, full.witness_rhs);
                if (ideal.is_zero(gap)) return false;
            }
        }
        return true;
    });

    criterion(7, "row-module connection satisfies the right Leibniz identity for both standard modules", [] {
        for (int n : {2, 3}) {
            for (const LeftModule& V : {LeftModule::fundamental(n),
                                        LeftModule::direct_sum(LeftModule::fundamental(n), LeftModule::fundamental(n))}) {
                for (int w = 1; w <= V.dim(); ++w)
                    for (int i = 1; i <= n; ++i) {
                        FElement x = FElement::basis(V.dim(), n, w, i);
                        for (int s = 1; s <= n; ++s)
                            for (int t = 1; t <= n; ++t) {
                                FElement lhs = nabla_F(V, f_act(x, s, t));
                                FElement rhs = f_act(nabla_F(V, x), s, t) + f_append_d(x, s, t);
                                if (lhs != rhs) return false;
                            }
                    }
            }
        }
        return true;
    });

    criterion(8, "(0,2) curvature vanishes for representations and survives for the counterexample", [] {
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            LeftModule fund = LeftModule::fundamental(n);
            LeftModule sum = LeftModule::direct_sum(fund, fund);
            if (!pi02_flat(fund, gamma, ideal) || !pi02_flat(sum, gamma, ideal)) return false;
            if (!holomorphic_check(fund, ideal) || !holomorphic_check(sum, ideal)) return false;
        }
        // the maintained counterexample: trace condition holds, the
        // representation law fails, and the obstruction is nonzero where
        // 2-forms survive
        LeftModule bad = non_representation(3);
        if (!bad.trace_condition() || bad.representation()) return false;
        if (pi02_flat(bad, gamma_simple(3), ideal_for(3))) return false;
        return true;
    });

    criterion(9, "whole-sum (0,2) curvature agrees on two lifts and with the direct computation", [] {
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            GammaField gamma = gamma_simple(n);
            LeftModule V = LeftModule::fundamental(n);
            int dim = V.dim();
            for (int w = 1; w <= dim; ++w)
                for (int j = 1; j <= n; ++j) {
                    std::vector<Form> direct = pi02_curvature(V, gamma, w, j);
                    for (int lift : {1, 2})
                        for (int u = 1; u <= dim; ++u) {
                            Form closed(n);
                            for (int c = 1; c <= n; ++c) closed += pi02_closed_term(V, w, lift, lift, u, c, c);
                            closed = ScalarPoly::cv(n, j) * closed;
                            if (!ideal.is_zero(direct[u - 1] - closed)) return false;
                        }
                }
            // the curvature of the row-module connection is a right-module map
            for (int w = 1; w <= dim; ++w)
                for (int i = 1; i <= n; ++i) {
                    FElement x = FElement::basis(dim, n, w, i);
                    for (int s = 1; s <= n; ++s)
                        for (int t = 1; t <= n; ++t)
                            if (curvature_F(V, f_act(x, s, t)) != f_act(curvature_F(V, x), s, t)) return false;
                }
        }
        return true;
    });

    criterion(10, "module maps commute with the induced connections (identity and inclusion)", [] {
        for (int n : {2, 3}) {
            const IdealDecider& ideal = ideal_for(n);
            LeftModule fund = LeftModule::fundamental(n);
            LeftModule sum = LeftModule::direct_sum(fund, fund);
            std::vector<std::vector<GaussianRational>> id(n, std::vector<GaussianRational>(n, GaussianRational(0)));
            for (int i = 0; i < n; ++i) id[i][i] = GaussianRational(1);
            if (!functor_check(id, fund, fund, ideal)) return false;
            std::vector<std::vector<GaussianRational>> incl(2 * n,
                                                            std::vector<GaussianRational>(n, GaussianRational(0)));
            for (int i = 0; i < n; ++i) incl[i][i] = GaussianRational(1);
            if (!functor_check(incl, fund, sum, ideal)) return false;
        }
        return true;
    });

    criterion(11, "line-bundle projection is invariant for the section inner product, with null complement", [] {
        std::mt19937 rng(73);
        for (int n : {2, 3}) {
            std::uniform_int_distribution<int> idx(1, n), coef(-2, 2);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<GaussianRational> c(n, GaussianRational(0));
                c[idx(rng) - 1] = GaussianRational(Rational(coef(rng)), Rational(coef(rng)));
                std::vector<ScalarPoly> r(n, ScalarPoly::zero(n));
                for (int a = 0; a < n; ++a) {
                    GaussianRational k(Rational(coef(rng)), Rational(coef(rng)));
                    r[a] = ScalarPoly::v(n, idx(rng)) * ScalarPoly::cv(n, idx(rng)) * ScalarPoly::constant(n, k);
                }
                std::vector<ScalarPoly> rp = apply_P(r);
                if (!(ksgns_inner(c, rp, c, rp) == ksgns_inner(c, r, c, r))) return false;
                if (!(ksgns_inner(c, r, c, rp) == ksgns_inner(c, r, c, r))) return false;
                std::vector<ScalarPoly> diff(n, ScalarPoly::zero(n));
                for (int a = 0; a < n; ++a) diff[a] = r[a] - rp[a];
                if (!ksgns_inner(c, diff, c, diff).is_zero()) return false;
                if (!ksgns_inner(c, diff, c, r).is_zero()) return false;
            }
        }
        return true;
    });

    criterion(12, "full suite passes at n = 2; reports round-trip; canonical dumps byte-match", [] {
        SuiteConfig cfg;
        cfg.n = 2;
        cfg.suite = "all";
        SuiteReport report = run_suite(cfg);
        if (!report.ok() || report.any_failure()) return false;
        std::string text = report_to_json(report);
        if (report_to_json(report_from_json(text)) != text) return false;
        GammaField gamma = gamma_simple(2);
        if (phi_forms(gamma, MatTensor::parse(2, "E[1,1]")).str() != "v1*cv1") return false;
        if (phi_forms(gamma, MatTensor::parse(2, "E[1,2]")).str() != "v1*cv2") return false;
        if (wedge(Form::d_gen(2, 1, true), Form::d_gen(2, 2, false)).str() != "dcv1^dv2") return false;
        if (gamma.at(1, 1, 2, 1).str() != "-v1*v2*cv1*dcv1+v1*cv1*cv1*dv2") return false;
        return true;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
