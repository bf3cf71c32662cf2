#include "cpn/state_map.hpp"

#include <stdexcept>

namespace cpn {

ScalarPoly phi0(const MatTensor& a) {
    if (a.k() != 1) throw std::invalid_argument("phi0: expects a length-1 tensor");
    int n = a.n();
    ScalarPoly out(n);
    for (const auto& [t, c] : a.terms()) out += (ScalarPoly::v(n, t[0]) * ScalarPoly::cv(n, t[1])) * c;
    return out;
}

Form phi_forms(const GammaField& gamma, const MatTensor& xi) {
    int n = gamma.n();
    if (xi.n() != n) throw std::invalid_argument("phi_forms: dimension mismatch");
    int m = xi.k();
    if (m < 1) throw std::invalid_argument("phi_forms: expects a length >= 1 tensor");
    Form out(n);
    if (m == 1) return Form::scalar(phi0(xi));
    for (const auto& [t, c] : xi.terms()) {
        // t = (a1, b1, ..., am, bm); internal chain indices q1..q_{m-1},
        // with the final lower pair fixed at (a_m, b_m)
        std::vector<int> q(m - 1, 1);
        while (true) {
            Form chain = Form::scalar(ScalarPoly::one(n));
            for (int s = 1; s <= m - 1; ++s) {
                int q_next = (s == m - 1) ? t[2 * m - 1] : q[s];
                chain = wedge(chain, gamma.at(t[2 * s - 1], q[s - 1], t[2 * s], q_next));
            }
            ScalarPoly pre = ScalarPoly::v(n, t[0]) * ScalarPoly::cv(n, q[0]);
            out += pre * (chain * c);
            int j = m - 2;
            while (j >= 0 && ++q[j] > n) q[j--] = 1;
            if (j < 0) break;
        }
    }
    return out;
}

Form phi_definitional(const GammaField& gamma, const MatTensor& xi) {
    EFormElement e = EFormElement::vacuum(gamma.n());
    return inner_form(e, sigma_hat(gamma, xi, e));
}

Form d_cochain_defect(const GammaField& gamma, const GammaField& X, const MatTensor& xi) {
    if (xi.k() < 2) throw std::invalid_argument("d_cochain_defect: expects a length >= 2 tensor");
    EFormElement e = EFormElement::vacuum(gamma.n());
    return inner_form(e, S_hat(gamma, X, xi, e));
}

namespace {

CochainReport cochain_sweep(const GammaField& gamma, int m_max, bool project, const IdealDecider& ideal) {
    int n = gamma.n();
    CochainReport rep;
    for (int m = 1; m <= m_max; ++m) {
        for (const MatTensor& xi : uni_basis(m - 1, n)) {
            Form lhs = d(phi_forms(gamma, xi));
            Form rhs = phi_forms(gamma, d_uni(xi));
            if (project) {
                lhs = pi_pq(lhs, 0, m);
                rhs = pi_pq(rhs, 0, m);
            }
            if (!ideal.is_zero(lhs - rhs)) {
                rep.ok = false;
                rep.witness_xi = xi.str();
                rep.witness_lhs = lhs.str();
                rep.witness_rhs = rhs.str();
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

CochainReport dbar_cochain_check(const GammaField& gamma, int m_max, const IdealDecider& ideal) {
    return cochain_sweep(gamma, m_max, true, ideal);
}

CochainReport d_cochain_check(const GammaField& gamma, int m_max, const IdealDecider& ideal) {
    return cochain_sweep(gamma, m_max, false, ideal);
}

}  // namespace cpn
