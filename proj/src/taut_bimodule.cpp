#include "cpn/taut_bimodule.hpp"

#include <stdexcept>

namespace cpn {

namespace {

ScalarPoly Q(int n, int i, int j) { return ScalarPoly::v(n, i) * ScalarPoly::cv(n, j); }

Form dvf(int n, int i) { return Form::d_gen(n, i, false); }
Form dcvf(int n, int i) { return Form::d_gen(n, i, true); }

}  // namespace

EFormElement EFormElement::vacuum(int n) {
    EFormElement e(n, 0);
    for (int i = 1; i <= n; ++i) e.add(i, Form::scalar(ScalarPoly::cv(n, i)));
    return e;
}

EFormElement EFormElement::generator(int n, int i, int j) {
    EFormElement e(n, 0);
    e.add(i, Form::scalar(ScalarPoly::cv(n, j)));
    return e;
}

bool EFormElement::is_syntactically_zero() const {
    for (const auto& f : comps_)
        if (!f.is_syntactically_zero()) return false;
    return true;
}

void EFormElement::add(int i, const Form& f) {
    if (f.is_syntactically_zero()) return;
    auto g = f.grade();
    if (!g || *g != -1) throw std::invalid_argument("EFormElement: component must have pure grade -1");
    for (const auto& [w, c] : f.terms())
        if (w.degree() != degree_) throw std::invalid_argument("EFormElement: component degree mismatch");
    comps_.at(i - 1) += f;
}

EFormElement EFormElement::operator-() const {
    EFormElement out(n_, degree_);
    for (int i = 0; i < n_; ++i) out.comps_[i] = -comps_[i];
    return out;
}

EFormElement& EFormElement::operator+=(const EFormElement& o) {
    if (o.n_ != n_ || (o.degree_ != degree_ && !o.is_syntactically_zero()))
        throw std::invalid_argument("EFormElement: shape mismatch in +");
    for (int i = 0; i < n_; ++i) comps_[i] += o.comps_[i];
    return *this;
}

EFormElement& EFormElement::operator-=(const EFormElement& o) { return *this += -o; }

EFormElement act(const MatTensor& a, const EFormElement& x) {
    if (a.k() != 1) throw std::invalid_argument("act: expects a length-1 tensor");
    EFormElement out(x.n(), x.degree());
    for (const auto& [t, c] : a.terms()) out.add(t[0], x.comp(t[1]) * c);
    return out;
}

EFormElement mul_right(const EFormElement& x, const Form& f) {
    EFormElement out(x.n(), x.degree() + f.degree());
    for (int i = 1; i <= x.n(); ++i) out.add(i, wedge(x.comp(i), f));
    return out;
}

bool e_is_zero(const EFormElement& x, const IdealDecider& ideal) {
    for (int i = 1; i <= x.n(); ++i)
        if (!ideal.is_zero(x.comp(i))) return false;
    return true;
}

GammaField gamma_simple(int n) {
    GammaField gamma(n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s) {
                    ScalarPoly vq = ScalarPoly::v(n, q);
                    ScalarPoly cvs = ScalarPoly::cv(n, s);
                    Form f(n);
                    if (p == r) f += vq * dcvf(n, s);
                    f -= (vq * cvs * ScalarPoly::v(n, r)) * dcvf(n, p);
                    f += (vq * cvs * ScalarPoly::cv(n, p)) * dvf(n, r);
                    gamma.set(p, q, r, s, std::move(f));
                }
    return gamma;
}

bool g_matrix_valid(const GMatrix& G, const IdealDecider& ideal) {
    int n = G.n();
    for (int p = 1; p <= n; ++p) {
        Form row_cv(n);
        for (int i = 1; i <= n; ++i) row_cv += ScalarPoly::cv(n, i) * G.at(p, i);
        if (!ideal.is_zero(row_cv)) return false;
        for (int i = 1; i <= n; ++i)
            if (!ideal.is_zero(star_form(G.at(i, p)) + G.at(p, i))) return false;
    }
    return true;
}

GammaField gamma_from_G(const GMatrix& G, const IdealDecider& ideal) {
    if (!g_matrix_valid(G, ideal)) throw std::invalid_argument("gamma_from_G: G violates its invariants");
    int n = G.n();
    // D_{pi} = -dcv_p·v_i + dv_i·cv_p + G_{pi}
    std::vector<Form> D(static_cast<std::size_t>(n) * n, Form(n));
    for (int p = 1; p <= n; ++p)
        for (int i = 1; i <= n; ++i) {
            Form f = -(ScalarPoly::v(n, i) * dcvf(n, p)) + ScalarPoly::cv(n, p) * dvf(n, i) + G.at(p, i);
            D[(p - 1) * n + (i - 1)] = std::move(f);
        }
    GammaField gamma(n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s) {
                    // C^p_{rs} = δ_{pr}·dcv_s + D_{pr}·cv_s
                    Form C(n);
                    if (p == r) C += dcvf(n, s);
                    C += ScalarPoly::cv(n, s) * D[(p - 1) * n + (r - 1)];
                    gamma.set(p, q, r, s, ScalarPoly::v(n, q) * C);
                }
    return gamma;
}

GMatrix example_G(int n) {
    // H anti-Hermitian with a single nonzero entry, framed by the
    // projector δ − cv·v so that G·cv vanishes identically
    GMatrix G(n);
    Form H11 = ScalarPoly::cv(n, 1) * dvf(n, 1) - ScalarPoly::v(n, 1) * dcvf(n, 1);
    for (int p = 1; p <= n; ++p)
        for (int i = 1; i <= n; ++i) {
            ScalarPoly left = p == 1 ? ScalarPoly::one(n) : ScalarPoly::zero(n);
            left -= ScalarPoly::cv(n, p) * ScalarPoly::v(n, 1);
            ScalarPoly right = i == 1 ? ScalarPoly::one(n) : ScalarPoly::zero(n);
            right -= ScalarPoly::cv(n, 1) * ScalarPoly::v(n, i);
            G.set(p, i, (left * right) * H11);
        }
    return G;
}

bool gauge_check(const GammaField& gamma, const IdealDecider& ideal) {
    int n = gamma.n();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Form rhs(n);
                    for (int s = 1; s <= n; ++s) rhs += Q(n, q, s) * gamma.at(p, s, i, j);
                    if (!ideal.is_zero(gamma.at(p, q, i, j) - rhs)) return false;
                }
    return true;
}

bool right_connection_check(const GammaField& gamma, const IdealDecider& ideal) {
    int n = gamma.n();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k) {
                    Form lhs(n);
                    for (int j = 1; j <= n; ++j) {
                        ScalarPoly factor = (j == k ? ScalarPoly::one(n) : ScalarPoly::zero(n)) - Q(n, j, k);
                        lhs += factor * gamma.at(p, q, i, j);
                    }
                    Form rhs(n);
                    if (p == i)
                        for (int j = 1; j <= n; ++j) rhs += Q(n, q, j) * d(Form::scalar(Q(n, j, k)));
                    if (!ideal.is_zero(lhs - rhs)) return false;
                }
    return true;
}

bool ip_preservation_check(const GammaField& gamma, const IdealDecider& ideal) {
    int n = gamma.n();
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Form lhs(n);
                    if (i == s) lhs = d(Form::scalar(ScalarPoly::v(n, t) * ScalarPoly::cv(n, j)));
                    Form rhs(n);
                    for (int q = 1; q <= n; ++q) {
                        rhs += (ScalarPoly::v(n, t) * ScalarPoly::cv(n, q)) * gamma.at(s, q, i, j);
                        rhs += (ScalarPoly::v(n, q) * ScalarPoly::cv(n, j)) * star_form(gamma.at(i, q, s, t));
                    }
                    if (!ideal.is_zero(lhs - rhs)) return false;
                }
    return true;
}

bool vacuum_flat_check(const GammaField& gamma, const IdealDecider& ideal) {
    int n = gamma.n();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            Form sum(n);
            for (int i = 1; i <= n; ++i) sum += gamma.at(p, q, i, i);
            if (!ideal.is_zero(sum)) return false;
        }
    return true;
}

// Each coefficient monomial donates one literal cv factor (the smallest
// index present), so f = cv_j yields the presentation (j, 1) exactly; a
// monomial with no cv factor falls back to cv_j·(v_j·m) over all j, which
// is also syntactically exact since Σ_j v_j·cv_j reduces to 1.
std::map<int, Form> present_tautological(const Form& f) {
    int n = f.n();
    std::map<int, Form> out;
    for (const auto& [w, c] : f.terms()) {
        for (const auto& [m, k] : c.terms()) {
            int j = 0;
            for (int idx = 1; idx <= n; ++idx)
                if (m.beta[idx - 1] > 0) {
                    j = idx;
                    break;
                }
            if (j > 0) {
                VMonomial m2 = m;
                --m2.beta[j - 1];
                auto [it, inserted] = out.try_emplace(j, Form(n));
                it->second.add_term(w.gens, ScalarPoly::monomial(m2, k));
            } else {
                for (int idx = 1; idx <= n; ++idx) {
                    ScalarPoly g = ScalarPoly::v(n, idx) * ScalarPoly::monomial(m, k);
                    auto [it, inserted] = out.try_emplace(idx, Form(n));
                    it->second.add_term(w.gens, g);
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_syntactically_zero() ? out.erase(it) : std::next(it);
    return out;
}

EFormElement nabla_E(const GammaField& gamma, const EFormElement& x) {
    int n = x.n();
    EFormElement out(n, x.degree() + 1);
    for (int i = 1; i <= n; ++i) {
        const Form& f = x.comp(i);
        if (f.is_syntactically_zero()) continue;
        for (const auto& [j, g] : present_tautological(f)) {
            for (int p = 1; p <= n; ++p) {
                Form acc(n);
                for (int q = 1; q <= n; ++q) acc += ScalarPoly::cv(n, q) * gamma.at(p, q, i, j);
                out.add(p, wedge(acc, g));
            }
            out.add(i, ScalarPoly::cv(n, j) * d(g));
        }
    }
    return out;
}

GammaField X_field(const GammaField& gamma) {
    int n = gamma.n();
    GammaField X(n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Form f = d(gamma.at(p, q, i, j));
                    for (int s = 1; s <= n; ++s)
                        for (int t = 1; t <= n; ++t) f += wedge(gamma.at(p, q, s, t), gamma.at(s, t, i, j));
                    X.set(p, q, i, j, std::move(f));
                }
    return X;
}

EFormElement curvature_R_E(const GammaField& gamma, const GammaField& X, const EFormElement& x) {
    (void)gamma;
    int n = x.n();
    EFormElement out(n, x.degree() + 2);
    for (int i = 1; i <= n; ++i) {
        const Form& f = x.comp(i);
        if (f.is_syntactically_zero()) continue;
        for (const auto& [j, g] : present_tautological(f)) {
            for (int p = 1; p <= n; ++p) {
                Form acc(n);
                for (int q = 1; q <= n; ++q) acc += ScalarPoly::cv(n, q) * X.at(p, q, i, j);
                out.add(p, wedge(acc, g));
            }
        }
    }
    return out;
}

namespace {

// Σ over q2..q_{m-1} of tbl[0]^{b1 q1}_{a2 q2} ∧ ... ∧ tbl[m-2]^{b_{m-1} q_{m-1}}_{a_m j},
// returned per q1. tuple is the flat (a1,b1,...,am,bm) index list.
std::vector<Form> chain_per_q1(const std::vector<const GammaField*>& tbl, const std::vector<int>& tuple, int j,
                               int n) {
    int m = static_cast<int>(tuple.size()) / 2;
    std::vector<Form> out(static_cast<std::size_t>(n) + 1, Form(n));
    auto rec = [&](auto&& self, int slot, int q_prev, const Form& acc, int q1) -> void {
        // slot runs 1..m-1; factor s is tbl[s-1]^{b_s q_s}_{a_{s+1} q_{s+1}}, q_m = j
        if (slot == m) {
            out[q1] += acc;
            return;
        }
        int b = tuple[2 * slot - 1];
        int a_next = tuple[2 * slot];
        if (slot == m - 1) {
            self(self, slot + 1, j, wedge(acc, tbl[slot - 1]->at(b, q_prev, a_next, j)), q1);
            return;
        }
        for (int q = 1; q <= n; ++q)
            self(self, slot + 1, q, wedge(acc, tbl[slot - 1]->at(b, q_prev, a_next, q)), q1);
    };
    if (m == 1) {
        // empty chain: identity against q1 = j
        out[j] += Form::scalar(ScalarPoly::one(n));
        return out;
    }
    for (int q1 = 1; q1 <= n; ++q1) rec(rec, 1, q1, Form::scalar(ScalarPoly::one(n)), q1);
    return out;
}

EFormElement chain_apply(const std::vector<const GammaField*>& tbl, const MatTensor& xi, const EFormElement& x,
                         int extra_degree, const GaussianRational& scale) {
    int n = x.n();
    int m = xi.k();
    EFormElement out(n, x.degree() + extra_degree);
    for (const auto& [tuple, c] : xi.terms()) {
        int a1 = tuple[0], bm = tuple[2 * m - 1];
        const Form& f = x.comp(bm);
        if (f.is_syntactically_zero()) continue;
        for (const auto& [j, g] : present_tautological(f)) {
            std::vector<Form> per_q1 = chain_per_q1(tbl, tuple, j, n);
            Form acc(n);
            for (int q1 = 1; q1 <= n; ++q1) acc += ScalarPoly::cv(n, q1) * per_q1[q1];
            out.add(a1, wedge(acc, g) * (c * scale));
        }
    }
    return out;
}

}  // namespace

EFormElement sigma_hat(const GammaField& gamma, const MatTensor& xi, const EFormElement& x) {
    std::vector<const GammaField*> tbl(static_cast<std::size_t>(std::max(0, xi.k() - 1)), &gamma);
    return chain_apply(tbl, xi, x, xi.k() - 1, GaussianRational(1));
}

EFormElement sigma_hat_recursive(const GammaField& gamma, const MatTensor& xi, const EFormElement& x) {
    int m = xi.k();
    if (m <= 2) return sigma_hat(gamma, xi, x);
    int n = x.n();
    EFormElement out(n, x.degree() + m - 1);
    for (const auto& [tuple, c] : xi.terms()) {
        MatTensor pair(n, 2);
        pair.add_term({tuple[0], tuple[1], tuple[2], tuple[3]}, c);
        MatTensor rest(n, m - 2);
        rest.add_term(std::vector<int>(tuple.begin() + 4, tuple.end()), GaussianRational(1));
        MatTensor eta = tensor(MatTensor::identity(n), rest);
        out += sigma_hat(gamma, pair, sigma_hat_recursive(gamma, eta, x));
    }
    return out;
}

EFormElement S_hat(const GammaField& gamma, const GammaField& X, const MatTensor& xi, const EFormElement& x) {
    int m = xi.k();
    if (m < 2) throw std::invalid_argument("S_hat: needs tensor length >= 2");
    EFormElement out(x.n(), x.degree() + m);
    for (int slot = 1; slot <= m - 1; ++slot) {
        std::vector<const GammaField*> tbl(static_cast<std::size_t>(m - 1), &gamma);
        tbl[slot - 1] = &X;
        int sign = ((m - 1 - slot) % 2 == 0) ? 1 : -1;
        out += chain_apply(tbl, xi, x, m, GaussianRational(sign));
    }
    return out;
}

EFormElement S_hat_definitional(const GammaField& gamma, const MatTensor& xi, const EFormElement& x) {
    int m = xi.k();
    int sgn = ((m - 1) % 2 == 0) ? 1 : -1;
    EFormElement t1 = sigma_hat(gamma, xi, nabla_E(gamma, x));
    EFormElement t2 = nabla_E(gamma, sigma_hat(gamma, xi, x));
    EFormElement t3 = sigma_hat(gamma, d_uni(xi), x);
    EFormElement out = t1;
    if (sgn > 0) {
        out -= t2;
        out += t3;
    } else {
        out += t2;
        out -= t3;
    }
    return out;
}

Form inner_form(const EFormElement& x, const EFormElement& y) {
    if (x.degree() != 0) throw std::invalid_argument("inner_form: left argument must have degree 0");
    Form out(x.n());
    for (int i = 1; i <= x.n(); ++i) out += wedge(star_form(x.comp(i)), y.comp(i));
    return out;
}

ScalarPoly ksgns_inner(const std::vector<GaussianRational>& c1, const std::vector<ScalarPoly>& r1,
                       const std::vector<GaussianRational>& c2, const std::vector<ScalarPoly>& r2) {
    int n = static_cast<int>(r1.size());
    GaussianRational cdot(0);
    for (std::size_t k = 0; k < c1.size(); ++k) cdot += c1[k].conj() * c2[k];
    ScalarPoly left = ScalarPoly::zero(n), right = ScalarPoly::zero(n);
    for (int a = 1; a <= n; ++a) {
        left += ScalarPoly::v(n, a) * r1[a - 1].star();
        right += r2[a - 1] * ScalarPoly::cv(n, a);
    }
    return (left * right) * cdot;
}

std::vector<ScalarPoly> apply_P(const std::vector<ScalarPoly>& r) {
    int n = static_cast<int>(r.size());
    std::vector<ScalarPoly> out(n, ScalarPoly::zero(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) out[j - 1] += r[i - 1] * ScalarPoly::cv(n, i) * ScalarPoly::v(n, j);
    return out;
}

}  // namespace cpn
