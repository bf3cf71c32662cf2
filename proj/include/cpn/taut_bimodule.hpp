#pragma once

#include <vector>

#include "cpn/form.hpp"
#include "cpn/ideal.hpp"
#include "cpn/mat_tensor.hpp"

namespace cpn {

/// Element of E⊗Ω^k: n components, component i the coefficient form of the
/// basis column h_i. Every component has pure grade −1 (or is zero) and all
/// share one form degree k; k = 0 gives E itself.
class EFormElement {
public:
    EFormElement(int n, int degree) : n_(n), degree_(degree), comps_(n, Form(n)) {}

    /// e = Σ_i h_i ⊗ cv_i, the cyclic vector of the state construction
    static EFormElement vacuum(int n);
    /// h_i ⊗ cv_j
    static EFormElement generator(int n, int i, int j);

    int n() const { return n_; }
    int degree() const { return degree_; }
    bool is_syntactically_zero() const;

    const Form& comp(int i) const { return comps_.at(i - 1); }
    /// Adds f into component i; rejects grade or degree violations.
    void add(int i, const Form& f);

    EFormElement operator-() const;
    EFormElement& operator+=(const EFormElement& o);
    EFormElement& operator-=(const EFormElement& o);
    friend EFormElement operator+(EFormElement a, const EFormElement& b) { return a += b; }
    friend EFormElement operator-(EFormElement a, const EFormElement& b) { return a -= b; }

private:
    int n_, degree_;
    std::vector<Form> comps_;
};

/// Left action of a matrix (length-1 tensor) on the column leg.
EFormElement act(const MatTensor& a, const EFormElement& x);

/// Right multiplication by a grade-0 form (wedged on the right).
EFormElement mul_right(const EFormElement& x, const Form& f);

/// Componentwise ideal-membership test.
bool e_is_zero(const EFormElement& x, const IdealDecider& ideal);

/// Table of n⁴ forms Γ^{pq}_{ij}; also reused for the curvature table X.
class GammaField {
public:
    explicit GammaField(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n * n * n, Form(n)) {}

    int n() const { return n_; }
    const Form& at(int p, int q, int i, int j) const { return entries_[idx(p, q, i, j)]; }
    void set(int p, int q, int i, int j, Form f) { entries_[idx(p, q, i, j)] = std::move(f); }

private:
    std::size_t idx(int p, int q, int i, int j) const {
        return ((static_cast<std::size_t>(p - 1) * n_ + (q - 1)) * n_ + (i - 1)) * n_ + (j - 1);
    }
    int n_;
    std::vector<Form> entries_;
};

/// n×n matrix of 1-forms parametrizing the residual connection freedom.
class GMatrix {
public:
    explicit GMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, Form(n)) {}

    int n() const { return n_; }
    const Form& at(int p, int i) const { return entries_[(p - 1) * static_cast<std::size_t>(n_) + (i - 1)]; }
    void set(int p, int i, Form f) { entries_[(p - 1) * static_cast<std::size_t>(n_) + (i - 1)] = std::move(f); }

private:
    int n_;
    std::vector<Form> entries_;
};

/// The G = 0 connection: Γ^{pq}_{rs} = v_q(δ_{pr}·dcv_s − cv_s·v_r·dcv_p + cv_s·cv_p·dv_r).
GammaField gamma_simple(int n);

/// Validity of G: G·cv = 0 and G* = −G, both modulo the ideal.
bool g_matrix_valid(const GMatrix& G, const IdealDecider& ideal);

/// Γ^{pq}_{rs} = v_q·C^p_{rs} with C^p_{ik} = δ_{pi}·dcv_k + D_{pi}·cv_k and
/// D_{pi} = −dcv_p·v_i + dv_i·cv_p + G_{pi}. Rejects invalid G.
GammaField gamma_from_G(const GMatrix& G, const IdealDecider& ideal);

/// A nonzero valid G: a projector sandwich (δ−cv·v)·H·(δ−cv·v) around an
/// anti-Hermitian 1-form matrix H.
GMatrix example_G(int n);

/// Gauge condition Γ^{pq}_{ij} = Q_{qs}·Γ^{ps}_{ij} modulo the ideal.
bool gauge_check(const GammaField& gamma, const IdealDecider& ideal);
/// Right-connection condition Γ^{pq}_{ij}(δ_{jk}−Q_{jk}) = δ_{pi}·Q_{qj}·dQ_{jk}.
bool right_connection_check(const GammaField& gamma, const IdealDecider& ideal);
/// Inner-product preservation:
/// δ_{is}·d(v_t·cv_j) = δ_{sp}·v_t·cv_q·Γ^{pq}_{ij} + (Γ^{pq}_{st})*·δ_{pi}·v_q·cv_j.
bool ip_preservation_check(const GammaField& gamma, const IdealDecider& ideal);
/// ∇(Σ_i h_i⊗cv_i) = 0, i.e. Σ_i Γ^{pq}_{ii} in the ideal.
bool vacuum_flat_check(const GammaField& gamma, const IdealDecider& ideal);

/// Presents a grade −1 form as f = Σ_j cv_j·g_j with each g_j of grade 0,
/// factoring one literal cv out of every coefficient monomial; exact at the
/// free-algebra level. Used to extend connections to higher-degree elements.
std::map<int, Form> present_tautological(const Form& f);

/// Right connection and its degree lifts: on h_i⊗cv_j·g returns
/// h_p⊗cv_q·Γ^{pq}_{ij}∧g + h_i⊗cv_j·dg, decomposing each component by
/// grade (f = Σ_j cv_j·(v_j·f), exact in the reduced ring).
EFormElement nabla_E(const GammaField& gamma, const EFormElement& x);

/// X^{pq}_{ij} = dΓ^{pq}_{ij} + Γ^{pq}_{st}∧Γ^{st}_{ij}.
GammaField X_field(const GammaField& gamma);

/// R_E(h_i⊗cv_j) = h_p⊗cv_q·X^{pq}_{ij}, extended right-linearly.
EFormElement curvature_R_E(const GammaField& gamma, const GammaField& X, const EFormElement& x);

/// Closed-formula σ̂ on a length-m tensor:
/// δ_{b_m i}·h_{a1}⊗cv_{q1}·Γ^{b1 q1}_{a2 q2}∧...∧Γ^{b_{m−1} q_{m−1}}_{a_m j},
/// extended right-linearly to x of any form degree. m = 1 is the left action.
EFormElement sigma_hat(const GammaField& gamma, const MatTensor& xi, const EFormElement& x);

/// Recursive σ̂: splits each basis term as (A1⊗A2)·(1⊗A3⊗...⊗A_m) and
/// composes the two-factor map through the inner result. Agrees with the
/// closed formula modulo the ideal (extendability), not syntactically.
EFormElement sigma_hat_recursive(const GammaField& gamma, const MatTensor& xi, const EFormElement& x);

/// Closed-formula Ŝ: the σ̂ chain with exactly one Γ slot replaced by X,
/// alternating signs, the slot-k term weighted (−1)^{m−1−k}.
EFormElement S_hat(const GammaField& gamma, const GammaField& X, const MatTensor& xi, const EFormElement& x);

/// Definitional Ŝ:
/// (σ̂∧id)(ξ⊗∇e) − (−1)^{|ξ|}(id⊗d+∇∧id)σ̂(ξ⊗e) + (−1)^{|ξ|}σ̂(dξ⊗e).
EFormElement S_hat_definitional(const GammaField& gamma, const MatTensor& xi, const EFormElement& x);

/// ⟨x̄, y⟩ with x of degree 0: Σ_i star(x_i)·y_i (a form of y's degree).
Form inner_form(const EFormElement& x, const EFormElement& y);

/// KSGNS inner product of columns-with-row-sections:
/// ⟨c1⊗r1, c2⊗r2⟩ = (c1*·c2)·(Σ_a v_a·star(r1_a))·(Σ_b r2_b·cv_b).
ScalarPoly ksgns_inner(const std::vector<GaussianRational>& c1, const std::vector<ScalarPoly>& r1,
                       const std::vector<GaussianRational>& c2, const std::vector<ScalarPoly>& r2);

/// r·P with P_{ij} = cv_i·v_j.
std::vector<ScalarPoly> apply_P(const std::vector<ScalarPoly>& r);

}  // namespace cpn
