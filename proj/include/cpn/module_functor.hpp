#pragma once

#include <string>
#include <vector>

#include "cpn/ideal.hpp"
#include "cpn/mat_tensor.hpp"
#include "cpn/taut_bimodule.hpp"

namespace cpn {

/// Finite-dimensional left module over the n×n matrix algebra, given by
/// concrete dim×dim matrices L_{ij} (the action of the matrix unit E_{ij}).
/// The two structural properties are computed, never assumed: the trace
/// condition Σ_j L_{jj} = id needed for connection construction, and the
/// representation law L_{cg}·L_{es} = δ_{ge}·L_{cs}.
class LeftModule {
public:
    LeftModule(int n, int dim)
        : n_(n), dim_(dim), entries_(static_cast<std::size_t>(n) * n * dim * dim, GaussianRational(0)) {}

    /// Column space C^n with E_{ij} acting by matrix multiplication.
    static LeftModule fundamental(int n);
    /// Block-diagonal action on the concatenation of the two spaces.
    static LeftModule direct_sum(const LeftModule& a, const LeftModule& b);

    /// JSON round trip; entries are exact scalars serialized as strings
    /// (e.g. "3/2", "-1+2i").
    static LeftModule from_json(const std::string& text);
    std::string to_json() const;

    int n() const { return n_; }
    int dim() const { return dim_; }

    /// Entry (r, c) of the matrix L_{ij}; all indices 1-based.
    const GaussianRational& L(int i, int j, int r, int c) const { return entries_[idx(i, j, r, c)]; }
    void set_L(int i, int j, int r, int c, GaussianRational val) { entries_[idx(i, j, r, c)] = std::move(val); }

    std::vector<GaussianRational> apply(int i, int j, const std::vector<GaussianRational>& v) const;

    bool trace_condition() const;
    bool representation() const;

private:
    std::size_t idx(int i, int j, int r, int c) const {
        return ((static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * dim_ + (r - 1)) * dim_ + (c - 1);
    }
    int n_, dim_;
    std::vector<GaussianRational> entries_;
};

/// Element of V ⊗ Row^n ⊗ Ω^k_uni in collapsed coordinates: the tensor leg
/// over the algebra is absorbed into the row, leaving one length-k matrix
/// tensor per (module basis vector w, row index a). k = 0 holds scalars.
class FElement {
public:
    FElement(int d, int n, int k)
        : d_(d), n_(n), k_(k), entries_(static_cast<std::size_t>(d) * n, MatTensor(n, k)) {}

    /// e_w ⊗ r_a, a degree-0 element.
    static FElement basis(int d, int n, int w, int a);

    int dim() const { return d_; }
    int n() const { return n_; }
    int k() const { return k_; }
    bool is_zero() const;

    const MatTensor& entry(int w, int a) const { return entries_[(w - 1) * static_cast<std::size_t>(n_) + (a - 1)]; }
    void add(int w, int a, const MatTensor& t);
    /// Adds e_w ⊗ r_a ⊗ T by absorbing the first factor of T into the row:
    /// r_a·E_{ce} = δ_{ac}·r_e. T must have length k+1.
    void add_collapsed(int w, int a, const MatTensor& t);

    FElement operator-() const;
    FElement& operator+=(const FElement& o);
    FElement& operator-=(const FElement& o);
    friend FElement operator+(FElement a, const FElement& b) { return a += b; }
    friend FElement operator-(FElement a, const FElement& b) { return a -= b; }
    friend bool operator==(const FElement& a, const FElement& b) {
        return a.d_ == b.d_ && a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const FElement& a, const FElement& b) { return !(a == b); }

private:
    int d_, n_, k_;
    std::vector<MatTensor> entries_;
};

/// Right action of the matrix unit E_{st} on the row leg (degree 0) or on
/// the last tensor factor (degree ≥ 1).
FElement f_act(const FElement& x, int s, int t);

/// x ⊗ dE_{st} for a degree-0 x, in collapsed coordinates.
FElement f_append_d(const FElement& x, int s, int t);

/// Right connection on V⊗Row^n determined by the module action:
/// ∇_F(e_w⊗r_i) = Σ_{jp} L_{jp}(e_w)⊗r_j⊗dE_{pi}. Requires the trace
/// condition; input must have degree 0.
FElement nabla_F(const LeftModule& V, const FElement& x);

/// Curvature of nabla_F:
/// R_F(e_w⊗r_i) = Σ L_{ab}(L_{jp}(e_w))⊗r_a⊗dE_{bj}∧dE_{pi}.
FElement curvature_F(const LeftModule& V, const FElement& x);

/// Element of V ⊗ C_{−1} ⊗ Ω^k: dim components, each a grade −1 form of a
/// common degree k. The induced bundle of a left module.
class VElement {
public:
    VElement(int d, int n, int degree) : d_(d), n_(n), degree_(degree), comps_(d, Form(n)) {}

    /// e_w ⊗ cv_j
    static VElement basis(int d, int n, int w, int j);

    int dim() const { return d_; }
    int n() const { return n_; }
    int degree() const { return degree_; }

    const Form& comp(int w) const { return comps_.at(w - 1); }
    /// Adds f into component w; rejects grade or degree violations.
    void add(int w, const Form& f);

    VElement operator-() const;
    VElement& operator+=(const VElement& o);
    VElement& operator-=(const VElement& o);
    friend VElement operator+(VElement a, const VElement& b) { return a += b; }
    friend VElement operator-(VElement a, const VElement& b) { return a -= b; }

private:
    int d_, n_, degree_;
    std::vector<Form> comps_;
};

/// Componentwise ideal-membership test.
bool v_is_zero(const VElement& x, const IdealDecider& ideal);

/// Induced connection on V⊗C_{−1}:
/// ∇(e_w⊗cv_j) = Σ L_{pr}(e_w)⊗cv_q·Γ^{pq}_{rj}, extended to higher degree
/// by the right Leibniz rule.
VElement vbundle_nabla(const LeftModule& V, const GammaField& gamma, const VElement& x);

/// Holomorphic part of the induced connection (for the canonical Γ):
/// ∂_V(e_w⊗cv_j) = Σ L_{pr}(e_w)⊗cv_j·cv_p·dv_r, Leibniz-extended with ∂.
VElement vbundle_del(const LeftModule& V, const VElement& x);

/// Antiholomorphic part (for the canonical Γ):
/// ∂̄_V(e_w⊗cv_j) = e_w⊗cv_q·v_q·dcv_j − Σ L_{pr}(e_w)⊗cv_j·v_r·dcv_p,
/// Leibniz-extended with ∂̄.
VElement vbundle_delbar(const LeftModule& V, const VElement& x);

/// (0,2) projection of the components of ∇∘∇ on the basis element e_w⊗cv_j.
std::vector<Form> pi02_curvature(const LeftModule& V, const GammaField& gamma, int w, int j);

/// Closed-formula (0,2) curvature coefficient before the row/column
/// collapse: for input e_w⊗r_t⊗h_i⊗cv_j, the coefficient form of
/// e_u⊗r_c⊗h_g (the cv_j leg is carried along unchanged):
///   Σ_{a,b,s} [L_{ca}L_{bs}]_{uw}·δ_{ti}·v_a·v_s·dcv_g∧dcv_b
/// − Σ_{a}   [L_{ca}]_{uw}·v_a·v_i·dcv_g∧dcv_t
/// + Σ_{b,s} [L_{cg}L_{bs}]_{uw}·v_s·v_i·dcv_b∧dcv_t.
Form pi02_closed_term(const LeftModule& V, int w, int t, int i, int u, int c, int g);

/// All basis (0,2) curvature components lie in the ideal.
bool pi02_flat(const LeftModule& V, const GammaField& gamma, const IdealDecider& ideal);

/// Curvature of the antiholomorphic connection vanishes on every basis
/// element: ∂̄_V∘∂̄_V ≡ 0 modulo the ideal.
bool holomorphic_check(const LeftModule& V, const IdealDecider& ideal);

/// A module map θ (dim2×dim1, θ·L¹_{ij} = L²_{ij}·θ) commutes with the
/// induced antiholomorphic connections. Throws std::invalid_argument if θ
/// is not an intertwiner, naming the failing (i, j).
bool functor_check(const std::vector<std::vector<GaussianRational>>& theta, const LeftModule& V1,
                   const LeftModule& V2, const IdealDecider& ideal);

}  // namespace cpn
