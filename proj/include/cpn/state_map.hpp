#pragma once

#include <string>

#include "cpn/ideal.hpp"
#include "cpn/mat_tensor.hpp"
#include "cpn/taut_bimodule.hpp"

namespace cpn {

/// State evaluation of a matrix: φ(a) = Σ_{ij} v_i·a_{ij}·cv_j, a grade-0
/// scalar with φ(I) = 1 under the sphere relation.
ScalarPoly phi0(const MatTensor& a);

/// Closed-formula extension of φ to length-m tensors:
/// φ(E_{a1b1}⊗...⊗E_{amBm}) = v_{a1}·cv_{q1}·Γ^{b1q1}_{a2q2}∧...∧Γ^{b_{m−1}q_{m−1}}_{a_m b_m}
/// summed over the internal q indices; m = 1 reduces to phi0.
Form phi_forms(const GammaField& gamma, const MatTensor& xi);

/// Definitional route for the same map: pair the vacuum against σ̂(ξ⊗e),
/// φ(ξ) = ⟨ē, σ̂(ξ⊗e)⟩. Agrees with phi_forms modulo the ideal; kept as an
/// independent code path for cross-checking.
Form phi_definitional(const GammaField& gamma, const MatTensor& xi);

/// Correction term of the full-d cochain identity: ⟨ē, Ŝ(ξ⊗e)⟩ for a
/// length-m tensor ξ (m ≥ 2), an m-form satisfying
///   d(φ(ξ)) − φ(d_uni ξ) + (−1)^{m−1}·defect ≡ 0  modulo the ideal.
/// Its (0,m) projection is always in the ideal, so the antiholomorphic
/// projection of φ intertwines the differentials even when φ itself fails
/// to. X must be the curvature table of gamma.
Form d_cochain_defect(const GammaField& gamma, const GammaField& X, const MatTensor& xi);

/// Result of a cochain sweep; on failure the first bad element and both
/// sides of the identity are serialized.
struct CochainReport {
    bool ok = true;
    std::string witness_xi, witness_lhs, witness_rhs;
};

/// Antiholomorphic cochain property: for every element ξ of a spanning set
/// of the degree-(m−1) universal calculus, m = 1..m_max,
/// π^{0,m}(d φ(ξ)) ≡ π^{0,m}(φ(d_uni ξ)) modulo the ideal.
CochainReport dbar_cochain_check(const GammaField& gamma, int m_max, const IdealDecider& ideal);

/// Full-differential analogue: d φ(ξ) ≡ φ(d_uni ξ) without projection.
/// Holds degenerately when every 2-form is in the ideal (n = 2) and fails
/// for n ≥ 3, where the correction term survives.
CochainReport d_cochain_check(const GammaField& gamma, int m_max, const IdealDecider& ideal);

}  // namespace cpn
