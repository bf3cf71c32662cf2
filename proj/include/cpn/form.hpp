#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpn/scalar_poly.hpp"

namespace cpn {

/// One exterior generator: dv_i (bar = false) or dcv_i (bar = true).
/// Sort order puts antiholomorphic generators first, then index, so the
/// canonical text order is dcv1 < dcv2 < ... < dv1 < dv2 < ...
struct WedgeGen {
    bool bar;
    int idx;  // 1-based

    friend bool operator==(const WedgeGen& a, const WedgeGen& b) { return a.bar == b.bar && a.idx == b.idx; }
    friend bool operator<(const WedgeGen& a, const WedgeGen& b) {
        if (a.bar != b.bar) return a.bar && !b.bar;
        return a.idx < b.idx;
    }
};

/// Strictly sorted wedge of generators; a repeated generator is zero and is
/// never stored. Construction from an unsorted list yields the sort sign.
struct WedgeMonomial {
    std::vector<WedgeGen> gens;

    int degree() const { return static_cast<int>(gens.size()); }
    // (#dv, #dcv)
    std::pair<int, int> bidegree() const {
        int q = 0;
        for (const auto& g : gens) q += g.bar ? 1 : 0;
        return {degree() - q, q};
    }
    int grade() const {
        auto [p, q] = bidegree();
        return p - q;
    }

    friend bool operator==(const WedgeMonomial& a, const WedgeMonomial& b) { return a.gens == b.gens; }
    friend bool operator<(const WedgeMonomial& a, const WedgeMonomial& b) {
        if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size();
        return a.gens < b.gens;
    }

    /// Sort-normalize; returns 0 on a repeated generator, else the sign.
    static int normalize(std::vector<WedgeGen>& gens);
};

/// Element of the free graded-commutative algebra on dv_i, dcv_i over
/// ScalarPoly. Semantic equality on Omega(CPn) is decided modulo the
/// relation ideal by IdealDecider, not by operator==.
class Form {
public:
    explicit Form(int n) : n_(n) {}

    static Form zero(int n) { return Form(n); }
    static Form scalar(ScalarPoly p);
    /// dv_i or dcv_i as a 1-form
    static Form d_gen(int n, int i, bool bar);

    int n() const { return n_; }
    bool is_syntactically_zero() const { return terms_.empty(); }
    const std::map<WedgeMonomial, ScalarPoly>& terms() const { return terms_; }

    /// Max wedge degree present (0 for a scalar or zero form).
    int degree() const;
    int coeff_degree() const;
    /// Wedge bidegree if homogeneous, nullopt if mixed.
    std::optional<std::pair<int, int>> bidegree() const;
    /// Total grade (coefficient grade + wedge grade) if pure, nullopt if mixed.
    std::optional<int> grade() const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form operator*(const GaussianRational& c) const;
    /// Multiplication by a scalar coefficient (commutes past generators).
    friend Form operator*(const ScalarPoly& p, const Form& a);

    friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string str() const;
    static Form parse(int n, const std::string& text);

    void add_term(std::vector<WedgeGen> gens, const ScalarPoly& coeff);

private:
    int n_;
    std::map<WedgeMonomial, ScalarPoly> terms_;
};

/// Graded-commutative product at the free-algebra level.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative at the free-algebra level (descends to the quotient).
Form d(const Form& a);

/// Projection onto wedge bidegree (p, q).
Form pi_pq(const Form& a, int p, int q);

/// Dolbeault operators; input must be bihomogeneous.
Form del(const Form& a);
Form delbar(const Form& a);

/// Antilinear star: (dv_i)* = dcv_i with the graded reversal sign.
Form star_form(const Form& a);

/// theta = sum cv_i dv_i, thetabar = sum v_i dcv_i, omega = sum dv_i ^ dcv_i.
Form relation_theta(int n);
Form relation_thetabar(int n);
Form relation_omega(int n);

}  // namespace cpn
