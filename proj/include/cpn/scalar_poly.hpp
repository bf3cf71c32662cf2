#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpn/rational.hpp"

namespace cpn {

/// Monomial in v_1..v_n (alpha exponents) and conjugates cv_1..cv_n (beta).
/// Canonical iff it is not divisible by v_n*cv_n.
struct VMonomial {
    std::vector<int> alpha;
    std::vector<int> beta;

    explicit VMonomial(int n) : alpha(n, 0), beta(n, 0) {}
    VMonomial(std::vector<int> a, std::vector<int> b) : alpha(std::move(a)), beta(std::move(b)) {}

    int n() const { return static_cast<int>(alpha.size()); }
    int degree() const {
        int d = 0;
        for (int e : alpha) d += e;
        for (int e : beta) d += e;
        return d;
    }
    int grade() const {
        int g = 0;
        for (int e : alpha) g += e;
        for (int e : beta) g -= e;
        return g;
    }
    bool canonical() const { return alpha.back() == 0 || beta.back() == 0; }
    bool is_one() const { return degree() == 0; }

    friend bool operator==(const VMonomial& a, const VMonomial& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    // degree first, then lexicographic on (alpha, beta)
    friend bool operator<(const VMonomial& a, const VMonomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    }
};

/// Element of C[v_1..v_n, cv_1..cv_n] / (sum_i v_i cv_i - 1), stored as its
/// unique sphere-reduced representative. Immutable in spirit: all mutating
/// helpers are private to the arithmetic operators.
class ScalarPoly {
public:
    explicit ScalarPoly(int n) : n_(n) {}

    static ScalarPoly zero(int n) { return ScalarPoly(n); }
    static ScalarPoly constant(int n, GaussianRational c);
    static ScalarPoly one(int n) { return constant(n, GaussianRational(1)); }
    /// v_i, 1-based index
    static ScalarPoly v(int n, int i);
    /// cv_i (conjugate generator), 1-based index
    static ScalarPoly cv(int n, int i);
    static ScalarPoly monomial(VMonomial m, GaussianRational c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<VMonomial, GaussianRational>& terms() const { return terms_; }

    /// Grade if every monomial agrees; nullopt is the mixed marker.
    std::optional<int> grade() const;
    int degree() const;

    /// v_i <-> cv_i swap with coefficient conjugation (antilinear involution).
    ScalarPoly star() const;

    /// Partial derivative with respect to v_i (bar = false) or cv_i (bar = true).
    ScalarPoly derivative(int i, bool bar) const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    ScalarPoly operator*(const GaussianRational& c) const;

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

    std::string str() const;
    static ScalarPoly parse(int n, const std::string& text);

    /// Sphere reduction of an arbitrary raw term into this polynomial.
    void add_term(const VMonomial& m, const GaussianRational& c);

private:
    int n_;
    std::map<VMonomial, GaussianRational> terms_;

    void add_canonical(const VMonomial& m, const GaussianRational& c);
};

}  // namespace cpn
