#include <doctest.h>

#include <random>

#include "cpn/ideal.hpp"

using namespace cpn;

namespace {

Form dv(int n, int i) { return Form::d_gen(n, i, false); }
Form dcv(int n, int i) { return Form::d_gen(n, i, true); }

ScalarPoly random_poly(int n, std::mt19937& rng, int max_deg = 2) {
    std::uniform_int_distribution<int> nt(1, 3), exp(0, 1), coef(-2, 2);
    ScalarPoly p(n);
    for (int t = 0, terms = nt(rng); t < terms; ++t) {
        VMonomial m(n);
        int budget = max_deg;
        for (int i = 0; i < n && budget > 0; ++i) {
            m.alpha[i] = std::min(budget, exp(rng));
            budget -= m.alpha[i];
            m.beta[i] = std::min(budget, exp(rng));
            budget -= m.beta[i];
        }
        p += ScalarPoly::monomial(m, GaussianRational(Rational(coef(rng))));
    }
    return p;
}

Form random_form(int n, std::mt19937& rng, int max_degree = 2) {
    std::uniform_int_distribution<int> deg(0, max_degree), idx(1, n), bar(0, 1);
    Form f(n);
    for (int t = 0; t < 2; ++t) {
        std::vector<WedgeGen> gens;
        for (int k = 0, kk = deg(rng); k < kk; ++k) gens.push_back(WedgeGen{bar(rng) == 1, idx(rng)});
        f.add_term(std::move(gens), random_poly(n, rng));
    }
    return f;
}

}  // namespace

TEST_CASE("generators are members, bare generators are not") {
    for (int n : {2, 3}) {
        IdealDecider ideal(n);
        CHECK(ideal.member(relation_theta(n), 0));
        CHECK(ideal.member(relation_thetabar(n), 0));
        CHECK(ideal.member(relation_omega(n), 0));
        // a single bare generator is never a relation
        CHECK(!ideal.member(dv(n, 1), 2));
        CHECK(!ideal.member(dcv(n, 1), 2));
        // omega = -d(theta): their difference is in the ideal
        CHECK(ideal.is_zero(relation_omega(n) + d(relation_theta(n))));
        CHECK(ideal.is_zero(d(relation_thetabar(n)) - relation_omega(n)));
    }
}

TEST_CASE("d of the sphere relation lies in the ideal") {
    for (int n : {2, 3}) {
        IdealDecider ideal(n);
        // theta + thetabar is d(sum v_i cv_i)
        CHECK(ideal.is_zero(relation_theta(n) + relation_thetabar(n)));
    }
}

TEST_CASE("membership is monotone in slack") {
    int n = 2;
    IdealDecider ideal(n);
    Form x = ScalarPoly::v(n, 1) * relation_theta(n);
    for (int s = 0; s <= 2; ++s) CHECK(ideal.member(x, s));
}

TEST_CASE("d squared vanishes modulo the ideal on random forms") {
    std::mt19937 rng(23);
    for (int n : {2, 3}) {
        IdealDecider ideal(n);
        for (int t = 0; t < 15; ++t) {
            Form a = random_form(n, rng);
            CHECK(ideal.is_zero(d(d(a))));
        }
    }
}

TEST_CASE("star compatibility of d modulo the ideal") {
    std::mt19937 rng(29);
    for (int n : {2, 3}) {
        IdealDecider ideal(n);
        for (int t = 0; t < 10; ++t) {
            Form a = random_form(n, rng, 1);
            CHECK(ideal.is_zero(d(star_form(a)) - star_form(d(a))));
        }
        CHECK(ideal.is_zero(star_form(relation_theta(n)) - relation_thetabar(n)));
    }
}

TEST_CASE("delbar squared and del squared vanish modulo the ideal") {
    for (int n : {2, 3}) {
        IdealDecider ideal(n);
        Form f = Form::scalar(ScalarPoly::v(n, 1) * ScalarPoly::cv(n, 2));
        CHECK(ideal.is_zero(delbar(delbar(f))));
        CHECK(ideal.is_zero(del(del(f))));
        // del of the sphere relation is theta
        ScalarPoly rel(n);
        for (int i = 1; i <= n; ++i) rel += ScalarPoly::v(n, i) * ScalarPoly::cv(n, i);
        CHECK(ideal.is_zero(pi_pq(relation_theta(n) + relation_thetabar(n), 1, 0) - relation_theta(n)));
    }
}

TEST_CASE("reduce gives a canonical coset representative") {
    int n = 2;
    IdealDecider ideal(n);
    Form x = wedge(dcv(n, 1), dv(n, 2));
    // x plus an ideal element reduces to the same representative as x
    Form noisy = x + ScalarPoly::v(n, 1) * relation_omega(n) - relation_theta(n) * GaussianRational(3);
    CHECK(ideal.reduce(noisy, 2) == ideal.reduce(x, 2));
    CHECK(ideal.reduce(relation_theta(n), 2).is_syntactically_zero());
}

TEST_CASE("nonzero scalar is never a member") {
    int n = 2;
    IdealDecider ideal(n);
    CHECK(!ideal.member(Form::scalar(ScalarPoly::one(n)), 2));
    CHECK(!ideal.member(Form::scalar(ScalarPoly::v(n, 1)), 2));
}

TEST_CASE("component stats are recorded") {
    int n = 2;
    IdealDecider ideal(n);
    ideal.member(relation_theta(n), 0);
    CHECK(!ideal.stats().empty());
}
