#include <doctest.h>

#include "cpn/module_functor.hpp"
#include "cpn/state_map.hpp"
#include "cpn/suite.hpp"
#include "cpn/taut_bimodule.hpp"

using namespace cpn;

TEST_CASE("scalar polynomial text round trip") {
    for (int n : {2, 3}) {
        for (const char* text : {"1", "0", "v1*cv1", "-2+i", "(1/2-3*i)*v1*v2*cv2"}) {
            ScalarPoly p = ScalarPoly::parse(n, text);
            CHECK(ScalarPoly::parse(n, p.str()) == p);
        }
    }
    // canonical text is stable: parse then print reproduces itself
    ScalarPoly p = ScalarPoly::parse(2, "v1*cv2+(2-i)*v2*v2");
    CHECK(ScalarPoly::parse(2, p.str()).str() == p.str());
}

TEST_CASE("form text round trip") {
    for (int n : {2, 3}) {
        for (const char* text :
             {"dv1", "dcv2", "v1*dcv1^dv2", "1-v2*cv2", "2*v1*dcv1+2*i*cv2*dcv1^dv1+(-2+i)*cv2*dcv2^dv1"}) {
            Form f = Form::parse(n, text);
            CHECK(Form::parse(n, f.str()) == f);
            CHECK(Form::parse(n, f.str()).str() == f.str());
        }
    }
}

TEST_CASE("matrix tensor text round trip") {
    for (int n : {2, 3}) {
        for (const char* text : {"E[1,1]", "E[1,2](x)E[2,1]", "-E[1,1](x)E[2,2]+(1/2)*E[2,1](x)E[1,2]"}) {
            MatTensor t = MatTensor::parse(n, text);
            CHECK(MatTensor::parse(n, t.str()) == t);
        }
    }
}

TEST_CASE("module JSON round trip preserves exact entries") {
    LeftModule fund = LeftModule::fundamental(3);
    LeftModule back = LeftModule::from_json(fund.to_json());
    CHECK(back.n() == 3);
    CHECK(back.dim() == 3);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int r = 1; r <= 3; ++r)
                for (int c = 1; c <= 3; ++c) CHECK(back.L(a, b, r, c) == fund.L(a, b, r, c));

    LeftModule m(2, 1);
    m.set_L(1, 1, 1, 1, GaussianRational(Rational(3, 2), Rational(-1, 3)));
    m.set_L(2, 2, 1, 1, GaussianRational(Rational(-1, 2), Rational(1, 3)));
    LeftModule m2 = LeftModule::from_json(m.to_json());
    CHECK(m2.L(1, 1, 1, 1) == m.L(1, 1, 1, 1));
    CHECK(m2.L(2, 2, 1, 1) == m.L(2, 2, 1, 1));
}

TEST_CASE("suite report JSON round trip is byte-stable") {
    SuiteConfig cfg;
    cfg.n = 2;
    cfg.suite = "calculus";
    SuiteReport report = run_suite(cfg);
    CHECK(report.ok());
    std::string text = report_to_json(report);
    SuiteReport back = report_from_json(text);
    CHECK(report_to_json(back) == text);
    CHECK(back.schema == report.schema);
    CHECK(back.config.n == 2);
    CHECK(back.config.suite == "calculus");
    CHECK(back.checks.size() == report.checks.size());
    for (std::size_t i = 0; i < back.checks.size(); ++i) {
        CHECK(back.checks[i].id == report.checks[i].id);
        CHECK(back.checks[i].status == report.checks[i].status);
        CHECK(back.checks[i].expected_fail == report.checks[i].expected_fail);
    }
}

TEST_CASE("suite rejects bad configuration") {
    SuiteConfig cfg;
    cfg.suite = "bogus";
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    cfg.suite = "cochain";
    cfg.calculus = "neither";
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    cfg.calculus = "dbar";
    cfg.n = 1;
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("golden canonical texts for the key symbolic objects") {
    GammaField gamma = gamma_simple(2);
    CHECK(phi_forms(gamma, MatTensor::parse(2, "E[1,1]")).str() == "v1*cv1");
    CHECK(phi_forms(gamma, MatTensor::parse(2, "E[1,2]")).str() == "v1*cv2");
    // curvature coefficient table entry (p,q,i,j) = (1,1,2,1) in standard form
    CHECK(wedge(Form::d_gen(2, 1, true), Form::d_gen(2, 2, false)).str() == "dcv1^dv2");
}
