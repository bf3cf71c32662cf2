#include "cpn/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <random>
#include <stdexcept>

#include "cpn/ideal.hpp"
#include "cpn/module_functor.hpp"
#include "cpn/state_map.hpp"
#include "cpn/taut_bimodule.hpp"

namespace cpn {

namespace {

struct Runner {
    const SuiteConfig& cfg;
    SuiteReport& report;

    // body returns (passed, witness)
    void check(const std::string& id, const std::string& ref,
               const std::function<std::pair<bool, std::string>()>& body, bool expected_fail = false) {
        CheckResult r;
        r.id = id;
        r.ref = ref;
        r.expected_fail = expected_fail;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [passed, witness] = body();
            r.status = passed ? "pass" : "fail";
            r.witness = std::move(witness);
        } catch (const ResourceError& e) {
            r.status = "skipped";
            r.witness = e.what();
        } catch (const std::exception& e) {
            // a precondition violated by the configured inputs (for example a
            // module that breaks the trace law) counts as a failed check
            r.status = "fail";
            r.witness = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.checks.push_back(std::move(r));
    }
};

Form random_form(int n, int max_degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree), idx(1, n), coef(-2, 2), bar(0, 1), nvars(0, 2);
    Form f(n);
    for (int term = 0; term < 3; ++term) {
        std::vector<WedgeGen> gens;
        int k = deg(rng);
        for (int j = 0; j < k; ++j) gens.push_back({bar(rng) == 1, idx(rng)});
        VMonomial m(n);
        int vars = nvars(rng);
        for (int j = 0; j < vars; ++j) {
            if (bar(rng))
                ++m.beta[idx(rng) - 1];
            else
                ++m.alpha[idx(rng) - 1];
        }
        ScalarPoly c(n);
        c.add_term(m, GaussianRational(Rational(coef(rng)), Rational(coef(rng))));
        f.add_term(gens, c);
    }
    return f;
}

void run_calculus(Runner& run, const IdealDecider& ideal) {
    int n = run.cfg.n;
    run.check("calculus.d-squared", "d(d(f)) = 0 for generators and seeded random forms", [&] {
        for (int i = 1; i <= n; ++i) {
            if (!d(d(Form::scalar(ScalarPoly::v(n, i)))).is_syntactically_zero()) return std::pair{false, "v" + std::to_string(i)};
            if (!d(d(Form::scalar(ScalarPoly::cv(n, i)))).is_syntactically_zero()) return std::pair{false, "cv" + std::to_string(i)};
        }
        std::mt19937 rng(run.cfg.seed);
        for (int t = 0; t < 120; ++t) {
            Form f = random_form(n, 2, rng);
            if (!d(d(f)).is_syntactically_zero()) return std::pair{false, f.str()};
        }
        return std::pair{true, std::string()};
    });
    run.check("calculus.leibniz", "d(f^g) = d(f)^g + (-1)^|f| f^d(g) modulo the relations", [&] {
        std::mt19937 rng(run.cfg.seed + 1);
        std::uniform_int_distribution<int> deg(0, 1);
        for (int t = 0; t < 30; ++t) {
            // the sign needs f of homogeneous degree; reducing a coefficient
            // through the sphere relation shifts d by an ideal member, so
            // the rule is asserted modulo the relation ideal
            int k = deg(rng);
            Form f = pi_pq(random_form(n, k, rng), k, 0) + pi_pq(random_form(n, k, rng), 0, k);
            if (k == 0) f = random_form(n, 0, rng);
            Form g = random_form(n, 1, rng);
            Form sgn_term = wedge(f, d(g)) * GaussianRational(k % 2 == 0 ? 1 : -1);
            Form diff = d(wedge(f, g)) - wedge(d(f), g) - sgn_term;
            if (!ideal.is_zero(diff)) return std::pair{false, f.str() + " | " + g.str()};
        }
        return std::pair{true, std::string()};
    });
    run.check("calculus.star", "star is an involution and intertwines d", [&] {
        std::mt19937 rng(run.cfg.seed + 2);
        for (int t = 0; t < 60; ++t) {
            Form f = random_form(n, 2, rng);
            if (star_form(star_form(f)) != f) return std::pair{false, f.str()};
            if (star_form(d(f)) != d(star_form(f))) return std::pair{false, f.str()};
        }
        return std::pair{true, std::string()};
    });
    run.check("calculus.relations", "theta, thetabar and omega generate the ideal and are members", [&] {
        if (!ideal.is_zero(relation_theta(n))) return std::pair{false, std::string("theta")};
        if (!ideal.is_zero(relation_thetabar(n))) return std::pair{false, std::string("thetabar")};
        if (!ideal.is_zero(relation_omega(n))) return std::pair{false, std::string("omega")};
        if (ideal.is_zero(Form::d_gen(n, 1, false))) return std::pair{false, std::string("dv1 must not be a member")};
        return std::pair{true, std::string()};
    });
    run.check("calculus.bidegree-projections", "pi_pq pieces are idempotent, disjoint and sum to the identity", [&] {
        std::mt19937 rng(run.cfg.seed + 3);
        for (int t = 0; t < 40; ++t) {
            Form f = random_form(n, 2, rng);
            Form sum(n);
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2 - p; ++q) {
                    Form piece = pi_pq(f, p, q);
                    if (pi_pq(piece, p, q) != piece) return std::pair{false, f.str()};
                    sum += piece;
                }
            if (sum != f) return std::pair{false, f.str()};
        }
        return std::pair{true, std::string()};
    });
}

void run_connection(Runner& run, const IdealDecider& ideal) {
    int n = run.cfg.n;
    auto family = [&](const std::string& tag, const GammaField& gamma) {
        run.check("connection.gauge." + tag, "column gauge law of the connection coefficients",
                  [&] { return std::pair{gauge_check(gamma, ideal), std::string()}; });
        run.check("connection.right-leibniz." + tag, "right-connection law on the relation projector",
                  [&] { return std::pair{right_connection_check(gamma, ideal), std::string()}; });
        run.check("connection.inner-product." + tag, "connection preserves the tautological inner product",
                  [&] { return std::pair{ip_preservation_check(gamma, ideal), std::string()}; });
        run.check("connection.vacuum-flat." + tag, "the cyclic vector is parallel",
                  [&] { return std::pair{vacuum_flat_check(gamma, ideal), std::string()}; });
        GammaField X = X_field(gamma);
        run.check("connection.curvature-right-module." + tag, "curvature acts by the coefficient table", [&] {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    EFormElement r = curvature_R_E(gamma, X, EFormElement::generator(n, i, j));
                    EFormElement want(n, 2);
                    for (int p = 1; p <= n; ++p) {
                        Form acc(n);
                        for (int q = 1; q <= n; ++q) acc += ScalarPoly::cv(n, q) * X.at(p, q, i, j);
                        want.add(p, acc);
                    }
                    if (!e_is_zero(r - want, ideal))
                        return std::pair{false, "i=" + std::to_string(i) + ",j=" + std::to_string(j)};
                }
            return std::pair{true, std::string()};
        });
    };
    family("canonical", gamma_simple(n));
    family("perturbed", gamma_from_G(example_G(n), ideal));

    GammaField gamma = gamma_simple(n);
    GammaField X = X_field(gamma);
    run.check("connection.curvature-contracted", "contracted curvature table equals its closed form", [&] {
        for (int p = 1; p <= n; ++p)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Form acc(n);
                    for (int q = 1; q <= n; ++q) acc += ScalarPoly::cv(n, q) * X.at(p, q, i, j);
                    Form want = ScalarPoly::cv(n, j) * wedge(Form::d_gen(n, p, true), Form::d_gen(n, i, false));
                    if (!ideal.is_zero(acc - want))
                        return std::pair{false, "p=" + std::to_string(p) + ",i=" + std::to_string(i) +
                                                    ",j=" + std::to_string(j)};
                }
        return std::pair{true, std::string()};
    });
    run.check("connection.curvature-closed-form", "curvature of a generator equals its closed form", [&] {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                EFormElement r = curvature_R_E(gamma, X, EFormElement::generator(n, i, j));
                EFormElement want(n, 2);
                for (int p = 1; p <= n; ++p)
                    want.add(p, ScalarPoly::cv(n, j) * wedge(Form::d_gen(n, p, true), Form::d_gen(n, i, false)));
                if (!e_is_zero(r - want, ideal))
                    return std::pair{false, "i=" + std::to_string(i) + ",j=" + std::to_string(j)};
            }
        return std::pair{true, std::string()};
    });
}

void run_cochain(Runner& run, const IdealDecider& ideal) {
    int n = run.cfg.n;
    GammaField gamma = gamma_simple(n);
    run.check("cochain.matrix-level", "state evaluation intertwines the differentials on matrices", [&] {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                MatTensor u = MatTensor::unit(n, a, b);
                Form diff = d(Form::scalar(phi0(u))) - phi_forms(gamma, d_uni_0(u));
                if (!ideal.is_zero(diff)) return std::pair{false, u.str()};
            }
        return std::pair{true, std::string()};
    });
    if (run.cfg.calculus == "dbar") {
        run.check("cochain.dbar-intertwining",
                  "antiholomorphic projection of the evaluation map is a cochain map", [&] {
                      CochainReport r = dbar_cochain_check(gamma, run.cfg.max_uni_degree, ideal);
                      return std::pair{r.ok, r.ok ? std::string() : r.witness_xi};
                  });
    } else {
        GammaField X = X_field(gamma);
        run.check("cochain.full-d-correction", "full-d identity holds with its correction term", [&] {
            for (const MatTensor& xi : uni_basis(1, n)) {
                Form lhs = d(phi_forms(gamma, xi)) - phi_forms(gamma, d_uni(xi));
                Form corr = d_cochain_defect(gamma, X, xi);
                if (!ideal.is_zero(lhs - corr)) return std::pair{false, xi.str()};
            }
            return std::pair{true, std::string()};
        });
        run.check(
            "cochain.full-d-intertwining",
            "evaluation map fails to be a cochain map for the full differential (negative result; "
            "degenerately true on the projective line where all 2-forms vanish)",
            [&] {
                CochainReport r = d_cochain_check(gamma, run.cfg.max_uni_degree, ideal);
                return std::pair{r.ok, r.ok ? std::string()
                                            : "xi=" + r.witness_xi + " lhs=" + r.witness_lhs +
                                                  " rhs=" + r.witness_rhs};
            },
            /*expected_fail=*/true);
    }
}

LeftModule module_from_spec(const std::string& spec, int n) {
    if (spec == "fundamental") return LeftModule::fundamental(n);
    if (spec == "sum") return LeftModule::direct_sum(LeftModule::fundamental(n), LeftModule::fundamental(n));
    if (spec.rfind("json:", 0) == 0) {
        LeftModule m = LeftModule::from_json(spec.substr(5));
        if (m.n() != n) throw std::invalid_argument("module algebra size does not match --n");
        return m;
    }
    throw std::invalid_argument("unknown module spec '" + spec + "'");
}

void run_holomorphic(Runner& run, const IdealDecider& ideal) {
    int n = run.cfg.n;
    LeftModule mod = module_from_spec(run.cfg.module_spec, n);
    GammaField gamma = gamma_simple(n);
    run.check("holomorphic.trace-condition", "unit of the algebra acts as the identity",
              [&] { return std::pair{mod.trace_condition(), std::string()}; });
    run.check("holomorphic.representation-law", "module action satisfies the matrix-unit relations",
              [&] { return std::pair{mod.representation(), std::string()}; });
    run.check("holomorphic.pi02-curvature", "antiholomorphic curvature component of the induced bundle vanishes",
              [&] { return std::pair{pi02_flat(mod, gamma, ideal), std::string()}; });
    run.check("holomorphic.delbar-squared", "the induced antiholomorphic connection squares to zero",
              [&] { return std::pair{holomorphic_check(mod, ideal), std::string()}; });
    run.check("holomorphic.functor-identity", "the identity module map commutes with the induced connections", [&] {
        std::vector<std::vector<GaussianRational>> id(mod.dim(),
                                                      std::vector<GaussianRational>(mod.dim(), GaussianRational(0)));
        for (int i = 0; i < mod.dim(); ++i) id[i][i] = GaussianRational(1);
        return std::pair{functor_check(id, mod, mod, ideal), std::string()};
    });
    run.check("holomorphic.functor-inclusion", "inclusion into the doubled module commutes with the connections",
              [&] {
                  LeftModule doubled = LeftModule::direct_sum(mod, mod);
                  std::vector<std::vector<GaussianRational>> incl(
                      doubled.dim(), std::vector<GaussianRational>(mod.dim(), GaussianRational(0)));
                  for (int i = 0; i < mod.dim(); ++i) incl[i][i] = GaussianRational(1);
                  return std::pair{functor_check(incl, mod, doubled, ideal), std::string()};
              });
}

}  // namespace

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (!c.expected_fail && c.status != "pass") return false;
    return true;
}

bool SuiteReport::any_failure() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.n < 2) throw std::invalid_argument("run_suite: n must be at least 2");
    if (config.slack < 0) throw std::invalid_argument("run_suite: slack must be nonnegative");
    static const std::vector<std::string> known = {"all", "calculus", "connection", "cochain", "holomorphic"};
    if (std::find(known.begin(), known.end(), config.suite) == known.end())
        throw std::invalid_argument("run_suite: unknown suite '" + config.suite + "'");
    if (config.calculus != "d" && config.calculus != "dbar")
        throw std::invalid_argument("run_suite: calculus must be 'd' or 'dbar'");

    SuiteReport report;
    report.config = config;
    IdealDecider ideal(config.n, config.slack);
    Runner run{config, report};
    bool all = config.suite == "all";
    if (all || config.suite == "calculus") run_calculus(run, ideal);
    if (all || config.suite == "connection") run_connection(run, ideal);
    if (all || config.suite == "cochain") run_cochain(run, ideal);
    if (all || config.suite == "holomorphic") run_holomorphic(run, ideal);
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return report;
}

std::string report_to_json(const SuiteReport& report) {
    nlohmann::json j;
    j["schema"] = report.schema;
    j["config"] = {{"n", report.config.n},
                   {"suite", report.config.suite},
                   {"slack", report.config.slack},
                   {"max_uni_degree", report.config.max_uni_degree},
                   {"calculus", report.config.calculus},
                   {"module", report.config.module_spec},
                   {"seed", report.config.seed}};
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"id", c.id},
                          {"ref", c.ref},
                          {"status", c.status},
                          {"witness", c.witness},
                          {"expected_fail", c.expected_fail},
                          {"seconds", c.seconds}});
    j["checks"] = std::move(checks);
    j["ok"] = report.ok();
    return j.dump(2);
}

SuiteReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SuiteReport report;
    report.schema = j.at("schema").get<std::string>();
    const auto& cfg = j.at("config");
    report.config.n = cfg.at("n").get<int>();
    report.config.suite = cfg.at("suite").get<std::string>();
    report.config.slack = cfg.at("slack").get<int>();
    report.config.max_uni_degree = cfg.at("max_uni_degree").get<int>();
    report.config.calculus = cfg.at("calculus").get<std::string>();
    report.config.module_spec = cfg.at("module").get<std::string>();
    report.config.seed = cfg.at("seed").get<unsigned>();
    for (const auto& c : j.at("checks")) {
        CheckResult r;
        r.id = c.at("id").get<std::string>();
        r.ref = c.at("ref").get<std::string>();
        r.status = c.at("status").get<std::string>();
        r.witness = c.at("witness").get<std::string>();
        r.expected_fail = c.at("expected_fail").get<bool>();
        r.seconds = c.at("seconds").get<double>();
        report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace cpn
