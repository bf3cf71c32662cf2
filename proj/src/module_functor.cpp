#include "cpn/module_functor.hpp"

#include <json.hpp>
#include <stdexcept>

namespace cpn {

namespace {

GaussianRational parse_scalar(const std::string& text) {
    // the scalar-polynomial parser at n = 1 handles every constant shape
    ScalarPoly p = ScalarPoly::parse(1, text);
    if (p.is_zero()) return GaussianRational(0);
    if (p.terms().size() > 1 || !p.terms().begin()->first.is_one())
        throw std::invalid_argument("LeftModule: non-constant scalar '" + text + "'");
    return p.terms().begin()->second;
}

}  // namespace

LeftModule LeftModule::fundamental(int n) {
    LeftModule m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.set_L(i, j, i, j, GaussianRational(1));
    return m;
}

LeftModule LeftModule::direct_sum(const LeftModule& a, const LeftModule& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("LeftModule::direct_sum: algebra size mismatch");
    LeftModule m(a.n_, a.dim_ + b.dim_);
    for (int i = 1; i <= a.n_; ++i)
        for (int j = 1; j <= a.n_; ++j) {
            for (int r = 1; r <= a.dim_; ++r)
                for (int c = 1; c <= a.dim_; ++c) m.set_L(i, j, r, c, a.L(i, j, r, c));
            for (int r = 1; r <= b.dim_; ++r)
                for (int c = 1; c <= b.dim_; ++c) m.set_L(i, j, a.dim_ + r, a.dim_ + c, b.L(i, j, r, c));
        }
    return m;
}

LeftModule LeftModule::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int dim = j.at("dim").get<int>();
    if (n < 1 || dim < 1) throw std::invalid_argument("LeftModule::from_json: bad sizes");
    LeftModule m(n, dim);
    const auto& L = j.at("L");
    for (auto it = L.begin(); it != L.end(); ++it) {
        const std::string& key = it.key();
        auto comma = key.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("LeftModule::from_json: key '" + key + "'");
        int a = std::stoi(key.substr(0, comma)), b = std::stoi(key.substr(comma + 1));
        const auto& mat = it.value();
        if (static_cast<int>(mat.size()) != dim) throw std::invalid_argument("LeftModule::from_json: row count");
        for (int r = 1; r <= dim; ++r) {
            const auto& row = mat.at(r - 1);
            if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("LeftModule::from_json: column count");
            for (int c = 1; c <= dim; ++c) m.set_L(a, b, r, c, parse_scalar(row.at(c - 1).get<std::string>()));
        }
    }
    return m;
}

std::string LeftModule::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["dim"] = dim_;
    nlohmann::json L = nlohmann::json::object();
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b) {
            nlohmann::json mat = nlohmann::json::array();
            for (int r = 1; r <= dim_; ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 1; c <= dim_; ++c) row.push_back(to_string(this->L(a, b, r, c)));
                mat.push_back(std::move(row));
            }
            L[std::to_string(a) + "," + std::to_string(b)] = std::move(mat);
        }
    j["L"] = std::move(L);
    return j.dump();
}

std::vector<GaussianRational> LeftModule::apply(int i, int j, const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("LeftModule::apply: vector size");
    std::vector<GaussianRational> out(dim_, GaussianRational(0));
    for (int r = 1; r <= dim_; ++r)
        for (int c = 1; c <= dim_; ++c) out[r - 1] += L(i, j, r, c) * v[c - 1];
    return out;
}

bool LeftModule::trace_condition() const {
    for (int r = 1; r <= dim_; ++r)
        for (int c = 1; c <= dim_; ++c) {
            GaussianRational sum(0);
            for (int j = 1; j <= n_; ++j) sum += L(j, j, r, c);
            if (sum != GaussianRational(r == c ? 1 : 0)) return false;
        }
    return true;
}

bool LeftModule::representation() const {
    for (int c = 1; c <= n_; ++c)
        for (int g = 1; g <= n_; ++g)
            for (int e = 1; e <= n_; ++e)
                for (int s = 1; s <= n_; ++s)
                    for (int r = 1; r <= dim_; ++r)
                        for (int col = 1; col <= dim_; ++col) {
                            GaussianRational prod(0);
                            for (int m = 1; m <= dim_; ++m) prod += L(c, g, r, m) * L(e, s, m, col);
                            GaussianRational want = (g == e) ? L(c, s, r, col) : GaussianRational(0);
                            if (prod != want) return false;
                        }
    return true;
}

FElement FElement::basis(int d, int n, int w, int a) {
    FElement x(d, n, 0);
    MatTensor one(n, 0);
    one.add_term({}, GaussianRational(1));
    x.add(w, a, one);
    return x;
}

bool FElement::is_zero() const {
    for (const auto& t : entries_)
        if (!t.is_zero()) return false;
    return true;
}

void FElement::add(int w, int a, const MatTensor& t) {
    if (t.k() != k_) throw std::invalid_argument("FElement::add: tensor length mismatch");
    entries_[(w - 1) * static_cast<std::size_t>(n_) + (a - 1)] += t;
}

void FElement::add_collapsed(int w, int a, const MatTensor& t) {
    if (t.k() != k_ + 1) throw std::invalid_argument("FElement::add_collapsed: tensor length mismatch");
    for (const auto& [tuple, c] : t.terms()) {
        if (tuple[0] != a) continue;
        MatTensor rest(n_, k_);
        rest.add_term(std::vector<int>(tuple.begin() + 2, tuple.end()), c);
        add(w, tuple[1], rest);
    }
}

FElement FElement::operator-() const {
    FElement out(d_, n_, k_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

FElement& FElement::operator+=(const FElement& o) {
    if (d_ != o.d_ || n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("FElement: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

FElement& FElement::operator-=(const FElement& o) {
    if (d_ != o.d_ || n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("FElement: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

FElement f_act(const FElement& x, int s, int t) {
    FElement out(x.dim(), x.n(), x.k());
    for (int w = 1; w <= x.dim(); ++w)
        for (int a = 1; a <= x.n(); ++a) {
            const MatTensor& e = x.entry(w, a);
            if (e.is_zero()) continue;
            if (x.k() == 0) {
                if (a == s) out.add(w, t, e);
            } else {
                out.add(w, a, uni_product(e, MatTensor::unit(x.n(), s, t)));
            }
        }
    return out;
}

FElement f_append_d(const FElement& x, int s, int t) {
    if (x.k() != 0) throw std::invalid_argument("f_append_d: expects a degree-0 element");
    int n = x.n();
    FElement out(x.dim(), n, 1);
    MatTensor de = d_uni_0(MatTensor::unit(n, s, t));
    for (int w = 1; w <= x.dim(); ++w)
        for (int a = 1; a <= n; ++a)
            for (const auto& [tuple, c] : x.entry(w, a).terms()) out.add_collapsed(w, a, de * c);
    return out;
}

FElement nabla_F(const LeftModule& V, const FElement& x) {
    if (!V.trace_condition()) throw std::invalid_argument("nabla_F: trace condition violated");
    if (x.k() != 0) throw std::invalid_argument("nabla_F: expects a degree-0 element");
    int n = x.n(), d = x.dim();
    FElement out(d, n, 1);
    for (int w = 1; w <= d; ++w)
        for (int i = 1; i <= n; ++i) {
            GaussianRational c(0);
            for (const auto& [tuple, k] : x.entry(w, i).terms()) c = k;
            if (c.is_zero()) continue;
            for (int j = 1; j <= n; ++j)
                for (int p = 1; p <= n; ++p)
                    for (int u = 1; u <= d; ++u) {
                        GaussianRational coeff = V.L(j, p, u, w) * c;
                        if (coeff.is_zero()) continue;
                        out.add_collapsed(u, j, d_uni_0(MatTensor::unit(n, p, i)) * coeff);
                    }
        }
    return out;
}

FElement curvature_F(const LeftModule& V, const FElement& x) {
    if (!V.trace_condition()) throw std::invalid_argument("curvature_F: trace condition violated");
    if (x.k() != 0) throw std::invalid_argument("curvature_F: expects a degree-0 element");
    int n = x.n(), d = x.dim();
    FElement out(d, n, 2);
    for (int w = 1; w <= d; ++w)
        for (int i = 1; i <= n; ++i) {
            GaussianRational c(0);
            for (const auto& [tuple, k] : x.entry(w, i).terms()) c = k;
            if (c.is_zero()) continue;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int j = 1; j <= n; ++j)
                        for (int p = 1; p <= n; ++p) {
                            MatTensor dd = uni_product(d_uni_0(MatTensor::unit(n, b, j)),
                                                       d_uni_0(MatTensor::unit(n, p, i)));
                            for (int u = 1; u <= d; ++u) {
                                GaussianRational coeff(0);
                                for (int m = 1; m <= d; ++m) coeff += V.L(a, b, u, m) * V.L(j, p, m, w);
                                coeff *= c;
                                if (!coeff.is_zero()) out.add_collapsed(u, a, dd * coeff);
                            }
                        }
        }
    return out;
}

VElement VElement::basis(int d, int n, int w, int j) {
    VElement x(d, n, 0);
    x.add(w, Form::scalar(ScalarPoly::cv(n, j)));
    return x;
}

void VElement::add(int w, const Form& f) {
    if (f.is_syntactically_zero()) return;
    auto g = f.grade();
    if (!g || *g != -1) throw std::invalid_argument("VElement::add: component must have grade -1");
    for (const auto& [wm, c] : f.terms())
        if (wm.degree() != degree_) throw std::invalid_argument("VElement::add: degree mismatch");
    comps_.at(w - 1) += f;
}

VElement VElement::operator-() const {
    VElement out(d_, n_, degree_);
    for (int i = 0; i < d_; ++i) out.comps_[i] = -comps_[i];
    return out;
}

VElement& VElement::operator+=(const VElement& o) {
    if (d_ != o.d_ || n_ != o.n_ || degree_ != o.degree_) throw std::invalid_argument("VElement: shape mismatch");
    for (int i = 0; i < d_; ++i) comps_[i] += o.comps_[i];
    return *this;
}

VElement& VElement::operator-=(const VElement& o) {
    if (d_ != o.d_ || n_ != o.n_ || degree_ != o.degree_) throw std::invalid_argument("VElement: shape mismatch");
    for (int i = 0; i < d_; ++i) comps_[i] -= o.comps_[i];
    return *this;
}

bool v_is_zero(const VElement& x, const IdealDecider& ideal) {
    for (int w = 1; w <= x.dim(); ++w)
        if (!ideal.is_zero(x.comp(w))) return false;
    return true;
}

namespace {

// termwise Dolbeault operator on possibly bidegree-mixed forms
Form dolbeault(const Form& g, bool bar) {
    Form out(g.n());
    for (const auto& [wm, c] : g.terms()) {
        Form piece(g.n());
        piece.add_term(wm.gens, c);
        auto [p, q] = wm.bidegree();
        out += pi_pq(d(piece), bar ? p : p + 1, bar ? q + 1 : q);
    }
    return out;
}

// shared Leibniz-extension driver: conn(u, p, r, j) supplies the 1-form
// attached to L_{pr} acting from component w into component u
template <typename ConnForm>
VElement vbundle_extend(const LeftModule& V, const VElement& x, bool bar_tail, bool full_tail, ConnForm conn) {
    int n = x.n(), dim = x.dim();
    VElement out(dim, n, x.degree() + 1);
    for (int w = 1; w <= dim; ++w) {
        const Form& f = x.comp(w);
        if (f.is_syntactically_zero()) continue;
        for (const auto& [j, g] : present_tautological(f)) {
            for (int u = 1; u <= dim; ++u)
                for (int p = 1; p <= n; ++p)
                    for (int r = 1; r <= n; ++r) {
                        const GaussianRational& c = V.L(p, r, u, w);
                        if (c.is_zero()) continue;
                        out.add(u, wedge(conn(p, r, j), g) * c);
                    }
            Form tail = full_tail ? d(g) : dolbeault(g, bar_tail);
            out.add(w, ScalarPoly::cv(n, j) * tail);
        }
    }
    return out;
}

}  // namespace

VElement vbundle_nabla(const LeftModule& V, const GammaField& gamma, const VElement& x) {
    int n = x.n();
    return vbundle_extend(V, x, false, true, [&](int p, int r, int j) {
        Form acc(n);
        for (int q = 1; q <= n; ++q) acc += ScalarPoly::cv(n, q) * gamma.at(p, q, r, j);
        return acc;
    });
}

VElement vbundle_del(const LeftModule& V, const VElement& x) {
    int n = x.n();
    return vbundle_extend(V, x, false, false, [&](int p, int r, int j) {
        ScalarPoly c = ScalarPoly::cv(n, j) * ScalarPoly::cv(n, p);
        return c * Form::d_gen(n, r, false);
    });
}

VElement vbundle_delbar(const LeftModule& V, const VElement& x) {
    int n = x.n();
    return vbundle_extend(V, x, true, false, [&](int p, int r, int j) {
        // δ_{pr}·(Σ_q cv_q·v_q)·dcv_j − cv_j·v_r·dcv_p
        Form acc(n);
        if (p == r) {
            ScalarPoly s(n);
            for (int q = 1; q <= n; ++q) s += ScalarPoly::cv(n, q) * ScalarPoly::v(n, q);
            acc += s * Form::d_gen(n, j, true);
        }
        acc -= (ScalarPoly::cv(n, j) * ScalarPoly::v(n, r)) * Form::d_gen(n, p, true);
        return acc;
    });
}

std::vector<Form> pi02_curvature(const LeftModule& V, const GammaField& gamma, int w, int j) {
    int n = gamma.n(), d = V.dim();
    VElement r = vbundle_nabla(V, gamma, vbundle_nabla(V, gamma, VElement::basis(d, n, w, j)));
    std::vector<Form> out;
    out.reserve(d);
    for (int u = 1; u <= d; ++u) out.push_back(pi_pq(r.comp(u), 0, 2));
    return out;
}

Form pi02_closed_term(const LeftModule& V, int w, int t, int i, int u, int c, int g) {
    int n = V.n(), d = V.dim();
    Form out(n);
    auto LL = [&](int i1, int j1, int i2, int j2) {
        GaussianRational acc(0);
        for (int m = 1; m <= d; ++m) acc += V.L(i1, j1, u, m) * V.L(i2, j2, m, w);
        return acc;
    };
    if (t == i)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int s = 1; s <= n; ++s) {
                    GaussianRational k = LL(c, a, b, s);
                    if (k.is_zero()) continue;
                    Form ww = wedge(Form::d_gen(n, g, true), Form::d_gen(n, b, true));
                    out += (ScalarPoly::v(n, a) * ScalarPoly::v(n, s)) * (ww * k);
                }
    for (int a = 1; a <= n; ++a) {
        const GaussianRational& k = V.L(c, a, u, w);
        if (k.is_zero()) continue;
        Form ww = wedge(Form::d_gen(n, g, true), Form::d_gen(n, t, true));
        out -= (ScalarPoly::v(n, a) * ScalarPoly::v(n, i)) * (ww * k);
    }
    for (int b = 1; b <= n; ++b)
        for (int s = 1; s <= n; ++s) {
            GaussianRational k = LL(c, g, b, s);
            if (k.is_zero()) continue;
            Form ww = wedge(Form::d_gen(n, b, true), Form::d_gen(n, t, true));
            out += (ScalarPoly::v(n, s) * ScalarPoly::v(n, i)) * (ww * k);
        }
    return out;
}

bool pi02_flat(const LeftModule& V, const GammaField& gamma, const IdealDecider& ideal) {
    for (int w = 1; w <= V.dim(); ++w)
        for (int j = 1; j <= V.n(); ++j)
            for (const Form& f : pi02_curvature(V, gamma, w, j))
                if (!ideal.is_zero(f)) return false;
    return true;
}

bool holomorphic_check(const LeftModule& V, const IdealDecider& ideal) {
    int n = V.n(), d = V.dim();
    for (int w = 1; w <= d; ++w)
        for (int j = 1; j <= n; ++j) {
            VElement r = vbundle_delbar(V, vbundle_delbar(V, VElement::basis(d, n, w, j)));
            if (!v_is_zero(r, ideal)) return false;
        }
    return true;
}

bool functor_check(const std::vector<std::vector<GaussianRational>>& theta, const LeftModule& V1,
                   const LeftModule& V2, const IdealDecider& ideal) {
    int n = V1.n(), d1 = V1.dim(), d2 = V2.dim();
    if (V2.n() != n) throw std::invalid_argument("functor_check: algebra size mismatch");
    if (static_cast<int>(theta.size()) != d2) throw std::invalid_argument("functor_check: theta row count");
    for (const auto& row : theta)
        if (static_cast<int>(row.size()) != d1) throw std::invalid_argument("functor_check: theta column count");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 1; r <= d2; ++r)
                for (int c = 1; c <= d1; ++c) {
                    GaussianRational lhs(0), rhs(0);
                    for (int m = 1; m <= d1; ++m) lhs += theta[r - 1][m - 1] * V1.L(i, j, m, c);
                    for (int m = 1; m <= d2; ++m) rhs += V2.L(i, j, r, m) * theta[m - 1][c - 1];
                    if (lhs != rhs)
                        throw std::invalid_argument("functor_check: theta does not intertwine L[" +
                                                    std::to_string(i) + "," + std::to_string(j) + "]");
                }
    for (int w = 1; w <= d1; ++w)
        for (int j = 1; j <= n; ++j) {
            VElement lhs(d2, n, 1), rhs_in(d2, n, 0);
            VElement db1 = vbundle_delbar(V1, VElement::basis(d1, n, w, j));
            for (int u = 1; u <= d2; ++u) {
                Form acc(n);
                for (int m = 1; m <= d1; ++m) acc += db1.comp(m) * theta[u - 1][m - 1];
                lhs.add(u, acc);
                rhs_in.add(u, Form::scalar(ScalarPoly::cv(n, j)) * theta[u - 1][w - 1]);
            }
            VElement rhs = vbundle_delbar(V2, rhs_in);
            if (!v_is_zero(lhs - rhs, ideal)) return false;
        }
    return true;
}

}  // namespace cpn
