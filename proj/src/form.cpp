#include "cpn/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cpn {

int WedgeMonomial::normalize(std::vector<WedgeGen>& gens) {
    // insertion sort counting swaps; adjacent transposition flips the sign
    int sign = 1;
    for (size_t i = 1; i < gens.size(); ++i) {
        WedgeGen g = gens[i];
        size_t j = i;
        while (j > 0 && g < gens[j - 1]) {
            gens[j] = gens[j - 1];
            --j;
            sign = -sign;
        }
        gens[j] = g;
    }
    for (size_t i = 1; i < gens.size(); ++i)
        if (gens[i] == gens[i - 1]) return 0;
    return sign;
}

Form Form::scalar(ScalarPoly p) {
    Form f(p.n());
    f.add_term({}, p);
    return f;
}

Form Form::d_gen(int n, int i, bool bar) {
    Form f(n);
    f.add_term({WedgeGen{bar, i}}, ScalarPoly::one(n));
    return f;
}

void Form::add_term(std::vector<WedgeGen> gens, const ScalarPoly& coeff) {
    if (coeff.is_zero()) return;
    int sign = WedgeMonomial::normalize(gens);
    if (sign == 0) return;
    WedgeMonomial w{std::move(gens)};
    ScalarPoly c = sign == 1 ? coeff : -coeff;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Form::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
}

int Form::coeff_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
    return d;
}

std::optional<std::pair<int, int>> Form::bidegree() const {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [w, c] : terms_) {
        auto b = w.bidegree();
        if (!bd)
            bd = b;
        else if (*bd != b)
            return std::nullopt;
    }
    return bd ? bd : std::optional<std::pair<int, int>>({0, 0});
}

std::optional<int> Form::grade() const {
    std::optional<int> g;
    for (const auto& [w, c] : terms_) {
        auto cg = c.grade();
        if (!cg) return std::nullopt;
        int total = *cg + w.grade();
        if (!g)
            g = total;
        else if (*g != total)
            return std::nullopt;
    }
    return g ? g : std::optional<int>(0);
}

Form Form::operator-() const {
    Form out(n_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [w, c] : o.terms_) add_term(w.gens, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [w, c] : o.terms_) add_term(w.gens, -c);
    return *this;
}

Form Form::operator*(const GaussianRational& k) const {
    Form out(n_);
    if (k.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * k);
    return out;
}

Form operator*(const ScalarPoly& p, const Form& a) {
    Form out(a.n_);
    for (const auto& [w, c] : a.terms_) out.add_term(w.gens, p * c);
    return out;
}

Form wedge(const Form& a, const Form& b) {
    Form out(a.n());
    if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<WedgeGen> gens = wa.gens;
            gens.insert(gens.end(), wb.gens.begin(), wb.gens.end());
            out.add_term(std::move(gens), ca * cb);
        }
    return out;
}

Form d(const Form& a) {
    Form out(a.n());
    for (const auto& [w, c] : a.terms()) {
        for (int i = 1; i <= a.n(); ++i) {
            for (bool bar : {false, true}) {
                ScalarPoly dc = c.derivative(i, bar);
                if (dc.is_zero()) continue;
                std::vector<WedgeGen> gens;
                gens.reserve(w.gens.size() + 1);
                gens.push_back(WedgeGen{bar, i});
                gens.insert(gens.end(), w.gens.begin(), w.gens.end());
                out.add_term(std::move(gens), dc);
            }
        }
    }
    return out;
}

Form pi_pq(const Form& a, int p, int q) {
    Form out(a.n());
    for (const auto& [w, c] : a.terms())
        if (w.bidegree() == std::make_pair(p, q)) out.add_term(w.gens, c);
    return out;
}

static std::pair<int, int> require_bihomogeneous(const Form& a) {
    auto bd = a.bidegree();
    if (!bd) throw std::invalid_argument("del/delbar: input is not bihomogeneous; split with pi_pq first");
    return *bd;
}

Form del(const Form& a) {
    auto [p, q] = require_bihomogeneous(a);
    return pi_pq(d(a), p + 1, q);
}

Form delbar(const Form& a) {
    auto [p, q] = require_bihomogeneous(a);
    return pi_pq(d(a), p, q + 1);
}

Form star_form(const Form& a) {
    Form out(a.n());
    for (const auto& [w, c] : a.terms()) {
        // (g1 ^ ... ^ gk)* = gk* ^ ... ^ g1* with sign from the graded
        // reversal rule; for k generators the reversal sign is (-1)^(k(k-1)/2)
        int k = w.degree();
        int sign = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
        std::vector<WedgeGen> gens(w.gens.rbegin(), w.gens.rend());
        for (auto& g : gens) g.bar = !g.bar;
        ScalarPoly c2 = c.star();
        out.add_term(std::move(gens), sign == 1 ? c2 : -c2);
    }
    return out;
}

Form relation_theta(int n) {
    Form f(n);
    for (int i = 1; i <= n; ++i) f.add_term({WedgeGen{false, i}}, ScalarPoly::cv(n, i));
    return f;
}

Form relation_thetabar(int n) {
    Form f(n);
    for (int i = 1; i <= n; ++i) f.add_term({WedgeGen{true, i}}, ScalarPoly::v(n, i));
    return f;
}

Form relation_omega(int n) {
    Form f(n);
    for (int i = 1; i <= n; ++i) f.add_term({WedgeGen{false, i}, WedgeGen{true, i}}, ScalarPoly::one(n));
    return f;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string wedge_txt;
        for (const auto& g : w.gens) {
            if (!wedge_txt.empty()) wedge_txt += "^";
            wedge_txt += (g.bar ? "dcv" : "dv") + std::to_string(g.idx);
        }
        if (wedge_txt.empty()) {
            std::string s = c.str();
            if (!first && s[0] != '-') os << '+';
            os << s;
            first = false;
            continue;
        }
        // print the coefficient polynomial, folding a leading 1/-1
        std::string ctxt;
        bool neg = false;
        if (c.terms().size() == 1) {
            ctxt = c.str();
            if (ctxt == "1")
                ctxt = "";
            else if (ctxt == "-1") {
                ctxt = "";
                neg = true;
            } else if (ctxt[0] == '-' && ctxt.find('(') == std::string::npos) {
                // keep the sign out front for single-term coefficients
                neg = true;
                ctxt = ctxt.substr(1);
            }
        } else {
            ctxt = "(" + c.str() + ")";
        }
        std::string term = ctxt;
        if (!term.empty()) term += "*";
        term += wedge_txt;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        os << term;
        first = false;
    }
    return os.str();
}

Form Form::parse(int n, const std::string& text) {
    // split on top-level +/- (outside parentheses), each chunk is
    // coeff-factors '*' wedge-factors with '^'-joined generators
    Form out(n);
    if (text == "0") return out;
    std::vector<std::pair<std::string, int>> chunks;
    std::string cur;
    int sign = 1, depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && i > 0) {
            chunks.emplace_back(cur, sign);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        if (i == 0 && ch == '-') {
            sign = -1;
            continue;
        }
        cur += ch;
    }
    chunks.emplace_back(cur, sign);
    for (auto& [chunk, sgn] : chunks) {
        // separate the wedge part: factors containing 'd' prefix generators
        std::vector<std::string> factors;
        std::string f;
        int d2 = 0;
        for (char ch : chunk) {
            if (ch == '(') ++d2;
            if (ch == ')') --d2;
            if (ch == '*' && d2 == 0) {
                factors.push_back(f);
                f.clear();
            } else
                f += ch;
        }
        if (!f.empty()) factors.push_back(f);
        ScalarPoly coeff = ScalarPoly::one(n);
        std::vector<WedgeGen> gens;
        for (const auto& fac : factors) {
            if (fac.size() > 1 && (fac[0] == 'd' || fac.find('^') != std::string::npos)) {
                // wedge factor: '^'-joined dv/dcv atoms
                std::string atom;
                std::istringstream is(fac);
                while (std::getline(is, atom, '^')) {
                    bool bar;
                    size_t off;
                    if (atom.rfind("dcv", 0) == 0) {
                        bar = true;
                        off = 3;
                    } else if (atom.rfind("dv", 0) == 0) {
                        bar = false;
                        off = 2;
                    } else
                        throw std::invalid_argument("Form::parse: bad wedge atom '" + atom + "'");
                    gens.push_back(WedgeGen{bar, std::stoi(atom.substr(off))});
                }
            } else {
                // scalar factor; a parenthesized polynomial is parsed on its own
                std::string t = fac;
                if (t.size() > 1 && t.front() == '(' && t.back() == ')' && t.find('v') != std::string::npos)
                    t = t.substr(1, t.size() - 2);
                coeff = coeff * ScalarPoly::parse(n, t);
            }
        }
        if (sgn < 0) coeff = -coeff;
        out.add_term(std::move(gens), coeff);
    }
    return out;
}

}  // namespace cpn
