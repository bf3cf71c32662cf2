#include "cpn/scalar_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cpn {

std::string to_string(const GaussianRational& c) {
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << boost::multiprecision::numerator(r);
        if (boost::multiprecision::denominator(r) != 1)
            os << '/' << boost::multiprecision::denominator(r);
        return os.str();
    };
    if (c.im == 0) return rat(c.re);
    std::string imag;
    if (c.im == 1)
        imag = "i";
    else if (c.im == -1)
        imag = "-i";
    else
        imag = rat(c.im) + "*i";
    if (c.re == 0) return imag;
    std::string out = "(" + rat(c.re);
    if (imag[0] != '-') out += "+";
    out += imag + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << to_string(c); }

ScalarPoly ScalarPoly::constant(int n, GaussianRational c) {
    ScalarPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(VMonomial(n), std::move(c));
    return p;
}

ScalarPoly ScalarPoly::v(int n, int i) {
    VMonomial m(n);
    m.alpha.at(i - 1) = 1;
    return monomial(std::move(m), GaussianRational(1));
}

ScalarPoly ScalarPoly::cv(int n, int i) {
    VMonomial m(n);
    m.beta.at(i - 1) = 1;
    return monomial(std::move(m), GaussianRational(1));
}

ScalarPoly ScalarPoly::monomial(VMonomial m, GaussianRational c) {
    ScalarPoly p(static_cast<int>(m.alpha.size()));
    p.add_term(m, c);
    return p;
}

void ScalarPoly::add_canonical(const VMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ScalarPoly::add_term(const VMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (m.canonical()) {
        add_canonical(m, c);
        return;
    }
    // v_n * cv_n -> 1 - sum_{i<n} v_i cv_i
    VMonomial r = m;
    r.alpha.back() -= 1;
    r.beta.back() -= 1;
    add_term(r, c);
    for (int i = 0; i + 1 < n_; ++i) {
        VMonomial s = r;
        s.alpha[i] += 1;
        s.beta[i] += 1;
        add_term(s, -c);
    }
}

std::optional<int> ScalarPoly::grade() const {
    std::optional<int> g;
    for (const auto& [m, c] : terms_) {
        int gm = m.grade();
        if (!g)
            g = gm;
        else if (*g != gm)
            return std::nullopt;
    }
    return g ? g : std::optional<int>(0);
}

int ScalarPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

ScalarPoly ScalarPoly::star() const {
    ScalarPoly out(n_);
    for (const auto& [m, c] : terms_) out.add_term(VMonomial(m.beta, m.alpha), c.conj());
    return out;
}

ScalarPoly ScalarPoly::derivative(int i, bool bar) const {
    ScalarPoly out(n_);
    for (const auto& [m, c] : terms_) {
        int e = bar ? m.beta[i - 1] : m.alpha[i - 1];
        if (e == 0) continue;
        VMonomial d = m;
        (bar ? d.beta : d.alpha)[i - 1] -= 1;
        out.add_term(d, c * GaussianRational(e));
    }
    return out;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_canonical(m, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_canonical(m, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            VMonomial m = ma;
            for (int i = 0; i < out.n_; ++i) {
                m.alpha[i] += mb.alpha[i];
                m.beta[i] += mb.beta[i];
            }
            out.add_term(m, ca * cb);
        }
    return out;
}

ScalarPoly ScalarPoly::operator*(const GaussianRational& c) const {
    ScalarPoly out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m.alpha[i]; ++e) mono += (mono.empty() ? "" : "*") + ("v" + std::to_string(i + 1));
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m.beta[i]; ++e) mono += (mono.empty() ? "" : "*") + ("cv" + std::to_string(i + 1));
        std::string coeff;
        bool neg = false;
        if (mono.empty()) {
            coeff = to_string(c);
        } else if (c.is_one()) {
            coeff = "";
        } else if (c == GaussianRational(-1)) {
            neg = true;
        } else {
            coeff = to_string(c);
            if (!coeff.empty() && coeff[0] == '-' && coeff.find('(') == std::string::npos) {
                neg = true;
                coeff = coeff.substr(1);
            }
        }
        std::string term = coeff;
        if (!mono.empty()) {
            if (!term.empty()) term += "*";
            term += mono;
        }
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

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    Rational rational() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("ScalarPoly::parse: expected number at '" + s.substr(start) + "'");
        Rational num(s.substr(start, pos - start));
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            num /= Rational(s.substr(dstart, pos - dstart));
        }
        return num;
    }
};

// factor := '(' re (+|-) im '*'? 'i' ')' | rational ['*i'] | 'i' | 'v'k | 'cv'k
// Returns either a coefficient or a generator contribution applied to (coeff, mono).
void parse_factor(Lexer& lx, int n, GaussianRational& coeff, VMonomial& mono) {
    lx.skip_ws();
    char c = lx.peek();
    if (c == '(') {
        lx.eat('(');
        Rational re = lx.rational();
        bool neg_im;
        if (lx.eat('+'))
            neg_im = false;
        else if (lx.eat('-'))
            neg_im = true;
        else
            throw std::invalid_argument("ScalarPoly::parse: bad complex coefficient");
        Rational im(1);
        if (lx.peek() != 'i') {
            im = lx.rational();
            lx.eat('*');
        }
        if (!lx.eat('i')) throw std::invalid_argument("ScalarPoly::parse: expected i in complex coefficient");
        if (neg_im) im = -im;
        if (!lx.eat(')')) throw std::invalid_argument("ScalarPoly::parse: expected )");
        coeff *= GaussianRational(re, im);
        return;
    }
    if (c == 'i') {
        ++lx.pos;
        coeff *= GaussianRational::i();
        return;
    }
    if (c == 'c' || c == 'v') {
        bool bar = (c == 'c');
        if (bar) {
            ++lx.pos;
            if (lx.peek() != 'v') throw std::invalid_argument("ScalarPoly::parse: expected cv generator");
        }
        ++lx.pos;
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
        if (start == lx.pos) throw std::invalid_argument("ScalarPoly::parse: generator index missing");
        int idx = std::stoi(lx.s.substr(start, lx.pos - start));
        if (idx < 1 || idx > n) throw std::invalid_argument("ScalarPoly::parse: generator index out of range");
        (bar ? mono.beta : mono.alpha)[idx - 1] += 1;
        return;
    }
    Rational r = lx.rational();
    lx.skip_ws();
    // optional *i handled by the next factor
    coeff *= GaussianRational(r);
}

}  // namespace

ScalarPoly ScalarPoly::parse(int n, const std::string& text) {
    ScalarPoly out(n);
    Lexer lx(text);
    if (lx.peek() == '\0') return out;
    bool neg = lx.eat('-');
    while (true) {
        GaussianRational coeff(1);
        VMonomial mono(n);
        parse_factor(lx, n, coeff, mono);
        while (lx.eat('*')) parse_factor(lx, n, coeff, mono);
        if (neg) coeff = -coeff;
        out.add_term(mono, coeff);
        lx.skip_ws();
        if (lx.eat('+'))
            neg = false;
        else if (lx.eat('-'))
            neg = true;
        else
            break;
    }
    lx.skip_ws();
    if (lx.pos != lx.s.size()) throw std::invalid_argument("ScalarPoly::parse: trailing input");
    return out;
}

}  // namespace cpn
