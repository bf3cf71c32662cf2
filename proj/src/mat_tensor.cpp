#include "cpn/mat_tensor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cpn/scalar_poly.hpp"

namespace cpn {

MatTensor MatTensor::unit(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("MatTensor::unit: index out of range");
    MatTensor t(n, 1);
    t.terms_.emplace(std::vector<int>{a, b}, GaussianRational(1));
    return t;
}

MatTensor MatTensor::identity(int n) {
    MatTensor t(n, 1);
    for (int i = 1; i <= n; ++i) t.terms_.emplace(std::vector<int>{i, i}, GaussianRational(1));
    return t;
}

void MatTensor::add_term(const std::vector<int>& tuple, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(tuple.size()) != 2 * k_) throw std::invalid_argument("MatTensor::add_term: tuple length");
    auto it = terms_.find(tuple);
    if (it == terms_.end()) {
        terms_.emplace(tuple, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MatTensor MatTensor::operator-() const {
    MatTensor out(n_, k_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
    return out;
}

MatTensor& MatTensor::operator+=(const MatTensor& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

MatTensor& MatTensor::operator-=(const MatTensor& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

MatTensor MatTensor::operator*(const GaussianRational& c) const {
    MatTensor out(n_, k_);
    if (c.is_zero()) return out;
    for (const auto& [t, k] : terms_) out.terms_.emplace(t, k * c);
    return out;
}

MatTensor tensor(const MatTensor& x, const MatTensor& y) {
    MatTensor out(x.n(), x.k() + y.k());
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms()) {
            std::vector<int> t = tx;
            t.insert(t.end(), ty.begin(), ty.end());
            out.add_term(t, cx * cy);
        }
    return out;
}

MatTensor d_uni_0(const MatTensor& a) {
    if (a.k() != 1) throw std::invalid_argument("d_uni_0: expects a length-1 tensor");
    MatTensor one = MatTensor::identity(a.n());
    return tensor(one, a) - tensor(a, one);
}

MatTensor d_uni(const MatTensor& x) {
    MatTensor out(x.n(), x.k() + 1);
    for (const auto& [t, c] : x.terms()) {
        for (int pos = 0; pos <= x.k(); ++pos) {
            GaussianRational sc = (pos % 2 == 0) ? c : -c;
            for (int u = 1; u <= x.n(); ++u) {
                std::vector<int> ins = t;
                ins.insert(ins.begin() + 2 * pos, {u, u});
                out.add_term(ins, sc);
            }
        }
    }
    return out;
}

MatTensor uni_product(const MatTensor& x, const MatTensor& y) {
    if (x.n() != y.n()) throw std::invalid_argument("uni_product: dimension mismatch");
    MatTensor out(x.n(), x.k() + y.k() - 1);
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms()) {
            // E_{a,b} · E_{c,d} = δ_{bc} E_{a,d} at the junction
            if (tx.back() != ty.front()) continue;
            std::vector<int> t(tx.begin(), tx.end() - 2);
            t.push_back(tx[tx.size() - 2]);
            t.push_back(ty[1]);
            t.insert(t.end(), ty.begin() + 2, ty.end());
            out.add_term(t, cx * cy);
        }
    return out;
}

bool is_universal_form(const MatTensor& x) {
    for (int j = 0; j + 1 < x.k(); ++j) {
        MatTensor contracted(x.n(), x.k() - 1);
        for (const auto& [t, c] : x.terms()) {
            if (t[2 * j + 1] != t[2 * j + 2]) continue;
            std::vector<int> s(t.begin(), t.begin() + 2 * j);
            s.push_back(t[2 * j]);
            s.push_back(t[2 * j + 3]);
            s.insert(s.end(), t.begin() + 2 * j + 4, t.end());
            contracted.add_term(s, c);
        }
        if (!contracted.is_zero()) return false;
    }
    return true;
}

namespace {

// flat coordinate of a tuple for echelon bookkeeping
long coord_of(const std::vector<int>& t, int n) {
    long c = 0;
    for (int v : t) c = c * n + (v - 1);
    return c;
}

}  // namespace

std::vector<MatTensor> uni_basis(int m, int n) {
    if (m < 0) throw std::invalid_argument("uni_basis: negative degree");
    std::vector<MatTensor> out;
    // echelon rows keyed by leading coordinate
    std::map<long, std::map<long, GaussianRational>> rows;
    std::vector<std::pair<int, int>> units;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) units.emplace_back(a, b);

    std::vector<int> pick(m + 1, 0);
    while (true) {
        MatTensor cand = MatTensor::unit(n, units[pick[0]].first, units[pick[0]].second);
        for (int j = 1; j <= m; ++j)
            cand = uni_product(cand, d_uni_0(MatTensor::unit(n, units[pick[j]].first, units[pick[j]].second)));
        if (!cand.is_zero()) {
            std::map<long, GaussianRational> vec;
            for (const auto& [t, c] : cand.terms()) vec.emplace(coord_of(t, n), c);
            while (!vec.empty()) {
                auto it = rows.find(vec.begin()->first);
                if (it == rows.end()) break;
                GaussianRational f = vec.begin()->second;
                for (const auto& [idx, c] : it->second) {
                    auto [jt, inserted] = vec.emplace(idx, GaussianRational(0));
                    jt->second -= f * c;
                    if (jt->second.is_zero()) vec.erase(jt);
                }
            }
            if (!vec.empty()) {
                GaussianRational inv = vec.begin()->second.inverse();
                for (auto& [idx, c] : vec) c *= inv;
                long lead = vec.begin()->first;
                rows.emplace(lead, std::move(vec));
                out.push_back(std::move(cand));
            }
        }
        int j = m;
        while (j >= 0 && ++pick[j] == static_cast<int>(units.size())) pick[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

std::string MatTensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string atoms;
        for (int j = 0; j < k_; ++j) {
            if (j > 0) atoms += "(x)";
            atoms += "E[" + std::to_string(t[2 * j]) + "," + std::to_string(t[2 * j + 1]) + "]";
        }
        std::string coeff;
        bool neg = false;
        if (c.is_one()) {
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
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        if (!coeff.empty()) os << coeff << '*';
        os << atoms;
        first = false;
    }
    return os.str();
}

MatTensor MatTensor::parse(int n, const std::string& text) {
    if (text == "0") return MatTensor(n, 1);
    // split top-level +/- outside parentheses and brackets
    std::vector<std::pair<std::string, int>> chunks;
    std::string cur;
    int sign = 1, depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
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
        if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    chunks.emplace_back(cur, sign);

    int k = -1;
    MatTensor out(n, 1);
    for (auto& [chunk, sgn] : chunks) {
        GaussianRational coeff(1);
        std::string body = chunk;
        size_t epos = body.find("E[");
        if (epos == std::string::npos) throw std::invalid_argument("MatTensor::parse: no E[..] atom in '" + chunk + "'");
        if (epos > 0) {
            std::string ctext = body.substr(0, epos);
            if (!ctext.empty() && ctext.back() == '*') ctext.pop_back();
            if (ctext.size() > 1 && ctext.front() == '(' && ctext.back() == ')' &&
                ctext.find("(x)") == std::string::npos)
                ctext = ctext.substr(1, ctext.size() - 2);
            // the scalar parser handles every coefficient shape we emit
            ScalarPoly cp = ScalarPoly::parse(1, ctext);
            if (cp.terms().size() > 1 || (!cp.is_zero() && !cp.terms().begin()->first.is_one()))
                throw std::invalid_argument("MatTensor::parse: bad coefficient '" + ctext + "'");
            coeff = cp.is_zero() ? GaussianRational(0) : cp.terms().begin()->second;
            body = body.substr(epos);
        }
        std::vector<int> tuple;
        size_t pos = 0;
        while (pos < body.size()) {
            if (body.compare(pos, 2, "E[") != 0) throw std::invalid_argument("MatTensor::parse: expected E[");
            size_t close = body.find(']', pos);
            size_t comma = body.find(',', pos);
            if (close == std::string::npos || comma == std::string::npos || comma > close)
                throw std::invalid_argument("MatTensor::parse: malformed E[a,b]");
            tuple.push_back(std::stoi(body.substr(pos + 2, comma - pos - 2)));
            tuple.push_back(std::stoi(body.substr(comma + 1, close - comma - 1)));
            pos = close + 1;
            if (pos < body.size()) {
                if (body.compare(pos, 3, "(x)") != 0) throw std::invalid_argument("MatTensor::parse: expected (x)");
                pos += 3;
            }
        }
        int tk = static_cast<int>(tuple.size()) / 2;
        if (k == -1) {
            k = tk;
            out = MatTensor(n, k);
        } else if (tk != k) {
            throw std::invalid_argument("MatTensor::parse: mixed tensor lengths");
        }
        out.add_term(tuple, sgn < 0 ? -coeff : coeff);
    }
    return out;
}

}  // namespace cpn
