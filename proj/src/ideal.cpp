#include "cpn/ideal.hpp"

#include <algorithm>

namespace cpn {

namespace {

// all strictly increasing index subsets of {1..n} of size k
void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

std::vector<WedgeMonomial> wedge_monomials(int n, int p, int q) {
    std::vector<WedgeMonomial> out;
    if (p < 0 || q < 0 || p > n || q > n) return out;
    std::vector<std::vector<int>> dv, dcv;
    combinations(n, p, dv);
    combinations(n, q, dcv);
    for (const auto& b : dcv)
        for (const auto& h : dv) {
            WedgeMonomial w;
            for (int i : b) w.gens.push_back(WedgeGen{true, i});
            for (int i : h) w.gens.push_back(WedgeGen{false, i});
            out.push_back(std::move(w));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// canonical monomials with given grade and total degree <= bound
void canonical_monomials(int n, int grade, int bound, std::vector<VMonomial>& out) {
    // |alpha| - |beta| = grade, |alpha| + |beta| <= bound
    std::vector<int> alpha(n, 0), beta(n, 0);
    auto fill = [&](auto&& self, std::vector<int>& vec, int pos, int remaining, auto&& done) -> void {
        if (pos == n - 1) {
            vec[pos] = remaining;
            done();
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            vec[pos] = e;
            self(self, vec, pos + 1, remaining - e, done);
        }
    };
    for (int ka = 0; ka <= bound; ++ka) {
        int kb = ka - grade;
        if (kb < 0 || ka + kb > bound) continue;
        fill(fill, alpha, 0, ka, [&] {
            fill(fill, beta, 0, kb, [&] {
                if (alpha[n - 1] > 0 && beta[n - 1] > 0) return;  // non-canonical
                out.emplace_back(alpha, beta);
            });
        });
    }
}

}  // namespace

IdealDecider::Component IdealDecider::build(int p, int q, int grade, int bound) const {
    Component comp;
    // coordinates, ordered by descending coefficient degree so that pivots
    // are consumed at high degree and canonical remainders stay small
    std::vector<WedgeMonomial> wedges = wedge_monomials(n_, p, q);
    for (const auto& w : wedges) {
        std::vector<VMonomial> monos;
        canonical_monomials(n_, grade - w.grade(), bound, monos);
        for (auto& m : monos) comp.coords.push_back(Coord{w, std::move(m)});
    }
    std::sort(comp.coords.begin(), comp.coords.end(), [](const Coord& a, const Coord& b) {
        int da = a.m.degree(), db = b.m.degree();
        if (da != db) return da > db;
        if (!(a.w == b.w)) return a.w < b.w;
        return a.m < b.m;
    });
    if (comp.coords.size() > dim_cap_)
        throw ResourceError("relation basis component exceeds dimension cap (" +
                            std::to_string(comp.coords.size()) + " coordinates)");
    for (std::size_t i = 0; i < comp.coords.size(); ++i)
        comp.index.emplace(std::make_pair(comp.coords[i].w, comp.coords[i].m), static_cast<int>(i));

    struct Gen {
        Form form;
        int bp, bq;
        int cdeg;  // coefficient degree the generator itself contributes
    };
    const std::vector<Gen> gens = {{relation_theta(n_), 1, 0, 1},
                                   {relation_thetabar(n_), 0, 1, 1},
                                   {relation_omega(n_), 1, 1, 0}};

    auto insert_row = [&](const Form& f) {
        std::map<int, GaussianRational> vec;
        for (const auto& [w, c] : f.terms())
            for (const auto& [m, k] : c.terms()) {
                auto it = comp.index.find(std::make_pair(w, m));
                if (it == comp.index.end())
                    throw std::logic_error("ideal row leaves the component; bound accounting is wrong");
                vec[it->second] += k;
                if (vec[it->second].is_zero()) vec.erase(it->second);
            }
        eliminate(comp, vec);
        if (vec.empty()) return;
        // normalize leading coefficient to 1
        auto lead = vec.begin();
        GaussianRational inv = lead->second.inverse();
        for (auto& [idx, c] : vec) c *= inv;
        comp.pivot_row.emplace(lead->first, comp.rows.size());
        comp.rows.push_back(std::move(vec));
    };

    for (const auto& g : gens) {
        std::vector<WedgeMonomial> mults = wedge_monomials(n_, p - g.bp, q - g.bq);
        for (const auto& wm : mults) {
            Form wform(n_);
            wform.add_term(wm.gens, ScalarPoly::one(n_));
            Form base = wedge(wform, g.form);
            if (base.is_syntactically_zero()) continue;
            std::vector<VMonomial> monos;
            canonical_monomials(n_, grade - wm.grade(), bound - g.cdeg, monos);
            for (const auto& m : monos) insert_row(ScalarPoly::monomial(m, GaussianRational(1)) * base);
        }
    }
    return comp;
}

void IdealDecider::eliminate(const Component& comp, std::map<int, GaussianRational>& vec) {
    // single ascending pass: a row's entries all sit at or after its pivot,
    // so clearing pivot coordinates in index order terminates
    auto it = vec.begin();
    while (it != vec.end()) {
        auto pv = comp.pivot_row.find(it->first);
        if (pv == comp.pivot_row.end()) {
            ++it;
            continue;
        }
        int cur = it->first;
        GaussianRational factor = it->second;
        const auto& row = comp.rows[pv->second];
        for (const auto& [idx, c] : row) {
            auto [jt, inserted] = vec.emplace(idx, GaussianRational(0));
            jt->second -= factor * c;
            if (jt->second.is_zero()) vec.erase(jt);
        }
        it = vec.upper_bound(cur);
    }
}

const IdealDecider::Component& IdealDecider::component(int p, int q, int grade, int bound) const {
    Key key{p, q, grade, bound};
    std::unique_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    lock.unlock();
    auto comp = std::make_unique<Component>(build(p, q, grade, bound));
    lock.lock();
    auto [it2, ok] = cache_.emplace(key, std::move(comp));
    return *it2->second;
}

bool IdealDecider::member(const Form& a, int slack) const {
    if (a.is_syntactically_zero()) return true;
    // split into (bidegree, grade)-homogeneous pieces; the ideal is graded
    std::map<std::tuple<int, int, int>, Form> pieces;
    for (const auto& [w, c] : a.terms()) {
        auto [p, q] = w.bidegree();
        for (const auto& [m, k] : c.terms()) {
            int g = m.grade() + w.grade();
            auto [it, inserted] = pieces.try_emplace(std::make_tuple(p, q, g), Form(n_));
            it->second.add_term(w.gens, ScalarPoly::monomial(m, k));
        }
    }
    for (auto& [key, piece] : pieces) {
        auto [p, q, g] = key;
        if (piece.degree() == 0) return false;  // nonzero scalars are never in the ideal
        int bound = piece.coeff_degree() + slack;
        const Component& comp = component(p, q, g, bound);
        std::map<int, GaussianRational> vec;
        for (const auto& [w, c] : piece.terms())
            for (const auto& [m, k] : c.terms()) vec[comp.index.at(std::make_pair(w, m))] += k;
        eliminate(comp, vec);
        if (!vec.empty()) return false;
    }
    return true;
}

bool IdealDecider::is_zero(const Form& a) const {
    if (a.is_syntactically_zero()) return true;
    for (int s = 0; s < default_slack_; ++s)
        if (member(a, s)) return true;
    return member(a, default_slack_);
}

Form IdealDecider::reduce(const Form& a, int slack) const {
    Form out(n_);
    std::map<std::tuple<int, int, int>, Form> pieces;
    for (const auto& [w, c] : a.terms()) {
        auto [p, q] = w.bidegree();
        for (const auto& [m, k] : c.terms()) {
            int g = m.grade() + w.grade();
            auto [it, inserted] = pieces.try_emplace(std::make_tuple(p, q, g), Form(n_));
            it->second.add_term(w.gens, ScalarPoly::monomial(m, k));
        }
    }
    for (auto& [key, piece] : pieces) {
        auto [p, q, g] = key;
        if (piece.degree() == 0) {
            out += piece;
            continue;
        }
        int bound = piece.coeff_degree() + slack;
        const Component& comp = component(p, q, g, bound);
        std::map<int, GaussianRational> vec;
        for (const auto& [w, c] : piece.terms())
            for (const auto& [m, k] : c.terms()) vec[comp.index.at(std::make_pair(w, m))] += k;
        eliminate(comp, vec);
        for (const auto& [idx, c] : vec)
            out.add_term(comp.coords[idx].w.gens, ScalarPoly::monomial(comp.coords[idx].m, c));
    }
    return out;
}

std::vector<ComponentStats> IdealDecider::stats() const {
    std::lock_guard lock(mu_);
    std::vector<ComponentStats> out;
    for (const auto& [key, comp] : cache_) {
        auto [p, q, g, bound] = key;
        out.push_back(ComponentStats{p, q, g, bound, comp->coords.size(), comp->rows.size()});
    }
    return out;
}

}  // namespace cpn
