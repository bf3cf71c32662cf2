#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "cpn/form.hpp"

namespace cpn {

/// Raised when a relation-basis component would exceed the configured size
/// cap. Never a wrong answer: callers must surface this, not swallow it.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComponentStats {
    int p, q, grade, bound;
    std::size_t dimension;  // number of coordinates
    std::size_t rank;       // echelon rows
};

/// Decides membership in the bihomogeneous relation ideal generated by
/// theta, thetabar and omega, by exact row reduction of each
/// finite-dimensional (bidegree, grade, coefficient-degree) component.
/// Components are cached; the cache is a compute-once-per-key memo table
/// safe for concurrent use.
class IdealDecider {
public:
    explicit IdealDecider(int n, int default_slack = 2, std::size_t dim_cap = 2000000)
        : n_(n), default_slack_(default_slack), dim_cap_(dim_cap) {}

    int n() const { return n_; }
    int default_slack() const { return default_slack_; }

    /// True iff a lies in the ideal component spanned by multiplier*generator
    /// products with coefficient degree bounded by deg(a) + slack.
    /// Monotone in slack.
    bool member(const Form& a, int slack) const;

    /// Membership with slack escalation 0..default_slack (cheap when true
    /// at low slack, authoritative at the default).
    bool is_zero(const Form& a) const;

    /// Canonical coset representative: a minus its projection onto the
    /// cached span at the given slack. reduce(a) == reduce(b) whenever
    /// a - b is detected as a member at that slack.
    Form reduce(const Form& a, int slack) const;

    std::vector<ComponentStats> stats() const;

private:
    struct Coord {
        WedgeMonomial w;
        VMonomial m;
    };
    struct Component {
        std::vector<Coord> coords;
        std::map<std::pair<WedgeMonomial, VMonomial>, int> index;
        // echelon rows: leading coordinate is the pivot, normalized to 1
        std::vector<std::map<int, GaussianRational>> rows;
        std::map<int, std::size_t> pivot_row;
    };
    using Key = std::tuple<int, int, int, int>;  // p, q, grade, bound

    const Component& component(int p, int q, int grade, int bound) const;
    Component build(int p, int q, int grade, int bound) const;

    static void eliminate(const Component& comp, std::map<int, GaussianRational>& vec);

    int n_;
    int default_slack_;
    std::size_t dim_cap_;
    mutable std::mutex mu_;
    mutable std::map<Key, std::unique_ptr<Component>> cache_;
};

}  // namespace cpn
