#include "symcomb/polar.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace symcomb {

int polarized_ideal::flat_index(int var, int level) const {
    return offsets[var - 1] + (level - 1);
}

std::pair<int, int> polarized_ideal::var_level(int flat) const {
    for (size_t i = 0; i + 1 < offsets.size(); ++i)
        if (flat < offsets[i + 1]) return {static_cast<int>(i) + 1, flat - offsets[i] + 1};
    return {static_cast<int>(offsets.size()), flat - offsets.back() + 1};
}

polarized_ideal polarize(const monomial_ideal& a) {
    if (a.is_zero()) throw empty_input("polarize: zero ideal");
    int n = a.ambient_n();
    std::vector<int> levels(n, 0);
    for (const auto& g : a.generators())
        for (int i = 0; i < n; ++i) levels[i] = std::max(levels[i], g[i]);
    std::vector<int> offsets(n, 0);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        offsets[i] = total;
        total += levels[i];
    }
    std::vector<monomial> gens;
    for (const auto& g : a.generators()) {
        monomial p(total, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < g[i]; ++j) p[offsets[i] + j] = 1;
        gens.push_back(std::move(p));
    }
    polarized_ideal out{monomial_ideal(total, std::move(gens)), a, std::move(levels), std::move(offsets)};
    return out;
}

long indexed_prime::level_sum() const {
    long s = 0;
    for (auto [v, l] : vars) s += l;
    return s;
}

std::vector<indexed_prime> ass_primes_prime_power(const std::vector<int>& f, long k) {
    if (f.empty()) throw empty_input("ass_primes_prime_power: empty F");
    if (k < 1) throw nonpositive_k("k must be >= 1");
    std::vector<int> base = f;
    std::sort(base.begin(), base.end());
    size_t d = base.size();
    std::vector<indexed_prime> out;
    std::vector<int> a(d, 1);
    auto rec = [&](auto&& self, size_t idx, long sum) -> void {
        if (idx == d) {
            indexed_prime p;
            for (size_t i = 0; i < d; ++i) p.vars.emplace_back(base[i], a[i]);
            out.push_back(std::move(p));
            return;
        }
        for (int lv = 1; lv <= k; ++lv) {
            if (sum + lv + static_cast<long>(d - idx - 1) > k + static_cast<long>(d) - 1) break;
            a[idx] = lv;
            self(self, idx + 1, sum + lv);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<indexed_prime> ass_primes_weighted(const simplicial_complex& cx,
                                               const std::vector<long>& weights, long k) {
    if (k < 1) throw nonpositive_k("k must be >= 1");
    if (weights.size() != cx.facets().size()) throw ambient_mismatch("one weight per facet");
    std::set<indexed_prime> acc;
    for (size_t i = 0; i < cx.facets().size(); ++i) {
        auto primes = ass_primes_prime_power(vertices_of(cx.facets()[i]), k * weights[i]);
        acc.insert(primes.begin(), primes.end());
    }
    return std::vector<indexed_prime>(acc.begin(), acc.end());
}

std::vector<std::vector<int>> min_primes_bruteforce(const monomial_ideal& a) {
    if (!is_square_free(a)) throw not_square_free("min_primes_bruteforce needs square-free input");
    int n = a.ambient_n();
    if (n > 24) throw resource_guard("brute-force prime enumeration capped at 24 variables");
    std::vector<vertex_set> sups;
    for (const auto& g : a.generators()) {
        vertex_set s = 0;
        for (int i = 0; i < n; ++i)
            if (g[i]) s |= vertex_set{1} << i;
        sups.push_back(s);
    }
    std::vector<vertex_set> found;
    // by increasing size, keep only transversals containing no smaller one
    std::vector<vertex_set> subsets;
    for (vertex_set s = 1; s < (vertex_set{1} << n); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(),
              [](vertex_set x, vertex_set y) { return set_size(x) != set_size(y) ? set_size(x) < set_size(y) : x < y; });
    for (vertex_set s : subsets) {
        bool hits = std::all_of(sups.begin(), sups.end(), [&](vertex_set g) { return (g & s) != 0; });
        if (!hits) continue;
        bool contains_smaller = std::any_of(found.begin(), found.end(),
                                            [&](vertex_set t) { return (t & s) == t; });
        if (!contains_smaller) found.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (vertex_set s : found) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (s & (vertex_set{1} << i)) v.push_back(i);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

obstruction_result cm_obstruction_check(const simplicial_complex& cx,
                                        const std::vector<long>& weights, long k) {
    if (!cx.is_pure()) throw hypothesis_violation("obstruction check needs a pure complex");
    int d = cx.dimension() + 1;
    for (long w : weights)
        if (k * w < d + 1) throw hypothesis_violation("needs k*w_F >= dim(Delta)+2 for all facets");
    obstruction_result res;
    auto mc = is_matroid(cx);
    if (mc.holds) return res;  // vacuous: no witness
    res.witness = mc.witness;
    const facet_witness& w = *mc.witness;

    // p_{F,a}: level d+1 at the witness vertex, level 1 elsewhere
    indexed_prime pf;
    pf.vars.emplace_back(w.element_i, d + 1);
    for (int v : vertices_of(w.facet_f & ~(vertex_set{1} << (w.element_i - 1))))
        pf.vars.emplace_back(v, 1);
    std::sort(pf.vars.begin(), pf.vars.end());
    // p_{G,b}: level 2 everywhere
    indexed_prime pg;
    for (int v : vertices_of(w.facet_g)) pg.vars.emplace_back(v, 2);
    std::sort(pg.vars.begin(), pg.vars.end());

    std::set<std::pair<int, int>> allowed(pf.vars.begin(), pf.vars.end());
    allowed.insert(pg.vars.begin(), pg.vars.end());

    auto inside = [&](const indexed_prime& p) {
        return std::all_of(p.vars.begin(), p.vars.end(),
                           [&](auto v) { return allowed.count(v) > 0; });
    };
    std::vector<indexed_prime> nodes;
    for (const auto& p : ass_primes_weighted(cx, weights, k))
        if (inside(p)) nodes.push_back(p);
    res.chain_candidates = nodes;

    auto sum_height = [](const indexed_prime& a, const indexed_prime& b) {
        std::set<std::pair<int, int>> u(a.vars.begin(), a.vars.end());
        u.insert(b.vars.begin(), b.vars.end());
        return static_cast<int>(u.size());
    };
    // connectivity between pf and pg through nodes, edges of sum-height <= d+1
    auto idx_of = [&](const indexed_prime& p) -> int {
        auto it = std::find(nodes.begin(), nodes.end(), p);
        return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
    };
    int s = idx_of(pf), t = idx_of(pg);
    if (s < 0 || t < 0) {
        res.obstructed = true;  // an endpoint is not even associated: no chain
        return res;
    }
    std::vector<char> seen(nodes.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (size_t v = 0; v < nodes.size(); ++v)
            if (!seen[v] && sum_height(nodes[u], nodes[v]) <= d + 1) {
                seen[v] = 1;
                q.push(static_cast<int>(v));
            }
    }
    res.obstructed = !seen[t];
    return res;
}

}  // namespace symcomb
