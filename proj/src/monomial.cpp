#include "symcomb/monomial.hpp"

#include <algorithm>
#include <limits>

namespace symcomb {

long total_degree(const monomial& m) {
    long d = 0;
    for (int e : m) d += e;
    return d;
}

bool divides(const monomial& a, const monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

monomial mono_lcm(const monomial& a, const monomial& b) {
    monomial out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

monomial mono_mul(const monomial& a, const monomial& b) {
    monomial out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        long s = long{a[i]} + b[i];
        if (s > std::numeric_limits<int>::max())
            throw exponent_overflow("exponent overflow in product");
        out[i] = static_cast<int>(s);
    }
    return out;
}

bool mono_less(const monomial& a, const monomial& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

static std::vector<monomial> minimalize(std::vector<monomial> gens) {
    std::sort(gens.begin(), gens.end(), mono_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (divides(h, g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

monomial_ideal::monomial_ideal(int ambient_n, std::vector<monomial> gens) : n_(ambient_n) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != n_) throw ambient_mismatch("generator arity != ambient");
        for (int e : g)
            if (e < 0) throw parse_error("negative exponent");
    }
    gens_ = minimalize(std::move(gens));
    for (const auto& g : gens_)
        if (total_degree(g) == 0) throw unit_ideal("the unit ideal is not representable");
}

bool monomial_ideal::contains(const monomial& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

monomial_ideal intersect(const monomial_ideal& a, const monomial_ideal& b) {
    if (a.ambient_n() != b.ambient_n()) throw ambient_mismatch("intersect: ambients differ");
    std::vector<monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) gens.push_back(mono_lcm(x, y));
    return monomial_ideal(a.ambient_n(), std::move(gens));
}

monomial_ideal power(const monomial_ideal& a, long k) {
    if (k < 1) throw nonpositive_k("power: k must be >= 1");
    monomial_ideal out = a;
    for (long i = 1; i < k; ++i) {
        std::vector<monomial> gens;
        gens.reserve(out.generators().size() * a.generators().size());
        for (const auto& x : out.generators())
            for (const auto& y : a.generators()) gens.push_back(mono_mul(x, y));
        out = monomial_ideal(a.ambient_n(), std::move(gens));
    }
    return out;
}

monomial_ideal radical(const monomial_ideal& a) {
    std::vector<monomial> gens;
    for (const auto& g : a.generators()) {
        monomial s(g.size());
        for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return monomial_ideal(a.ambient_n(), std::move(gens));
}

bool membership(const monomial& m, const monomial_ideal& a) {
    if (static_cast<int>(m.size()) != a.ambient_n()) throw ambient_mismatch("membership: arity");
    return a.contains(m);
}

monomial_ideal prime_power_mask(vertex_set f, long k, int ambient_n) {
    if (k < 1) throw nonpositive_k("prime_power: k must be >= 1");
    std::vector<int> vars = vertices_of(f);
    std::vector<monomial> gens;
    monomial cur(ambient_n, 0);
    // all weak compositions of k over the F-variables
    auto rec = [&](auto&& self, size_t idx, long rem) -> void {
        if (idx + 1 == vars.size()) {
            cur[vars[idx] - 1] = static_cast<int>(rem);
            gens.push_back(cur);
            cur[vars[idx] - 1] = 0;
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            cur[vars[idx] - 1] = static_cast<int>(e);
            self(self, idx + 1, rem - e);
        }
        cur[vars[idx] - 1] = 0;
    };
    if (vars.empty()) throw empty_input("prime_power: empty variable set");
    rec(rec, 0, k);
    return monomial_ideal(ambient_n, std::move(gens));
}

monomial_ideal prime_power(const std::vector<int>& f, long k, int ambient_n) {
    return prime_power_mask(set_of(f, ambient_n), k, ambient_n);
}

monomial_ideal stanley_reisner(const simplicial_complex& cx) {
    int n = cx.n();
    auto is_face = [&](vertex_set s) {
        for (vertex_set f : cx.facets())
            if ((s & f) == s) return true;
        return false;
    };
    // minimal non-faces have at most dim+2 vertices
    int maxsz = cx.dimension() + 2;
    std::vector<monomial> gens;
    std::vector<vertex_set> nonfaces;
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start, vertex_set cur, int sz) -> void {
        if (sz > 0 && !is_face(cur)) {
            // minimal iff no previously found non-face is inside
            for (vertex_set nf : nonfaces)
                if ((nf & cur) == nf) return;
            nonfaces.push_back(cur);
            monomial g(n, 0);
            for (int v : vertices_of(cur)) g[v - 1] = 1;
            gens.push_back(std::move(g));
            return;
        }
        if (sz == maxsz) return;
        for (int v = start; v <= n; ++v)
            self(self, v + 1, cur | (vertex_set{1} << (v - 1)), sz + 1);
    };
    rec(rec, 1, 0, 0);
    return monomial_ideal(n, std::move(gens));
}

monomial_ideal cover_ideal(const simplicial_complex& cx) {
    monomial_ideal out = prime_power_mask(cx.facets().front(), 1, cx.n());
    for (size_t i = 1; i < cx.facets().size(); ++i)
        out = intersect(out, prime_power_mask(cx.facets()[i], 1, cx.n()));
    return out;
}

monomial_ideal symbolic_power(const simplicial_complex& cx, const std::vector<long>& weights, long k) {
    if (k < 1) throw nonpositive_k("symbolic_power: k must be >= 1");
    if (weights.size() != cx.facets().size()) throw ambient_mismatch("weights must match facets");
    for (long w : weights)
        if (w < 1) throw nonpositive_k("weights must be >= 1");
    monomial_ideal out;
    for (size_t i = 0; i < cx.facets().size(); ++i) {
        monomial_ideal p = prime_power_mask(cx.facets()[i], k * weights[i], cx.n());
        out = (i == 0) ? p : intersect(out, p);
    }
    return out;
}

bool is_square_free(const monomial_ideal& a) {
    for (const auto& g : a.generators())
        for (int e : g)
            if (e > 1) return false;
    return true;
}

simplicial_complex complex_of(const monomial_ideal& a) {
    if (!is_square_free(a)) throw not_square_free("complex_of needs a square-free ideal");
    if (a.is_zero()) {
        // the full simplex
        std::vector<int> all(a.ambient_n());
        for (int i = 0; i < a.ambient_n(); ++i) all[i] = i + 1;
        return simplicial_complex::from_facets(a.ambient_n(), {all});
    }
    int n = a.ambient_n();
    std::vector<vertex_set> sups;
    for (const auto& g : a.generators()) {
        vertex_set s = 0;
        for (int i = 0; i < n; ++i)
            if (g[i]) s |= vertex_set{1} << i;
        sups.push_back(s);
    }
    // faces avoid every generator support; facets found by shrinking [n]
    std::vector<vertex_set> facets;
    vertex_set full = (n == 64) ? ~vertex_set{0} : ((vertex_set{1} << n) - 1);
    auto face_ok = [&](vertex_set s) {
        for (vertex_set g : sups)
            if ((g & s) == g) return false;
        return true;
    };
    // branch and bound over the supports: a facet misses >=1 vertex of each support
    std::vector<vertex_set> partial{full};
    for (vertex_set g : sups) {
        std::vector<vertex_set> next;
        for (vertex_set p : partial) {
            if ((g & p) != g) { next.push_back(p); continue; }
            for (int v : vertices_of(g)) next.push_back(p & ~(vertex_set{1} << (v - 1)));
        }
        // prune non-maximal candidates
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<vertex_set> keep;
        for (vertex_set s : next) {
            bool dominated = false;
            for (vertex_set t : next)
                if (t != s && (s & t) == s) { dominated = true; break; }
            if (!dominated) keep.push_back(s);
        }
        partial = std::move(keep);
    }
    for (vertex_set s : partial)
        if (s && face_ok(s)) facets.push_back(s);
    if (facets.empty()) throw empty_input("ideal contains all variables; complex would be void");
    return simplicial_complex::from_masks(n, std::move(facets));
}

height_dim height_and_dim(const monomial_ideal& a) {
    if (a.is_zero()) return {0, a.ambient_n()};
    simplicial_complex cx = complex_of(radical(a));
    int maxf = 0;
    for (vertex_set f : cx.facets()) maxf = std::max(maxf, set_size(f));
    int h = a.ambient_n() - maxf;
    return {h, a.ambient_n() - h};
}

symbolic_comparison symbolic_vs_ordinary(const simplicial_complex& cx,
                                         const std::vector<long>& weights, long k) {
    monomial_ideal symb = symbolic_power(cx, weights, k);
    monomial_ideal base;
    for (size_t i = 0; i < cx.facets().size(); ++i) {
        monomial_ideal p = prime_power_mask(cx.facets()[i], weights[i], cx.n());
        base = (i == 0) ? p : intersect(base, p);
    }
    monomial_ideal ord = power(base, k);
    // I^k subseteq I^(k) always; a strict witness is a generator of I^(k) not in I^k.
    std::optional<monomial> witness;
    for (const auto& g : symb.generators()) {
        if (!ord.contains(g)) {
            if (!witness || mono_less(g, *witness)) witness = g;
        }
    }
    if (!witness) return {true, std::nullopt};
    return {false, witness};
}

}  // namespace symcomb
