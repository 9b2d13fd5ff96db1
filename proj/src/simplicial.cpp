#include "symcomb/simplicial.hpp"

#include <algorithm>
#include <queue>

namespace symcomb {

vertex_set set_of(const std::vector<int>& vertices, int n) {
    vertex_set s = 0;
    for (int v : vertices) {
        if (v < 1 || v > n) throw vertex_out_of_range("vertex " + std::to_string(v) + " not in [1," + std::to_string(n) + "]");
        s |= vertex_set{1} << (v - 1);
    }
    return s;
}

std::vector<int> vertices_of(vertex_set s) {
    std::vector<int> out;
    while (s) {
        int b = __builtin_ctzll(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

bool vertex_lex_less(vertex_set a, vertex_set b) {
    // Walk common low bits; the first differing vertex decides.
    while (a && b) {
        int va = __builtin_ctzll(a), vb = __builtin_ctzll(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

static std::vector<vertex_set> maximalize(std::vector<vertex_set> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<vertex_set> out;
    for (vertex_set s : sets) {
        bool maximal = true;
        for (vertex_set t : sets)
            if (t != s && (s & t) == s) { maximal = false; break; }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), vertex_lex_less);
    return out;
}

simplicial_complex simplicial_complex::from_masks(int n, std::vector<vertex_set> sets) {
    if (n < 1 || n > 64) throw vertex_out_of_range("vertex count must be in [1,64]");
    std::vector<vertex_set> nonempty;
    for (vertex_set s : sets) {
        if (s >> n) throw vertex_out_of_range("facet exceeds vertex range");
        if (s) nonempty.push_back(s);
    }
    if (nonempty.empty()) throw empty_input("need at least one nonempty facet");
    return simplicial_complex(n, maximalize(std::move(nonempty)));
}

simplicial_complex simplicial_complex::from_facets(int n, const std::vector<std::vector<int>>& sets) {
    if (n < 1 || n > 64) throw vertex_out_of_range("vertex count must be in [1,64]");
    std::vector<vertex_set> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(set_of(s, n));
    return from_masks(n, std::move(masks));
}

std::vector<std::vector<int>> simplicial_complex::facet_vertices() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (vertex_set f : facets_) out.push_back(vertices_of(f));
    return out;
}

int simplicial_complex::dimension() const {
    int d = -1;
    for (vertex_set f : facets_) d = std::max(d, set_size(f) - 1);
    return d;
}

bool simplicial_complex::is_pure() const {
    for (vertex_set f : facets_)
        if (set_size(f) != set_size(facets_.front())) return false;
    return true;
}

static bool contains_facet(const std::vector<vertex_set>& facets, vertex_set s) {
    return std::find(facets.begin(), facets.end(), s) != facets.end();
}

matroid_check is_matroid(const simplicial_complex& cx) {
    const auto& facets = cx.facets();
    for (vertex_set f : facets) {
        for (int i : vertices_of(f)) {
            vertex_set base = f & ~(vertex_set{1} << (i - 1));
            for (vertex_set g : facets) {
                bool ok = false;
                for (int j : vertices_of(g)) {
                    if (contains_facet(facets, base | (vertex_set{1} << (j - 1)))) { ok = true; break; }
                }
                if (!ok) return {false, facet_witness{f, g, i}};
            }
        }
    }
    return {true, std::nullopt};
}

matroid_check symmetric_exchange_holds(const simplicial_complex& cx) {
    const auto& facets = cx.facets();
    for (vertex_set f : facets) {
        for (int i : vertices_of(f)) {
            vertex_set bi = vertex_set{1} << (i - 1);
            for (vertex_set g : facets) {
                bool ok = false;
                for (int j : vertices_of(g)) {
                    vertex_set bj = vertex_set{1} << (j - 1);
                    if (contains_facet(facets, (f & ~bi) | bj) &&
                        contains_facet(facets, (g & ~bj) | bi)) { ok = true; break; }
                }
                if (!ok) return {false, facet_witness{f, g, i}};
            }
        }
    }
    return {true, std::nullopt};
}

simplicial_complex dual(const simplicial_complex& cx) {
    vertex_set full = (cx.n() == 64) ? ~vertex_set{0} : ((vertex_set{1} << cx.n()) - 1);
    std::vector<vertex_set> comps;
    for (vertex_set f : cx.facets()) {
        vertex_set c = full & ~f;
        if (!c) throw dual_has_empty_facet("a facet covers all of [n]");
        comps.push_back(c);
    }
    return simplicial_complex::from_masks(cx.n(), std::move(comps));
}

bool is_strongly_connected(const simplicial_complex& cx) {
    const auto& facets = cx.facets();
    size_t m = facets.size();
    if (m <= 1) return true;
    // Edge when the facets differ by a single swap in each direction.
    std::vector<int> comp(m, -1);
    std::queue<size_t> q;
    q.push(0);
    comp[0] = 0;
    while (!q.empty()) {
        size_t u = q.front();
        q.pop();
        for (size_t v = 0; v < m; ++v) {
            if (comp[v] >= 0) continue;
            vertex_set a = facets[u], b = facets[v];
            if (set_size(a & ~b) == 1 && set_size(b & ~a) == 1) {
                comp[v] = 0;
                q.push(v);
            }
        }
    }
    for (int c : comp)
        if (c < 0) return false;
    return true;
}

int connectivity_degree_masks(const std::vector<vertex_set>& primes, int n) {
    if (primes.empty()) throw empty_input("no primes given");
    for (size_t a = 0; a < primes.size(); ++a)
        for (size_t b = a + 1; b < primes.size(); ++b) {
            vertex_set s = primes[a], t = primes[b];
            if ((s & t) == s || (s & t) == t)
                throw comparable_primes("primes must be pairwise incomparable");
        }
    vertex_set full = (n == 64) ? ~vertex_set{0} : ((vertex_set{1} << n) - 1);
    size_t m = primes.size();
    int space_dim = 0;
    for (vertex_set p : primes) space_dim = std::max(space_dim, n - set_size(p));
    if (m == 1) return n - set_size(primes[0]);

    // dim of V(p_a) n V(p_b); the irrelevant point alone counts as empty.
    auto pair_dim = [&](size_t a, size_t b) -> int {
        vertex_set u = primes[a] | primes[b];
        if (u == full) return -1;
        return n - set_size(u);
    };
    auto connected_at = [&](int r) {
        std::vector<char> seen(m, 0);
        std::queue<size_t> q;
        q.push(0);
        seen[0] = 1;
        size_t cnt = 1;
        while (!q.empty()) {
            size_t u = q.front();
            q.pop();
            for (size_t v = 0; v < m; ++v)
                if (!seen[v] && pair_dim(u, v) >= r) {
                    seen[v] = 1;
                    ++cnt;
                    q.push(v);
                }
        }
        return cnt == m;
    };
    int best = -1;
    for (int r = 0; r <= space_dim; ++r) {
        if (!connected_at(r)) break;
        best = r;
    }
    return best;
}

int connectivity_degree(const std::vector<std::vector<int>>& primes, int n) {
    std::vector<vertex_set> masks;
    masks.reserve(primes.size());
    for (const auto& p : primes) masks.push_back(set_of(p, n));
    return connectivity_degree_masks(masks, n);
}

}  // namespace symcomb
