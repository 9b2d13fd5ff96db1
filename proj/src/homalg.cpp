#include "symcomb/homalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace symcomb {

coeff_field coeff_field::prime(long p) {
    if (p < 2) throw out_of_range("field characteristic must be 0 or a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw out_of_range("field characteristic must be prime");
    return {p};
}

// ---- exact rank ----

static size_t rank_mpq(std::vector<std::vector<mpq_class>>& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

static size_t rank_modp(std::vector<std::vector<long>>& m, long p) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    auto inv = [&](long a) {
        long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
        while (nr) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return ((t % p) + p) % p;
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        long iv = inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] % p) * iv) % p;
        for (size_t i = r + 1; i < rows; ++i) {
            long f = ((m[i][c] % p) + p) % p;
            if (!f) continue;
            for (size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

static size_t boundary_rank(const std::vector<vertex_set>& upper,
                            const std::vector<vertex_set>& lower, const coeff_field& field) {
    if (upper.empty() || lower.empty()) return 0;
    std::map<vertex_set, size_t> lidx;
    for (size_t i = 0; i < lower.size(); ++i) lidx[lower[i]] = i;
    if (field.characteristic == 0) {
        std::vector<std::vector<mpq_class>> m(upper.size(), std::vector<mpq_class>(lower.size(), 0));
        for (size_t i = 0; i < upper.size(); ++i) {
            int sign = 1;
            for (int v : vertices_of(upper[i])) {
                m[i][lidx.at(upper[i] & ~(vertex_set{1} << (v - 1)))] = sign;
                sign = -sign;
            }
        }
        return rank_mpq(m);
    }
    std::vector<std::vector<long>> m(upper.size(), std::vector<long>(lower.size(), 0));
    for (size_t i = 0; i < upper.size(); ++i) {
        int sign = 1;
        for (int v : vertices_of(upper[i])) {
            m[i][lidx.at(upper[i] & ~(vertex_set{1} << (v - 1)))] = (sign + field.characteristic) % field.characteristic;
            sign = -sign;
        }
    }
    return rank_modp(m, field.characteristic);
}

// Homology of a downward-closed face set (the empty face implicit).
// faces_by_dim[d] lists the d-dimensional faces; dims returned from -1 up.
static std::vector<long> chain_homology(std::vector<std::vector<vertex_set>> faces_by_dim,
                                        const coeff_field& field) {
    int maxd = static_cast<int>(faces_by_dim.size()) - 1;
    // C_{-1} is the span of the empty face whenever any face exists
    bool any = false;
    for (auto& f : faces_by_dim) any |= !f.empty();
    std::vector<long> h(maxd + 2, 0);
    if (!any) {
        h.assign(1, 1);  // the complex {empty}: H~_{-1} = 1
        return h;
    }
    std::vector<size_t> rank(maxd + 2, 0);  // rank of d_i: C_i -> C_{i-1}
    // d_0: C_0 -> C_{-1} has rank 1 iff a vertex exists
    rank[0] = faces_by_dim.empty() || faces_by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= maxd; ++d)
        rank[d] = boundary_rank(faces_by_dim[d], faces_by_dim[d - 1], field);
    for (int d = -1; d <= maxd; ++d) {
        long cd = d == -1 ? 1 : static_cast<long>(faces_by_dim[d].size());
        long rd = d == -1 ? 0 : static_cast<long>(rank[d]);
        long rup = (d + 1 <= maxd) ? static_cast<long>(rank[d + 1]) : 0;
        h[d + 1] = cd - rd - rup;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

std::vector<long> reduced_homology(const simplicial_complex& cx, const coeff_field& field) {
    std::set<vertex_set> faces;
    for (vertex_set f : cx.facets()) {
        // all nonempty subsets of f
        for (vertex_set s = f; s; s = (s - 1) & f) faces.insert(s);
    }
    std::vector<std::vector<vertex_set>> by_dim(cx.dimension() + 1);
    for (vertex_set s : faces) by_dim[set_size(s) - 1].push_back(s);
    std::vector<long> h = chain_homology(std::move(by_dim), field);
    h.resize(cx.dimension() + 2, 0);
    return h;
}

// ---- unions of simplices ----

static std::vector<vertex_set> absorb_pieces(std::vector<vertex_set> pieces) {
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    std::vector<vertex_set> out;
    for (vertex_set a : pieces) {
        bool inside = false;
        for (vertex_set b : pieces)
            if (a != b && (a & b) == a) { inside = true; break; }
        if (!inside && a) out.push_back(a);
    }
    return out;
}

static std::vector<long> union_homology_impl(std::vector<vertex_set> pieces,
                                             const coeff_field& field, int depth) {
    pieces = absorb_pieces(std::move(pieces));
    if (pieces.empty()) return {1};       // the complex {empty}
    if (pieces.size() == 1) return {0};   // one simplex: contractible
    // direct route when the face count is small
    double face_estimate = 0;
    for (vertex_set p : pieces) face_estimate += std::pow(2.0, set_size(p));
    if (face_estimate <= 4096.0 || depth >= 8) {
        if (depth >= 8 && face_estimate > (1 << 22))
            throw resource_guard("union homology: faces out of reach");
        std::set<vertex_set> faces;
        for (vertex_set p : pieces)
            for (vertex_set s = p; s; s = (s - 1) & p) faces.insert(s);
        int maxd = 0;
        for (vertex_set p : pieces) maxd = std::max(maxd, set_size(p) - 1);
        std::vector<std::vector<vertex_set>> by_dim(maxd + 1);
        for (vertex_set s : faces) by_dim[set_size(s) - 1].push_back(s);
        return chain_homology(std::move(by_dim), field);
    }
    // nerve of the cover: vertex g per piece; faces = subfamilies with a
    // common element.  The nerve equals the union of the simplices on the
    // element patterns D_x = { g : x in A_g }, so recurse on those.
    vertex_set all = 0;
    for (vertex_set p : pieces) all |= p;
    if (pieces.size() > 64) throw resource_guard("union homology: too many pieces");
    std::vector<vertex_set> patterns;
    for (int x : vertices_of(all)) {
        vertex_set d = 0;
        for (size_t g = 0; g < pieces.size(); ++g)
            if (pieces[g] & (vertex_set{1} << (x - 1))) d |= vertex_set{1} << g;
        patterns.push_back(d);
    }
    return union_homology_impl(std::move(patterns), field, depth + 1);
}

std::vector<long> union_of_simplices_homology(const std::vector<vertex_set>& pieces,
                                              const coeff_field& field) {
    return union_homology_impl(pieces, field, 0);
}

// ---- Hochster ----

int betti_table::pd() const {
    int p = 0;
    for (const auto& [ij, v] : entries)
        if (v) p = std::max(p, ij.first);
    return p;
}

int betti_table::reg() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v) r = std::max(r, ij.second - ij.first);
    return r;
}

std::string betti_table::to_grid() const {
    // rows are j - i, columns i, as in the usual triangular display
    int maxi = 0, maxrow = 0;
    for (const auto& [ij, v] : entries) {
        maxi = std::max(maxi, ij.first);
        maxrow = std::max(maxrow, ij.second - ij.first);
    }
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= maxi; ++i) os << i << "\t";
    os << "\n";
    for (int row = 0; row <= maxrow; ++row) {
        os << row << ":    ";
        for (int i = 0; i <= maxi; ++i) {
            auto it = entries.find({i, i + row});
            os << (it == entries.end() || it->second == 0 ? std::string(".")
                                                          : std::to_string(it->second))
               << "\t";
        }
        os << "\n";
    }
    return os.str();
}

betti_table hochster_betti(const monomial_ideal& a, const coeff_field& field) {
    if (!is_square_free(a)) throw not_square_free("hochster_betti needs a square-free ideal");
    if (a.is_zero()) return betti_table{{}, a.ambient_n(), field.characteristic};
    int n = a.ambient_n();
    std::vector<vertex_set> sups;
    for (const auto& g : a.generators()) {
        vertex_set s = 0;
        for (int i = 0; i < n; ++i)
            if (g[i]) s |= vertex_set{1} << i;
        sups.push_back(s);
    }
    if (sups.size() > 24) throw resource_guard("hochster: too many generators for the union lattice");
    // all unions of nonempty subfamilies
    std::set<vertex_set> unions;
    {
        std::set<vertex_set> acc{0};
        for (vertex_set s : sups) {
            std::set<vertex_set> nxt = acc;
            for (vertex_set u : acc) nxt.insert(u | s);
            acc = std::move(nxt);
        }
        acc.erase(0);
        unions = std::move(acc);
    }
    betti_table table;
    table.ambient_n = n;
    table.field_char = field.characteristic;
    for (vertex_set w : unions) {
        std::vector<vertex_set> pieces;
        for (vertex_set s : sups)
            if ((s & w) == s) pieces.push_back(w & ~s);
        // Alexander dual of Delta(I)|_W is the union of the simplices on
        // W \ s; H~_d(dual) lands in beta_{d+2, |W|}.
        std::vector<long> h = union_of_simplices_homology(pieces, field);
        int j = set_size(w);
        for (size_t d1 = 0; d1 < h.size(); ++d1) {
            if (!h[d1]) continue;
            int i = static_cast<int>(d1) - 1 + 2;
            table.entries[{i, j}] += h[d1];
        }
    }
    return table;
}

quotient_invariants invariants_of_monomial(const monomial_ideal& a, const coeff_field& field,
                                           int var_cap) {
    if (a.is_zero()) throw empty_input("invariants of the zero ideal are not defined here");
    polarized_ideal pol = polarize(a);
    if (pol.ambient() > var_cap)
        throw resource_guard("polarization needs " + std::to_string(pol.ambient()) +
                             " variables, cap is " + std::to_string(var_cap));
    betti_table bt = hochster_betti(pol.ideal, field);
    quotient_invariants inv;
    inv.polarized_vars = pol.ambient();
    inv.pd = bt.pd();
    inv.depth = a.ambient_n() - inv.pd;
    inv.reg = bt.reg();
    inv.height = height_and_dim(a).height;
    inv.is_cm = inv.pd == inv.height;
    return inv;
}

long multiplicity(const simplicial_complex& cx) {
    if (!cx.is_pure()) throw hypothesis_violation("multiplicity by facet count needs a pure complex");
    return static_cast<long>(cx.facets().size());
}

eisenbud_goto_result eisenbud_goto_check(const monomial_ideal& a, const coeff_field& field) {
    if (!is_square_free(a)) throw not_square_free("eisenbud_goto_check needs square-free input");
    eisenbud_goto_result res;
    for (const auto& g : a.generators())
        if (total_degree(g) <= 1) return res;  // linear generator: not applicable
    simplicial_complex cx = complex_of(a);
    int dim = cx.dimension() + 1;
    // minimal primes are the facet complements
    std::vector<vertex_set> primes;
    vertex_set full = (a.ambient_n() == 64) ? ~vertex_set{0} : ((vertex_set{1} << a.ambient_n()) - 1);
    for (vertex_set f : cx.facets()) primes.push_back(full & ~f);
    int conn = connectivity_degree_masks(primes, a.ambient_n());
    if (conn < dim - 1) return res;
    res.applicable = true;
    // e = number of top-dimensional facets
    int top = cx.dimension();
    for (vertex_set f : cx.facets())
        if (set_size(f) - 1 == top) ++res.e;
    res.height = a.ambient_n() - (top + 1);
    res.reg = hochster_betti(a, field).reg();
    res.holds = res.reg <= res.e - res.height;
    return res;
}

}  // namespace symcomb
