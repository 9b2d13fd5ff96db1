#include "symcomb/covers.hpp"

#include <algorithm>
#include <set>

namespace symcomb {

weighted_complex::weighted_complex(simplicial_complex cx, std::vector<long> w)
    : complex(std::move(cx)), weights(std::move(w)) {
    if (weights.size() != complex.facets().size())
        throw ambient_mismatch("one weight per facet required");
    for (long x : weights)
        if (x < 1) throw nonpositive_k("weights must be positive");
}

weighted_complex weighted_complex::canonical(simplicial_complex cx) {
    std::vector<long> w(cx.facets().size(), 1);
    return weighted_complex(std::move(cx), std::move(w));
}

long weighted_complex::max_weight() const {
    return *std::max_element(weights.begin(), weights.end());
}

static long facet_sum(const std::vector<long>& alpha, vertex_set f) {
    long s = 0;
    for (int v : vertices_of(f)) s += alpha[v - 1];
    return s;
}

static bool is_cover(const weighted_complex& wc, const std::vector<long>& alpha, long k) {
    const auto& facets = wc.complex.facets();
    for (size_t i = 0; i < facets.size(); ++i)
        if (facet_sum(alpha, facets[i]) < k * wc.weights[i]) return false;
    return true;
}

cover_class classify_cover(const weighted_complex& wc, const std::vector<long>& alpha, long k) {
    if (k < 1) throw nonpositive_k("k must be >= 1");
    if (static_cast<int>(alpha.size()) != wc.complex.n())
        throw ambient_mismatch("alpha must have one entry per vertex");
    for (long a : alpha)
        if (a < 0) throw parse_error("cover values must be nonnegative");
    bool nonzero = std::any_of(alpha.begin(), alpha.end(), [](long a) { return a > 0; });
    if (!nonzero || !is_cover(wc, alpha, k)) return cover_class::not_a_cover;
    std::vector<long> beta = alpha;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        beta[i] -= 1;
        bool still = is_cover(wc, beta, k);
        beta[i] += 1;
        if (still) return cover_class::cover;
    }
    return cover_class::basic_cover;
}

k_cover reduce_to_basic(const weighted_complex& wc, std::vector<long> alpha, long k) {
    if (classify_cover(wc, alpha, k) == cover_class::not_a_cover)
        throw not_a_cover("reduce_to_basic: input is not a k-cover");
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < alpha.size() && !changed; ++i) {
            if (alpha[i] == 0) continue;
            alpha[i] -= 1;
            if (is_cover(wc, alpha, k))
                changed = true;
            else
                alpha[i] += 1;
        }
    }
    return k_cover{std::move(alpha), k};
}

std::vector<k_cover> enumerate_basic_covers(const weighted_complex& wc, long k) {
    if (k < 1) throw nonpositive_k("k must be >= 1");
    int n = wc.complex.n();
    long bound = k * wc.max_weight();
    const auto& facets = wc.complex.facets();

    // facets grouped by their largest vertex, for completion checks
    std::vector<std::vector<size_t>> closing(n + 1);
    for (size_t i = 0; i < facets.size(); ++i) {
        auto vs = vertices_of(facets[i]);
        closing[vs.back()].push_back(i);
    }

    std::vector<k_cover> out;
    std::vector<long> alpha(n, 0);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            if (classify_cover(wc, alpha, k) == cover_class::basic_cover)
                out.push_back(k_cover{alpha, k});
            return;
        }
        for (long v = 0; v <= bound; ++v) {
            alpha[idx] = v;
            bool ok = true;
            for (size_t fi : closing[idx + 1])
                if (facet_sum(alpha, facets[fi]) < k * wc.weights[fi]) { ok = false; break; }
            if (ok) {
                // optimistic bound on facets not yet closed
                for (size_t fi = 0; fi < facets.size() && ok; ++fi) {
                    long have = 0, slots = 0;
                    for (int u : vertices_of(facets[fi])) {
                        if (u - 1 <= idx)
                            have += alpha[u - 1];
                        else
                            ++slots;
                    }
                    if (have + slots * bound < k * wc.weights[fi]) ok = false;
                }
            }
            if (ok) self(self, idx + 1);
        }
        alpha[idx] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long hf_abar(const weighted_complex& wc, long k) {
    return static_cast<long>(enumerate_basic_covers(wc, k).size());
}

good_weight_result solve_good_weight(const weighted_complex& wc) {
    int n = wc.complex.n();
    const auto& facets = wc.complex.facets();
    size_t m = facets.size();

    // Gaussian elimination on [A | w], A the facet incidence matrix.
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (int v : vertices_of(facets[i])) a[i][v - 1] = 1;
        a[i][n] = wc.weights[i];
    }
    std::vector<int> pivot_col(m, -1);
    size_t rank = 0;
    for (int c = 0; c < n && rank < m; ++c) {
        size_t p = rank;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[rank], a[p]);
        mpq_class pv = a[rank][c];
        for (int j = c; j <= n; ++j) a[rank][j] /= pv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int j = c; j <= n; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    good_weight_result res;
    for (size_t r = rank; r < m; ++r) {
        if (a[r][n] != 0) {
            for (size_t i = 0; i < m; ++i) res.certificate_facets.push_back(static_cast<int>(i));
            return res;  // inconsistent system
        }
    }
    // Parametric solution lambda = base + sum_j t_j dir_j over the free columns.
    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(n, 0);
        for (size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    std::vector<mpq_class> base(n, 0);
    for (size_t r = 0; r < rank; ++r) base[pivot_col[r]] = a[r][n];
    std::vector<std::vector<mpq_class>> dirs;
    for (int fc : free_cols) {
        std::vector<mpq_class> d(n, 0);
        d[fc] = 1;
        for (size_t r = 0; r < rank; ++r) d[pivot_col[r]] = -a[r][fc];
        dirs.push_back(std::move(d));
    }

    size_t t = dirs.size();
    // Positivity lambda_i > 0: rows (coeffs over t params, constant).
    struct ineq {
        std::vector<mpq_class> c;
        mpq_class rhs;  // sum c_j t_j + rhs > 0
        int vertex;
    };
    std::vector<ineq> sys;
    for (int i = 0; i < n; ++i) {
        ineq q;
        q.c.resize(t);
        for (size_t j = 0; j < t; ++j) q.c[j] = dirs[j][i];
        q.rhs = base[i];
        q.vertex = i + 1;
        sys.push_back(std::move(q));
    }
    // Exact Fourier-Motzkin over the free parameters; strict throughout.
    std::vector<std::vector<int>> origin;  // contributing vertices per row
    for (int i = 0; i < n; ++i) origin.push_back({i + 1});
    for (size_t j = 0; j < t; ++j) {
        std::vector<ineq> next;
        std::vector<std::vector<int>> next_origin;
        std::vector<size_t> pos, neg;
        for (size_t r = 0; r < sys.size(); ++r) {
            if (sys[r].c[j] > 0)
                pos.push_back(r);
            else if (sys[r].c[j] < 0)
                neg.push_back(r);
            else {
                next.push_back(sys[r]);
                next_origin.push_back(origin[r]);
            }
        }
        for (size_t rp : pos)
            for (size_t rn : neg) {
                // eliminate t_j between cp*t_j + ... > 0 and cn*t_j + ... > 0
                ineq q;
                q.c.resize(t);
                mpq_class cp = sys[rp].c[j], cn = -sys[rn].c[j];
                for (size_t x = 0; x < t; ++x) q.c[x] = sys[rp].c[x] * cn + sys[rn].c[x] * cp;
                q.rhs = sys[rp].rhs * cn + sys[rn].rhs * cp;
                q.vertex = 0;
                next.push_back(std::move(q));
                std::vector<int> o = origin[rp];
                o.insert(o.end(), origin[rn].begin(), origin[rn].end());
                std::sort(o.begin(), o.end());
                o.erase(std::unique(o.begin(), o.end()), o.end());
                next_origin.push_back(std::move(o));
            }
        sys = std::move(next);
        origin = std::move(next_origin);
    }
    // Constant rows: need rhs > 0.
    for (size_t r = 0; r < sys.size(); ++r) {
        if (sys[r].rhs <= 0) {
            res.certificate_vertices = origin[r];
            return res;
        }
    }
    // Feasible: walk the parameters back, choosing midpoints of the exact bounds.
    std::vector<mpq_class> tv(t, 0);
    // redo FM keeping the systems per level to back-substitute
    {
        std::vector<std::vector<ineq>> levels;
        std::vector<ineq> cur;
        for (int i = 0; i < n; ++i) {
            ineq q;
            q.c.resize(t);
            for (size_t j = 0; j < t; ++j) q.c[j] = dirs[j][i];
            q.rhs = base[i];
            q.vertex = i + 1;
            cur.push_back(std::move(q));
        }
        levels.push_back(cur);
        for (size_t j = 0; j < t; ++j) {
            std::vector<ineq> next;
            for (const auto& q : levels.back())
                if (q.c[j] == 0) next.push_back(q);
            for (const auto& qp : levels.back())
                for (const auto& qn : levels.back()) {
                    if (!(qp.c[j] > 0 && qn.c[j] < 0)) continue;
                    ineq q;
                    q.c.resize(t);
                    mpq_class cp = qp.c[j], cn = -qn.c[j];
                    for (size_t x = 0; x < t; ++x) q.c[x] = qp.c[x] * cn + qn.c[x] * cp;
                    q.rhs = qp.rhs * cn + qn.rhs * cp;
                    q.vertex = 0;
                    next.push_back(std::move(q));
                }
            levels.push_back(std::move(next));
        }
        for (size_t jj = t; jj-- > 0;) {
            // bounds on t_jj from level jj with t_{jj+1..} already fixed
            bool has_lo = false, has_hi = false;
            mpq_class lo = 0, hi = 0;
            for (const auto& q : levels[jj]) {
                if (q.c[jj] == 0) continue;
                mpq_class rest = q.rhs;
                for (size_t x = jj + 1; x < t; ++x) rest += q.c[x] * tv[x];
                mpq_class bound = -rest / q.c[jj];
                if (q.c[jj] > 0) {
                    if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
                } else {
                    if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
                }
            }
            if (has_lo && has_hi)
                tv[jj] = (lo + hi) / 2;
            else if (has_lo)
                tv[jj] = lo + 1;
            else if (has_hi)
                tv[jj] = hi - 1;
            else
                tv[jj] = 1;
        }
    }
    variable_weight vw;
    vw.lambda.resize(n);
    for (int i = 0; i < n; ++i) {
        vw.lambda[i] = base[i];
        for (size_t j = 0; j < t; ++j) vw.lambda[i] += dirs[j][i] * tv[j];
    }
    for (int i = 0; i < n; ++i)
        if (vw.lambda[i] <= 0) throw error("internal: FM said feasible but point not positive");
    res.weight = std::move(vw);
    return res;
}

k_cover extend_on_facet(const weighted_complex& wc, vertex_set facet,
                        const std::vector<long>& partial_on_facet, long k) {
    if (k < 1) throw nonpositive_k("k must be >= 1");
    if (!is_matroid(wc.complex).holds) throw not_matroid("extend_on_facet needs a matroid");
    if (!solve_good_weight(wc).weight) throw not_good_weighted("weights are not induced by a vertex weight");
    const auto& facets = wc.complex.facets();
    auto it = std::find(facets.begin(), facets.end(), facet);
    if (it == facets.end()) throw vertex_out_of_range("facet not in complex");
    size_t fi = static_cast<size_t>(it - facets.begin());
    auto vars = vertices_of(facet);
    if (partial_on_facet.size() != vars.size()) throw ambient_mismatch("one value per facet vertex");
    long s = 0;
    for (long v : partial_on_facet) {
        if (v < 0) throw parse_error("cover values must be nonnegative");
        s += v;
    }
    if (s != k * wc.weights[fi]) throw sum_mismatch("partial must sum to k*w_F");

    // existence construction: fill the rest with k*M, then descend
    std::vector<long> alpha(wc.complex.n(), k * wc.max_weight());
    for (size_t i = 0; i < vars.size(); ++i) alpha[vars[i] - 1] = partial_on_facet[i];
    // the facet is tight, so the descent never touches it
    return reduce_to_basic(wc, std::move(alpha), k);
}

hilbert_fit fit_quasi_polynomial(const std::vector<long>& values) {
    size_t m = values.size();
    auto class_fit = [&](const std::vector<long>& cls, int& degree, mpq_class& lead) -> bool {
        // difference table; fitted when a row of zeros appears
        std::vector<long> row = cls;
        std::vector<long> last_nonzero_row = row;
        int d = 0;
        while (row.size() > 1) {
            bool zero = std::all_of(row.begin(), row.end(), [](long x) { return x == 0; });
            if (zero) break;
            last_nonzero_row = row;
            std::vector<long> next(row.size() - 1);
            for (size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
            row = std::move(next);
            ++d;
        }
        bool zero = std::all_of(row.begin(), row.end(), [](long x) { return x == 0; });
        if (!zero) return false;
        degree = d - 1;
        if (degree < 0) {  // identically zero class
            degree = 0;
            lead = 0;
            return true;
        }
        // constant row value = lead * degree! (in the class index)
        mpq_class fact = 1;
        for (int i = 2; i <= degree; ++i) fact *= i;
        lead = mpq_class(last_nonzero_row[0]) / fact;
        return true;
    };
    for (int p : {1, 2, 3, 4, 6}) {
        if (m / p < 3) continue;  // need >= 3 points per class to see a zero row
        bool ok = true;
        hilbert_fit fit;
        fit.quasi_period = p;
        fit.degree = 0;
        for (int r = 0; r < p && ok; ++r) {
            std::vector<long> cls;
            for (size_t i = r; i < m; i += p) cls.push_back(values[i]);
            int deg = 0;
            mpq_class lead_in_class = 0;
            ok = class_fit(cls, deg, lead_in_class);
            if (!ok) break;
            // convert leading coefficient from the class index to k: k = first + j*p
            mpq_class pk = 1;
            for (int i = 0; i < deg; ++i) pk *= p;
            fit.leading_per_class.push_back(lead_in_class / pk);
            fit.degree = std::max(fit.degree, deg);
        }
        if (ok) {
            fit.confirmed = true;
            return fit;
        }
    }
    throw insufficient_data("no quasi-period in {1,2,3,4,6} stabilizes the difference tables");
}

int estimate_dim_abar(const weighted_complex& wc, long k_max) {
    if (k_max < 4) throw insufficient_data("k_max must be >= 4");
    std::vector<long> hf;
    for (long k = 1; k <= k_max; ++k) hf.push_back(hf_abar(wc, k));
    hilbert_fit fit = fit_quasi_polynomial(hf);
    return fit.degree + 1;
}

multiplicity_fit fit_multiplicity(const std::vector<long>& values) {
    std::vector<long> row = values;
    int d = 0;
    while (!row.empty()) {
        bool constant = std::all_of(row.begin(), row.end(), [&](long x) { return x == row[0]; });
        if (constant && row[0] != 0) {
            multiplicity_fit out;
            out.multiplicity = row[0];
            out.degree = d;
            out.confirmed = row.size() > 1;
            return out;
        }
        if (row.size() == 1) break;
        std::vector<long> next(row.size() - 1);
        for (size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
        row = std::move(next);
        ++d;
    }
    throw insufficient_data("difference table never stabilizes on a nonzero constant");
}

}  // namespace symcomb
