#include "symcomb/minors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace symcomb {

long partition_size(const partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

void validate_partition(const partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw parse_error("partition parts must be positive");
        if (i && p[i] > p[i - 1]) throw parse_error("partition parts must be weakly decreasing");
    }
}

partition transpose(const partition& p) {
    if (p.empty()) return {};
    partition t(p[0], 0);
    for (int j = 0; j < p[0]; ++j)
        t[j] = static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x >= j + 1; }));
    return t;
}

bool diagram_contains(const partition& inner, const partition& outer) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool bi_diagram::operator<(const bi_diagram& o) const {
    if (gamma != o.gamma) return gamma < o.gamma;
    return lambda < o.lambda;
}

void validate_params(const minors_params& p) {
    if (!(1 <= p.t && p.t <= p.m && p.m <= p.n)) throw out_of_range("need 1 <= t <= m <= n");
}

bool is_admissible(const partition& lam, int t) {
    validate_partition(lam);
    long sz = partition_size(lam);
    if (sz == 0 || sz % t != 0) return false;
    return static_cast<long>(lam.size()) <= sz / t;
}

bool is_d_admissible(const partition& lam, int t, long d) {
    validate_partition(lam);
    return partition_size(lam) == t * d && static_cast<long>(lam.size()) <= d;
}

std::vector<partition> partitions_of(long size, int max_parts) {
    std::vector<partition> out;
    partition cur;
    auto rec = [&](auto&& self, long rem, int mx) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int part = static_cast<int>(std::min<long>(rem, mx)); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    if (size == 0) return {partition{}};
    rec(rec, size, static_cast<int>(size));
    return out;
}

static partition pieri_cap(const partition& p, int t) {
    partition out;
    out.reserve(p.size() + 1);
    out.push_back((p.empty() ? 0 : p[0]) + t);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<partition> predecessors(const partition& lam, int t) {
    if (!is_admissible(lam, t)) throw not_admissible("predecessors: not admissible");
    long d = partition_size(lam) / t;
    if (d <= 1) return {};
    std::vector<partition> out;
    for (const partition& cand : partitions_of(t * (d - 1), static_cast<int>(d - 1)))
        if (diagram_contains(cand, lam) && diagram_contains(lam, pieri_cap(cand, t)))
            out.push_back(cand);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_unique_predecessor(const partition& lam, int t) {
    long d = partition_size(lam) / t;
    if (!is_admissible(lam, t) || d < 2) throw not_admissible("needs a d-admissible diagram, d >= 2");
    size_t k = lam.size();
    bool rectangle = std::all_of(lam.begin(), lam.end(), [&](int x) { return x == lam[0]; });
    bool fat_hook = false;
    if (!rectangle && static_cast<long>(k) == d) {
        // exactly two distinct values, each in one block
        std::set<int> vals(lam.begin(), lam.end());
        fat_hook = vals.size() == 2;
    }
    bool closed_form = rectangle || fat_hook;
    bool enumerated = predecessors(lam, t).size() == 1;
    if (closed_form != enumerated)
        throw classification_mismatch("predecessor classification disagrees with enumeration");
    return enumerated;
}

mpz_class multiplicity_n(const bi_diagram& bi, int t) {
    long d = partition_size(bi.gamma) / t;
    if (!is_d_admissible(bi.gamma, t, d) || !is_d_admissible(bi.lambda, t, d))
        throw not_admissible("multiplicity: both diagrams must be d-admissible for one d");
    std::map<bi_diagram, mpz_class> memo;
    auto rec = [&](auto&& self, const bi_diagram& b) -> mpz_class {
        if (partition_size(b.gamma) == t) return 1;
        auto it = memo.find(b);
        if (it != memo.end()) return it->second;
        mpz_class tot = 0;
        for (const partition& gp : predecessors(b.gamma, t))
            for (const partition& lp : predecessors(b.lambda, t))
                tot += self(self, bi_diagram{gp, lp});
        memo[b] = tot;
        return tot;
    };
    return rec(rec, bi);
}

mpz_class dim_schur(const partition& lam, int dim_v) {
    validate_partition(lam);
    if (lam.empty()) return 1;
    if (lam[0] > dim_v) return 0;
    partition mu = transpose(lam);
    mpz_class num = 1, den = 1;
    for (size_t i = 0; i < mu.size(); ++i) {
        for (int j = 0; j < mu[i]; ++j) {
            num *= dim_v + j - static_cast<int>(i);
            int arm = mu[i] - j - 1;
            int leg = 0;
            for (size_t r = i + 1; r < mu.size(); ++r)
                if (mu[r] >= j + 1) ++leg;
            den *= arm + leg + 1;
        }
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class dim_schur_tableaux(const partition& lam, int dim_v) {
    validate_partition(lam);
    if (lam.empty()) return 1;
    if (lam[0] > dim_v) return 0;
    // rows strictly increasing, columns weakly increasing, entries in [dim_v]
    mpz_class count = 0;
    std::vector<std::vector<int>> rows(lam.size());
    auto rec = [&](auto&& self, size_t r) -> void {
        if (r == lam.size()) {
            ++count;
            return;
        }
        std::vector<int> row(lam[r]);
        auto fill = [&](auto&& self2, int pos, int minval) -> void {
            if (pos == lam[r]) {
                rows[r] = row;
                self(self, r + 1);
                return;
            }
            for (int v = minval; v <= dim_v; ++v) {
                if (r > 0 && pos < lam[r - 1] + 0 && pos < static_cast<int>(rows[r - 1].size()) &&
                    v < rows[r - 1][pos])
                    continue;
                row[pos] = v;
                self2(self2, pos + 1, v + 1);
            }
        };
        fill(fill, 0, 1);
    };
    rec(rec, 0);
    return count;
}

mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

mpz_class hf_at(const minors_params& p, long d) {
    validate_params(p);
    if (d < 0) throw out_of_range("degree must be >= 0");
    if (d == 0) return 1;
    mpz_class tot = 0;
    for (const partition& lam : partitions_of(static_cast<long>(p.t) * d, static_cast<int>(d)))
        tot += dim_schur(lam, p.m) * dim_schur(lam, p.n);
    return tot;
}

// diagonals of an r-minor: strictly increasing row and column choices
static void diagonals(int m, int n, int r, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    std::vector<int> rows(r), cols(r);
    auto rec_cols = [&](auto&& self, int idx, int start) -> void {
        if (idx == r) {
            out.emplace_back(rows, cols);
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    auto rec_rows = [&](auto&& self, int idx, int start) -> void {
        if (idx == r) {
            rec_cols(rec_cols, 0, 0);
            return;
        }
        for (int rr = start; rr < m; ++rr) {
            rows[idx] = rr;
            self(self, idx + 1, rr + 1);
        }
    };
    rec_rows(rec_rows, 0, 0);
}

mpz_class hf_at_oracle(const minors_params& p, long d) {
    validate_params(p);
    if (d == 0) return 1;
    if (p.t * d > 14) throw oracle_too_large("monomial enumeration is capped at degree t*d <= 14");
    using expmap = std::vector<std::pair<int, int>>;  // sorted (cell, exponent)
    std::set<expmap> monos;
    for (const partition& lam : partitions_of(static_cast<long>(p.t) * d, static_cast<int>(d))) {
        if (lam.empty() || lam[0] > std::min(p.m, p.n)) continue;
        // group the equal parts; choose a multiset of diagonals per group
        std::vector<std::pair<int, int>> groups;  // (size, count)
        for (int part : lam) {
            if (!groups.empty() && groups.back().first == part)
                ++groups.back().second;
            else
                groups.emplace_back(part, 1);
        }
        std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> diag_lists;
        for (auto [sz, cnt] : groups) {
            diag_lists.emplace_back();
            diagonals(p.m, p.n, sz, diag_lists.back());
        }
        std::map<std::pair<int, int>, int> exps;
        auto add_diag = [&](const std::pair<std::vector<int>, std::vector<int>>& dg, int delta) {
            for (size_t i = 0; i < dg.first.size(); ++i)
                exps[{dg.first[i], dg.second[i]}] += delta;
        };
        auto emit = [&]() {
            expmap v;
            for (const auto& [cell, e] : exps)
                if (e) v.emplace_back(cell.first * p.n + cell.second, e);
            monos.insert(v);
        };
        auto rec = [&](auto&& self, size_t gi, size_t within, size_t from) -> void {
            if (gi == groups.size()) {
                emit();
                return;
            }
            const auto& list = diag_lists[gi];
            size_t cnt = static_cast<size_t>(groups[gi].second);
            if (within == cnt) {
                self(self, gi + 1, 0, 0);
                return;
            }
            for (size_t i = from; i < list.size(); ++i) {
                add_diag(list[i], 1);
                self(self, gi, within + 1, i);  // multisets: nondecreasing indices
                add_diag(list[i], -1);
            }
        };
        rec(rec, 0, 0, 0);
    }
    return mpz_class(static_cast<long>(monos.size()));
}

mpz_class tensor_power_dimension(const minors_params& p, long d) {
    mpz_class base = binom(p.m, p.t) * binom(p.n, p.t);
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d));
    return out;
}

mpz_class bidiagram_dimension_sum(const minors_params& p, long d) {
    validate_params(p);
    mpz_class tot = 0;
    auto parts = partitions_of(static_cast<long>(p.t) * d, static_cast<int>(d));
    for (const partition& g : parts) {
        mpz_class dg = dim_schur(g, p.m);
        if (dg == 0) continue;
        for (const partition& l : parts) {
            mpz_class dl = dim_schur(l, p.n);
            if (dl == 0) continue;
            tot += multiplicity_n(bi_diagram{g, l}, p.t) * dg * dl;
        }
    }
    return tot;
}

regularity_result regularity_and_a_invariant(const minors_params& p) {
    validate_params(p);
    if (!(1 < p.t && p.t < p.m && p.n > p.t + 1))
        throw out_of_range("regularity formula needs 1 < t < m and n > t+1");
    long m = p.m, n = p.n, t = p.t;
    regularity_result out;
    if (m + n - 1 < (m * n) / t) {
        out.case_id = 1;
        long ceil_mnt = (m * n + t - 1) / t;
        out.a_invariant = -ceil_mnt;
        out.reg = m * n - ceil_mnt;
    } else {
        out.case_id = 2;
        long num = t * m + t * n - m * n;
        // ceil for possibly negative numerators
        long den = m - t;
        long k0 = num >= 0 ? (num + den - 1) / den : -((-num) / den);
        out.k0 = k0;
        long fl = (m * (n + k0)) / t;
        out.a_invariant = -fl;
        out.reg = m * n - fl;
    }
    return out;
}

int sagbi_degree_bound(int m, int t) {
    if (!(1 < t && t < m)) throw out_of_range("sagbi bound needs 1 < t < m");
    return std::gcd(m - 1, t - 1) == 1 ? m - 2 : m - 1;
}

relation_bounds relation_degree_bounds(const minors_params& p) {
    validate_params(p);
    if (!(1 < p.t && p.t < p.m && p.n > p.t + 1))
        throw out_of_range("relation bounds need 1 < t < m and n > t+1");
    long m = p.m, t = p.t;
    relation_bounds out;
    out.colbound = static_cast<int>(m + t);
    if (m + t - 1 < (m * m) / t) {
        long ceil_m2t = (m * m + t - 1) / t;
        out.degbound = m * m + m * (t - 1) - ceil_m2t + 1;
    } else {
        long num = t * t + t * m - m * m;
        long den = m - t;
        long k0 = num >= 0 ? (num + den - 1) / den : -((-num) / den);
        out.degbound = m * m + m * (t - 1) - (m * (m + k0)) / t + 1;
    }
    return out;
}

std::vector<bi_diagram> shape_relations(const minors_params& p) {
    validate_params(p);
    if (!(1 < p.t && p.t < p.m && p.n > p.t + 1))
        throw out_of_range("shape relations need 1 < t < m and n > t+1");
    int t = p.t;
    std::vector<bi_diagram> out;
    auto push = [&](int a, int b, int c, int dd) {
        if (a > p.m || c > p.n) return;  // the height conditions select the valid indices
        partition gamma{a, a};
        if (b > 0) gamma.push_back(b);
        partition lambda{c};
        if (dd > 0) {
            lambda.push_back(dd);
            lambda.push_back(dd);
        }
        bi_diagram bd{gamma, lambda};
        if (!is_d_admissible(bd.gamma, t, 3) || !is_d_admissible(bd.lambda, t, 3) || bd.symmetric())
            throw classification_mismatch("shape relation fails its defining checks");
        out.push_back(std::move(bd));
    };
    if (t % 2 == 0) {
        for (int i = 1; i <= t / 2; ++i)
            push(3 * t / 2 - i + 1, 2 * (i - 1), 2 * (t - i + 1), t / 2 + i - 1);
    } else {
        for (int i = 1; i <= (t - 1) / 2; ++i)
            push((3 * t - 1) / 2 - i + 1, 2 * (i - 1) + 1, 2 * (t - i + 1) - 1, (t + 1) / 2 + i - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

identity_classification partition_identity(const std::vector<int>& a, const std::vector<int>& b,
                                           int q) {
    for (int x : a)
        if (x < 1 || x > q) throw out_of_range("identity entries must lie in [q]");
    for (int x : b)
        if (x < 1 || x > q) throw out_of_range("identity entries must lie in [q]");
    identity_classification out;
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    out.is_identity = !a.empty() && !b.empty() && sa == sb;
    if (!out.is_identity) return out;
    out.is_homogeneous = a.size() == b.size();
    size_t k = a.size(), l = b.size();
    if (k + l > 30) throw resource_guard("subidentity search capped at 30 total entries");
    out.is_primitive = true;
    out.is_homogeneous_primitive = out.is_homogeneous;
    for (std::uint64_t sm = 1; sm + 1 < (std::uint64_t{1} << k); ++sm) {
        long s1 = 0;
        int r = 0;
        for (size_t i = 0; i < k; ++i)
            if (sm & (std::uint64_t{1} << i)) {
                s1 += a[i];
                ++r;
            }
        for (std::uint64_t sn = 1; sn < (std::uint64_t{1} << l); ++sn) {
            long s2 = 0;
            int s = 0;
            for (size_t i = 0; i < l; ++i)
                if (sn & (std::uint64_t{1} << i)) {
                    s2 += b[i];
                    ++s;
                }
            if (s1 != s2) continue;
            if (static_cast<size_t>(r) + s < k + l) out.is_primitive = false;
            if (out.is_homogeneous && r == s && static_cast<size_t>(r) < k)
                out.is_homogeneous_primitive = false;
        }
    }
    return out;
}

std::vector<std::vector<int>> enumerate_hpi(int q, int t, int k) {
    if (q < 1 || t < 1 || t > q || k < 1) throw out_of_range("enumerate_hpi parameter range");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int minval, long rem, int slots) -> void {
        if (slots == 0) {
            if (rem == 0) {
                std::vector<int> b(static_cast<size_t>(k), t);
                auto cls = partition_identity(cur, b, q);
                if (cls.is_homogeneous_primitive) out.push_back(cur);
            }
            return;
        }
        for (int v = minval; v <= q; ++v) {
            if (v > rem) break;
            if (rem - v > static_cast<long>(q) * (slots - 1)) continue;
            cur.push_back(v);
            self(self, v, rem - v, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, static_cast<long>(t) * k, k);
    return out;
}

static mpz_class int_minor(const std::vector<std::vector<long>>& x, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    size_t r = rows.size();
    // Laplace-free: fraction-free Gaussian elimination on an mpz copy
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) a[i][j] = x[rows[i]][cols[j]];
    mpz_class det = 1, prev = 1;
    int sign = 1;
    for (size_t p = 0; p < r; ++p) {
        size_t piv = p;
        while (piv < r && a[piv][p] == 0) ++piv;
        if (piv == r) return 0;
        if (piv != p) {
            std::swap(a[piv], a[p]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < r; ++i) {
            for (size_t j = p + 1; j < r; ++j) {
                mpz_class num = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    det = a[r - 1][r - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

bool verify_det_relations(int t, const std::vector<std::vector<long>>& matrix) {
    if (t < 2) throw out_of_range("needs t >= 2");
    size_t need = static_cast<size_t>(t) + 2;
    if (matrix.size() < need) throw matrix_too_small("need at least (t+2) rows");
    for (const auto& row : matrix)
        if (row.size() < need) throw matrix_too_small("need at least (t+2) columns");

    // rows: {1..t-2} plus pairs from {t-1, t, t+1}; cols: {1..t-1} plus one
    // of {t, t+1, t+2}  (0-based below)
    std::vector<int> base_r, base_c;
    for (int i = 0; i < t - 2; ++i) base_r.push_back(i);
    for (int i = 0; i < t - 1; ++i) base_c.push_back(i);
    int trip[3] = {t - 2, t - 1, t};
    int singles[3] = {t - 1, t, t + 1};
    std::vector<std::vector<int>> rowsets, colsets;
    for (int skip = 2; skip >= 0; --skip) {
        std::vector<int> rs = base_r;
        for (int j = 0; j < 3; ++j)
            if (j != skip) rs.push_back(trip[j]);
        std::sort(rs.begin(), rs.end());
        rowsets.push_back(rs);
    }
    for (int j = 0; j < 3; ++j) {
        std::vector<int> cs = base_c;
        cs.push_back(singles[j]);
        std::sort(cs.begin(), cs.end());
        colsets.push_back(cs);
    }
    mpz_class e[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = int_minor(matrix, rowsets[i], colsets[j]);
    mpz_class det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                    e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                    e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
    if (det != 0) return false;

    if (t == 2) {
        // Plucker combination on every 2x4 submatrix
        auto m2 = [&](int r0, int r1, int c0, int c1) {
            return mpz_class(matrix[r0][c0]) * matrix[r1][c1] -
                   mpz_class(matrix[r0][c1]) * matrix[r1][c0];
        };
        size_t rows = matrix.size(), cols = matrix[0].size();
        for (size_t r0 = 0; r0 < rows; ++r0)
            for (size_t r1 = r0 + 1; r1 < rows; ++r1)
                for (size_t c0 = 0; c0 + 3 < cols; ++c0)
                    for (size_t c1 = c0 + 1; c1 + 2 < cols; ++c1)
                        for (size_t c2 = c1 + 1; c2 + 1 < cols; ++c2)
                            for (size_t c3 = c2 + 1; c3 < cols; ++c3) {
                                int a = static_cast<int>(r0), b = static_cast<int>(r1);
                                mpz_class pl =
                                    m2(a, b, c0, c1) * m2(a, b, c2, c3) -
                                    m2(a, b, c0, c2) * m2(a, b, c1, c3) +
                                    m2(a, b, c0, c3) * m2(a, b, c1, c2);
                                if (pl != 0) return false;
                            }
    }
    return true;
}

}  // namespace symcomb
