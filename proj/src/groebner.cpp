#include "symcomb/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symcomb {

term_order term_order::lex(int n) {
    term_order o;
    o.kind = kind_t::lex;
    o.priority.resize(n);
    std::iota(o.priority.begin(), o.priority.end(), 0);
    return o;
}

term_order term_order::degrevlex(int n) {
    term_order o = lex(n);
    o.kind = kind_t::degrevlex;
    return o;
}

term_order term_order::weighted(std::vector<long> w, kind_t tiebreak_kind) {
    for (long x : w)
        if (x < 1) throw out_of_range("order weights must be >= 1");
    term_order o = lex(static_cast<int>(w.size()));
    o.kind = kind_t::weighted;
    o.weights = std::move(w);
    o.tiebreak = tiebreak_kind;
    return o;
}

term_order term_order::with_priority(std::vector<int> perm) const {
    term_order o = *this;
    o.priority = std::move(perm);
    return o;
}

term_order term_order::extended(int extra_vars) const {
    term_order o = *this;
    int n = static_cast<int>(o.priority.size());
    for (int i = 0; i < extra_vars; ++i) o.priority.push_back(n + i);
    if (o.kind == kind_t::weighted)
        for (int i = 0; i < extra_vars; ++i) o.weights.push_back(1);
    return o;
}

static bool lex_less(const monomial& a, const monomial& b, const std::vector<int>& prio) {
    for (int v : prio) {
        if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
}

static bool degrevlex_less(const monomial& a, const monomial& b, const std::vector<int>& prio) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] > b[*it];
    }
    return false;
}

bool term_order::less(const monomial& a, const monomial& b) const {
    switch (kind) {
        case kind_t::lex:
            return lex_less(a, b, priority);
        case kind_t::degrevlex:
            return degrevlex_less(a, b, priority);
        case kind_t::weighted: {
            long da = 0, db = 0;
            for (size_t i = 0; i < weights.size(); ++i) {
                da += weights[i] * a[i];
                db += weights[i] * b[i];
            }
            if (da != db) return da < db;
            return tiebreak == kind_t::lex ? lex_less(a, b, priority)
                                           : degrevlex_less(a, b, priority);
        }
    }
    return false;
}

const monomial& polynomial::leading_monomial() const {
    if (terms.empty()) throw empty_input("zero polynomial has no leading monomial");
    return terms.front().first;
}

const mpq_class& polynomial::leading_coefficient() const {
    if (terms.empty()) throw empty_input("zero polynomial has no leading coefficient");
    return terms.front().second;
}

long polynomial::degree() const {
    long d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, total_degree(m));
    return d;
}

polynomial make_polynomial(int n, std::vector<std::pair<monomial, mpq_class>> terms,
                           const term_order& order) {
    for (auto& [m, c] : terms) {
        if (static_cast<int>(m.size()) != n) throw ambient_mismatch("term arity != ambient");
        c.canonicalize();
    }
    std::sort(terms.begin(), terms.end(),
              [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
    std::vector<std::pair<monomial, mpq_class>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    // a cancellation can create adjacent equal monomials; re-run until stable
    bool again = false;
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].first == out[i + 1].first) again = true;
    if (again) return make_polynomial(n, std::move(out), order);
    return polynomial{n, std::move(out)};
}

polynomial poly_add(const polynomial& a, const polynomial& b, const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return make_polynomial(a.n ? a.n : b.n, std::move(terms), order);
}

polynomial poly_sub(const polynomial& a, const polynomial& b, const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms = a.terms;
    for (const auto& [m, c] : b.terms) terms.emplace_back(m, -c);
    return make_polynomial(a.n ? a.n : b.n, std::move(terms), order);
}

polynomial poly_mul_term(const polynomial& a, const monomial& m, const mpq_class& c,
                         const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms;
    terms.reserve(a.terms.size());
    for (const auto& [am, ac] : a.terms) terms.emplace_back(mono_mul(am, m), ac * c);
    return make_polynomial(a.n, std::move(terms), order);
}

polynomial poly_mul(const polynomial& a, const polynomial& b, const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& [am, ac] : a.terms)
        for (const auto& [bm, bc] : b.terms) terms.emplace_back(mono_mul(am, bm), ac * bc);
    return make_polynomial(a.n ? a.n : b.n, std::move(terms), order);
}

polynomial poly_monic(const polynomial& a) {
    if (a.is_zero()) return a;
    polynomial out = a;
    mpq_class lc = a.leading_coefficient();
    for (auto& [m, c] : out.terms) c /= lc;
    return out;
}

polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis,
                       const term_order& order) {
    polynomial rest = f;
    std::vector<std::pair<monomial, mpq_class>> remainder;
    while (!rest.is_zero()) {
        const monomial& lm = rest.leading_monomial();
        const polynomial* divisor = nullptr;
        for (const polynomial& g : basis) {
            if (!g.is_zero() && divides(g.leading_monomial(), lm)) {
                divisor = &g;
                break;
            }
        }
        if (!divisor) {
            remainder.push_back(rest.terms.front());
            rest.terms.erase(rest.terms.begin());
            continue;
        }
        monomial q(lm.size());
        for (size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - divisor->leading_monomial()[i];
        mpq_class c = rest.leading_coefficient() / divisor->leading_coefficient();
        rest = poly_sub(rest, poly_mul_term(*divisor, q, c, order), order);
    }
    return make_polynomial(f.n, std::move(remainder), order);
}

static polynomial s_polynomial(const polynomial& f, const polynomial& g, const term_order& order) {
    monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    monomial qf(l.size()), qg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        qf[i] = l[i] - f.leading_monomial()[i];
        qg[i] = l[i] - g.leading_monomial()[i];
    }
    polynomial a = poly_mul_term(f, qf, mpq_class(1) / f.leading_coefficient(), order);
    polynomial b = poly_mul_term(g, qg, mpq_class(1) / g.leading_coefficient(), order);
    return poly_sub(a, b, order);
}

static bool coprime_leads(const polynomial& f, const polynomial& g) {
    const monomial& a = f.leading_monomial();
    const monomial& b = g.leading_monomial();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

groebner_basis buchberger(const std::vector<polynomial>& gens, const term_order& order,
                          const groebner_options& opts) {
    std::vector<polynomial> basis;
    for (const polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(poly_monic(make_polynomial(g.n, g.terms, order)));
    if (basis.empty()) throw empty_input("buchberger: no nonzero generators");

    struct pair_entry {
        size_t i, j;
        monomial lcm;
        long deg;
    };
    auto make_pair = [&](size_t i, size_t j) {
        monomial l = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        long d = total_degree(l);
        return pair_entry{i, j, std::move(l), d};
    };
    std::vector<pair_entry> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back(make_pair(i, j));

    auto chain_criterion = [&](const pair_entry& p) {
        // some k with lt(k) | lcm and both (i,k), (j,k) already handled
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(basis[k].leading_monomial(), p.lcm)) continue;
            bool ik_gone = true, jk_gone = true;
            for (const auto& q : pairs) {
                if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k))) ik_gone = false;
                if ((q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) jk_gone = false;
            }
            if (ik_gone && jk_gone) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first, ties by lcm under the order
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            if (pairs[i].deg < pairs[best].deg ||
                (pairs[i].deg == pairs[best].deg && order.less(pairs[i].lcm, pairs[best].lcm)))
                best = i;
        }
        pair_entry p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        if (coprime_leads(basis[p.i], basis[p.j])) continue;  // first criterion
        if (chain_criterion(p)) continue;                     // second criterion
        polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
        if (r.is_zero()) continue;
        if (total_degree(r.leading_monomial()) == 0) {
            groebner_basis unit;
            unit.order = order;
            unit.is_unit = true;
            monomial one(static_cast<size_t>(r.n), 0);
            unit.generators = {make_polynomial(r.n, {{one, mpq_class(1)}}, order)};
            return unit;
        }
        if (r.degree() > opts.degree_cap)
            throw degree_cap_exceeded("basis element exceeds the degree cap of " +
                                      std::to_string(opts.degree_cap));
        basis.push_back(poly_monic(r));
        for (size_t i = 0; i + 1 < basis.size(); ++i) pairs.push_back(make_pair(i, basis.size() - 1));
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce tails
    std::vector<polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = poly_monic(normal_form(reduced[i], others, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const polynomial& a, const polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    groebner_basis out;
    out.generators = std::move(reduced);
    out.order = order;
    return out;
}

monomial_ideal initial_ideal(const std::vector<polynomial>& gens, const term_order& order,
                             const groebner_options& opts) {
    groebner_basis gb = buchberger(gens, order, opts);
    if (gb.is_unit) throw unit_ideal("initial ideal of the unit ideal");
    std::vector<monomial> lts;
    for (const auto& g : gb.generators) lts.push_back(g.leading_monomial());
    return monomial_ideal(gens.front().n, std::move(lts));
}

static long wdeg(const monomial& m, const std::vector<long>& w) {
    long d = 0;
    for (size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
    return d;
}

polynomial homogenize_w(const polynomial& f, const std::vector<long>& w, const term_order& order) {
    for (long x : w)
        if (x < 1) throw out_of_range("homogenization weights must be >= 1");
    if (static_cast<size_t>(f.n) != w.size()) throw ambient_mismatch("weight arity != ambient");
    long top = 0;
    for (const auto& [m, c] : f.terms) top = std::max(top, wdeg(m, w));
    term_order ext = order.extended(1);
    std::vector<std::pair<monomial, mpq_class>> terms;
    for (const auto& [m, c] : f.terms) {
        monomial e = m;
        e.push_back(static_cast<int>(top - wdeg(m, w)));
        terms.emplace_back(std::move(e), c);
    }
    return make_polynomial(f.n + 1, std::move(terms), ext);
}

polynomial dehomogenize(const polynomial& f, const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms;
    for (const auto& [m, c] : f.terms) {
        monomial e(m.begin(), m.end() - 1);
        terms.emplace_back(std::move(e), c);
    }
    return make_polynomial(f.n - 1, std::move(terms), order);
}

polynomial initial_form_w(const polynomial& f, const std::vector<long>& w, const term_order& order) {
    long top = 0;
    for (const auto& [m, c] : f.terms) top = std::max(top, wdeg(m, w));
    std::vector<std::pair<monomial, mpq_class>> terms;
    for (const auto& [m, c] : f.terms)
        if (wdeg(m, w) == top) terms.emplace_back(m, c);
    return make_polynomial(f.n, std::move(terms), order);
}

polynomial substitute_t_zero(const polynomial& f, const term_order& order) {
    std::vector<std::pair<monomial, mpq_class>> terms;
    for (const auto& [m, c] : f.terms) {
        if (m.back() != 0) continue;
        monomial e(m.begin(), m.end() - 1);
        terms.emplace_back(std::move(e), c);
    }
    return make_polynomial(f.n - 1, std::move(terms), order);
}

bool radical_membership(const polynomial& f, const std::vector<polynomial>& gens,
                        const groebner_options& opts) {
    if (f.is_zero()) return true;
    int n = f.n;
    term_order ext = term_order::degrevlex(n + 1);
    std::vector<polynomial> sys;
    for (const polynomial& g : gens) {
        std::vector<std::pair<monomial, mpq_class>> terms;
        for (const auto& [m, c] : g.terms) {
            monomial e = m;
            e.push_back(0);
            terms.emplace_back(std::move(e), c);
        }
        sys.push_back(make_polynomial(n + 1, std::move(terms), ext));
    }
    // 1 - y*f
    std::vector<std::pair<monomial, mpq_class>> terms;
    monomial one(static_cast<size_t>(n) + 1, 0);
    terms.emplace_back(one, mpq_class(1));
    for (const auto& [m, c] : f.terms) {
        monomial e = m;
        e.push_back(1);
        terms.emplace_back(std::move(e), -c);
    }
    sys.push_back(make_polynomial(n + 1, std::move(terms), ext));
    return buchberger(sys, ext, opts).is_unit;
}

bool verify_ara_minors2xn(int n, const groebner_options& opts) {
    if (n < 2) throw out_of_range("needs n >= 2");
    if (n > 3) throw resource_guard("desk scale is n <= 3");
    int cols = n + 1;
    int vars = 2 * cols;  // x_0..x_n, y_0..y_n
    term_order ord = term_order::degrevlex(vars);
    auto var = [&](int row, int col) { return row == 0 ? col : cols + col; };
    auto minor_ij = [&](int i, int j) {
        std::vector<std::pair<monomial, mpq_class>> terms;
        monomial a(static_cast<size_t>(vars), 0), b(static_cast<size_t>(vars), 0);
        a[var(0, i)] = 1;
        a[var(1, j)] = 1;
        b[var(0, j)] = 1;
        b[var(1, i)] = 1;
        terms.emplace_back(std::move(a), mpq_class(1));
        terms.emplace_back(std::move(b), mpq_class(-1));
        return make_polynomial(vars, std::move(terms), ord);
    };
    std::vector<polynomial> minors;
    for (int i = 0; i < cols; ++i)
        for (int j = i + 1; j < cols; ++j) minors.push_back(minor_ij(i, j));
    std::vector<polynomial> g;
    for (int k = 1; k <= 2 * n - 1; ++k) {
        polynomial gk{vars, {}};
        for (int i = 0; i < cols; ++i) {
            int j = k - i;
            if (j > i && j < cols) gk = poly_add(gk, minor_ij(i, j), ord);
        }
        g.push_back(gk);
    }
    // g_k in I_2 exactly (they are sums of minors): verify by normal form
    groebner_basis gb_minors = buchberger(minors, ord, opts);
    for (const polynomial& gk : g)
        if (!normal_form(gk, gb_minors.generators, ord).is_zero()) return false;
    // each minor in sqrt(g_1..g_{2n-1})
    for (const polynomial& mi : minors)
        if (!radical_membership(mi, g, opts)) return false;
    return true;
}

deformation_report deformation_connectedness_report(const std::vector<polynomial>& gens,
                                                    const term_order& order,
                                                    const groebner_options& opts) {
    deformation_report rep;
    rep.initial = initial_ideal(gens, order, opts);
    rep.radical_of_initial = radical(rep.initial);
    rep.complex = complex_of(rep.radical_of_initial);
    int n = rep.initial.ambient_n();
    rep.dim = rep.complex.dimension() + 1;
    // independent dimension route through the minimal primes
    int minht = n;
    for (const auto& p : min_primes_bruteforce(rep.radical_of_initial))
        minht = std::min(minht, static_cast<int>(p.size()));
    rep.dim_match = (n - minht) == rep.dim;
    rep.pure = rep.complex.is_pure();
    rep.strongly_connected = is_strongly_connected(rep.complex);
    rep.is_cm_of_initial =
        invariants_of_monomial(rep.radical_of_initial, coeff_field::rationals(), 64).is_cm;
    return rep;
}

std::optional<std::vector<long>> represent_order_by_weight(const groebner_basis& gb) {
    if (gb.generators.empty() || gb.is_unit) return std::nullopt;
    int n = gb.generators.front().n;
    long maxdeg = 1;
    for (const auto& g : gb.generators) maxdeg = std::max(maxdeg, g.degree());
    // geometric weights along the priority order separate lex at small scale
    std::vector<long> w(n, 1);
    long base = maxdeg + 1;
    long acc = 1;
    for (auto it = gb.order.priority.rbegin(); it != gb.order.priority.rend(); ++it) {
        w[*it] = acc;
        if (acc > (1L << 50) / base) return std::nullopt;  // would overflow; give up
        acc *= base;
    }
    for (const auto& g : gb.generators) {
        long top = wdeg(g.leading_monomial(), w);
        for (size_t i = 1; i < g.terms.size(); ++i)
            if (wdeg(g.terms[i].first, w) >= top) return std::nullopt;
    }
    return w;
}

}  // namespace symcomb
