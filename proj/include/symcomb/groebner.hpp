#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "symcomb/homalg.hpp"
#include "symcomb/monomial.hpp"

namespace symcomb {

/// Monomial orders: lex, degrevlex, or a positive weight vector refined by
/// one of the two.  `priority` lists the variables from most to least
/// significant (0-based); it defaults to x1 > x2 > ... > xn.
struct term_order {
    enum class kind_t { lex, degrevlex, weighted };
    kind_t kind = kind_t::lex;
    std::vector<long> weights;  // weighted only, entries >= 1
    kind_t tiebreak = kind_t::lex;
    std::vector<int> priority;

    static term_order lex(int n);
    static term_order degrevlex(int n);
    static term_order weighted(std::vector<long> w, kind_t tiebreak_kind);
    term_order with_priority(std::vector<int> perm) const;
    term_order extended(int extra_vars) const;  // appends least-significant variables

    bool less(const monomial& a, const monomial& b) const;   // a strictly before b (smaller)
    bool greater(const monomial& a, const monomial& b) const { return less(b, a); }
};

/// Terms kept sorted strictly descending under the order they were built with.
struct polynomial {
    int n = 0;
    std::vector<std::pair<monomial, mpq_class>> terms;

    bool is_zero() const { return terms.empty(); }
    const monomial& leading_monomial() const;
    const mpq_class& leading_coefficient() const;
    long degree() const;  // total degree
};

polynomial make_polynomial(int n, std::vector<std::pair<monomial, mpq_class>> terms,
                           const term_order& order);
polynomial poly_add(const polynomial& a, const polynomial& b, const term_order& order);
polynomial poly_sub(const polynomial& a, const polynomial& b, const term_order& order);
polynomial poly_mul_term(const polynomial& a, const monomial& m, const mpq_class& c,
                         const term_order& order);
polynomial poly_mul(const polynomial& a, const polynomial& b, const term_order& order);
polynomial poly_monic(const polynomial& a);

struct groebner_basis {
    std::vector<polynomial> generators;  // monic, interreduced, sorted by leading monomial
    term_order order;
    bool is_unit = false;  // basis = {1}
};

struct groebner_options {
    long degree_cap = 30;  // abort when a basis element would exceed this total degree
};

// Full multivariate division; divisors are tried in basis order, every term
// of the remainder is reduced.
polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis,
                       const term_order& order);

// Buchberger with the normal pair-selection strategy and the two classical
// pair criteria; returns the reduced basis.
groebner_basis buchberger(const std::vector<polynomial>& gens, const term_order& order,
                          const groebner_options& opts = {});

monomial_ideal initial_ideal(const std::vector<polynomial>& gens, const term_order& order,
                             const groebner_options& opts = {});

// hom_w(f) in n+1 variables, the homogenizing variable last with degree 1.
polynomial homogenize_w(const polynomial& f, const std::vector<long>& w, const term_order& order);
polynomial dehomogenize(const polynomial& f, const term_order& order);
// top w-degree part
polynomial initial_form_w(const polynomial& f, const std::vector<long>& w, const term_order& order);
// substitute t = 0 in a polynomial of n+1 variables
polynomial substitute_t_zero(const polynomial& f, const term_order& order);

// f in sqrt(gens), by the trick of adjoining 1 - y*f.
bool radical_membership(const polynomial& f, const std::vector<polynomial>& gens,
                        const groebner_options& opts = {});

// Checks sqrt(g_1,...,g_{2n-1}) = sqrt(2-minors) for the generic 2 x (n+1)
// matrix, where g_k is the antidiagonal sum of the minors [i,j], i+j = k.
bool verify_ara_minors2xn(int n, const groebner_options& opts = {});

struct deformation_report {
    bool dim_match = false;        // dimension via facets == dimension via minimal primes
    int dim = 0;                   // of S/in(I)
    bool pure = false;
    bool strongly_connected = false;
    bool is_cm_of_initial = false; // of S/sqrt(in(I)) over Q
    monomial_ideal initial;
    monomial_ideal radical_of_initial;
    simplicial_complex complex;
};
deformation_report deformation_connectedness_report(const std::vector<polynomial>& gens,
                                                    const term_order& order,
                                                    const groebner_options& opts = {});

// Best-effort weight vector w with in_w(I) = in_<(I), read off from the
// reduced basis; nullopt when the candidate fails the separation check.
std::optional<std::vector<long>> represent_order_by_weight(const groebner_basis& gb);

}  // namespace symcomb
