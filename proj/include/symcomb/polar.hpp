#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symcomb/monomial.hpp"

namespace symcomb {

/// Square-free lift of a monomial ideal into variables x_{i,j}; variable i
/// gets exactly max-exponent many levels.  Flat order: (1,1),(1,2),...,
/// blocks by i ascending.
struct polarized_ideal {
    monomial_ideal ideal;          // square-free, over the flat variables
    monomial_ideal source;         // the original ideal
    std::vector<int> levels;       // levels[i] = #levels of variable i+1
    std::vector<int> offsets;      // flat index of (i+1, 1)

    int flat_index(int var, int level) const;              // 1-based var, level
    std::pair<int, int> var_level(int flat) const;         // 0-based flat -> (var, level)
    int ambient() const { return ideal.ambient_n(); }
};

polarized_ideal polarize(const monomial_ideal& a);

/// p_{F,a} = (x_{i_1,a_1}, ..., x_{i_d,a_d}); entries sorted by base vertex.
struct indexed_prime {
    std::vector<std::pair<int, int>> vars;  // (vertex, level), level >= 1
    bool operator==(const indexed_prime& o) const = default;
    bool operator<(const indexed_prime& o) const { return vars < o.vars; }
    long level_sum() const;
};

// Associated primes of the polarization of p_F^k: all p_{F,a} with
// a in [k]^{|F|} and |a| <= k + |F| - 1.
std::vector<indexed_prime> ass_primes_prime_power(const std::vector<int>& f, long k);

// Ass of the polarization of J(Delta,w)^(k): union over facets F of the
// primes of p_F^{k w_F}.
std::vector<indexed_prime> ass_primes_weighted(const simplicial_complex& cx,
                                               const std::vector<long>& weights, long k);

// Oracle: minimal primes of a square-free ideal as flat variable subsets
// (0-based), via brute-force minimal transversals of the generator supports.
std::vector<std::vector<int>> min_primes_bruteforce(const monomial_ideal& a);

/// Localized-connectedness obstruction run on a non-matroid witness.
struct obstruction_result {
    bool obstructed = false;           // true certifies non-CM
    std::optional<facet_witness> witness;
    std::vector<indexed_prime> chain_candidates;  // primes inside p_{F,a} + p_{G,b}
};

// Builds p_{F,a} with a = (d+1,1,...,1) at the witness vertex and p_{G,b}
// with b = (2,...,2), restricts Ass of the polarized ideal to primes inside
// their sum and looks for a connecting sequence with pairwise sum-height
// <= d+1.  Pass does not certify Cohen-Macaulayness.
obstruction_result cm_obstruction_check(const simplicial_complex& cx,
                                        const std::vector<long>& weights, long k);

}  // namespace symcomb
