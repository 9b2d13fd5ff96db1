#pragma once

#include <optional>
#include <vector>

#include "symcomb/simplicial.hpp"

namespace symcomb {

/// Exponent vector over a fixed ambient variable count.
using monomial = std::vector<int>;

long total_degree(const monomial& m);
bool divides(const monomial& a, const monomial& b);
monomial mono_lcm(const monomial& a, const monomial& b);
monomial mono_mul(const monomial& a, const monomial& b);
bool mono_less(const monomial& a, const monomial& b);  // (degree, lex) order used for canonical gen lists

/// Monomial ideal by its minimal generators, canonically sorted.
/// The zero ideal is the empty list; the unit ideal is unrepresentable.
class monomial_ideal {
  public:
    monomial_ideal() = default;
    // Minimalizes and sorts; rejects the unit ideal.
    monomial_ideal(int ambient_n, std::vector<monomial> gens);

    int ambient_n() const { return n_; }
    const std::vector<monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const monomial& m) const;

    bool operator==(const monomial_ideal& o) const = default;

  private:
    int n_ = 0;
    std::vector<monomial> gens_;
};

monomial_ideal intersect(const monomial_ideal& a, const monomial_ideal& b);
monomial_ideal power(const monomial_ideal& a, long k);
monomial_ideal radical(const monomial_ideal& a);
bool membership(const monomial& m, const monomial_ideal& a);

// p_F^k: generated by all degree-k monomials in the F-variables.
monomial_ideal prime_power(const std::vector<int>& f, long k, int ambient_n);
monomial_ideal prime_power_mask(vertex_set f, long k, int ambient_n);

// I_Delta, generated by the minimal non-faces.
monomial_ideal stanley_reisner(const simplicial_complex& cx);
// J(Delta) = intersection of the facet primes p_F.
monomial_ideal cover_ideal(const simplicial_complex& cx);
// J(Delta, w)^(k) = intersection of p_F^{k w_F}.
monomial_ideal symbolic_power(const simplicial_complex& cx, const std::vector<long>& weights, long k);
// Inverse of the Stanley-Reisner correspondence (square-free proper input).
simplicial_complex complex_of(const monomial_ideal& a);

bool is_square_free(const monomial_ideal& a);

struct height_dim {
    int height = 0;
    int dim = 0;  // of the quotient
};
height_dim height_and_dim(const monomial_ideal& a);

/// Either the powers agree or a minimal-degree monomial in I^(k) \ I^k.
struct symbolic_comparison {
    bool equal = false;
    std::optional<monomial> witness;
};
symbolic_comparison symbolic_vs_ordinary(const simplicial_complex& cx,
                                         const std::vector<long>& weights, long k);

}  // namespace symcomb
