#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symcomb/monomial.hpp"
#include "symcomb/polar.hpp"

namespace symcomb {

/// Coefficient field: char 0 means exact rationals, otherwise a prime p.
struct coeff_field {
    long characteristic = 0;
    static coeff_field rationals() { return {0}; }
    static coeff_field prime(long p);
};

// Reduced homology dimensions of the complex, indexed -1 .. dim.
std::vector<long> reduced_homology(const simplicial_complex& cx, const coeff_field& field);

// Reduced homology of a union of full simplices on the given vertex sets
// (0-based bitmasks).  Result indexed from -1 upward, trailing zeros cut.
// Computed via nested nerve covers, so large unions stay cheap.
std::vector<long> union_of_simplices_homology(const std::vector<vertex_set>& pieces,
                                              const coeff_field& field);

/// Graded Betti numbers beta_{i,j} of the quotient's resolution
/// (beta_{0,0} = 1 suppressed).  reg(S/I) = max j-i over the table.
struct betti_table {
    std::map<std::pair<int, int>, long> entries;
    int ambient_n = 0;
    long field_char = 0;

    int pd() const;
    int reg() const;
    std::string to_grid() const;  // Macaulay-style triangular layout
};

// Hochster sum beta_{i,j}(S/I) = sum_{|W|=j} dim H~_{j-i-1}(Delta(I)|_W).
// Only W that are unions of generator supports contribute (every other W
// leaves a cone vertex in the induced subcomplex); each contribution is
// computed from the Alexander dual of the induced subcomplex, which is a
// union of simplices.
betti_table hochster_betti(const monomial_ideal& a, const coeff_field& field);

struct quotient_invariants {
    int pd = 0;
    int depth = 0;
    int reg = 0;
    int height = 0;
    bool is_cm = false;
    int polarized_vars = 0;
};

inline constexpr int default_polar_var_cap = 16;

// Invariants of S/I computed on the polarization (which has the same Betti
// numbers); depth is reported for the original quotient.  Throws
// resource_guard when the polarization needs more variables than `var_cap`.
quotient_invariants invariants_of_monomial(const monomial_ideal& a, const coeff_field& field,
                                           int var_cap = default_polar_var_cap);

// e(k[Delta]) = facet count for pure Delta.
long multiplicity(const simplicial_complex& cx);

struct eisenbud_goto_result {
    bool applicable = false;   // needs I in m^2 and connectedness in codim 1
    bool holds = false;
    int reg = 0;
    long e = 0;
    int height = 0;
};
eisenbud_goto_result eisenbud_goto_check(const monomial_ideal& a, const coeff_field& field);

}  // namespace symcomb
