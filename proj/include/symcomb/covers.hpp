#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "symcomb/monomial.hpp"
#include "symcomb/simplicial.hpp"

namespace symcomb {

/// (Delta, w): a positive integer weight per facet, stored parallel to the
/// canonical facet order.
struct weighted_complex {
    simplicial_complex complex;
    std::vector<long> weights;

    weighted_complex(simplicial_complex cx, std::vector<long> w);
    static weighted_complex canonical(simplicial_complex cx);
    long max_weight() const;
};

struct k_cover {
    std::vector<long> alpha;
    long k = 1;
    bool operator==(const k_cover& o) const = default;
    bool operator<(const k_cover& o) const { return alpha < o.alpha; }
};

enum class cover_class { not_a_cover, cover, basic_cover };

// Basic = k-cover such that lowering any positive coordinate by one breaks
// a facet constraint.  This local test is equivalent to coordinatewise
// minimality: any strictly smaller cover stays a cover after one lowering
// step toward it.
cover_class classify_cover(const weighted_complex& wc, const std::vector<long>& alpha, long k);

// Greedy descent, always lowering the smallest liftable index first.
k_cover reduce_to_basic(const weighted_complex& wc, std::vector<long> alpha, long k);

// All basic k-covers; entries are bounded by k * max weight.
std::vector<k_cover> enumerate_basic_covers(const weighted_complex& wc, long k);

// Hilbert function of the algebra of basic covers in degree k.
long hf_abar(const weighted_complex& wc, long k);

/// Strictly positive per-vertex weight inducing w via w_F = sum_{i in F} lambda_i.
struct variable_weight {
    std::vector<mpq_class> lambda;
};

struct good_weight_result {
    std::optional<variable_weight> weight;  // nullopt <=> infeasible
    // On infeasibility: vertices whose positivity cannot be met, or the
    // facet rows of an inconsistent linear combination.
    std::vector<int> certificate_vertices;
    std::vector<int> certificate_facets;
};
good_weight_result solve_good_weight(const weighted_complex& wc);

// Unique basic k-cover of a good-weighted matroid extending `partial` on
// facet F (partial must sum to k*w_F).
k_cover extend_on_facet(const weighted_complex& wc, vertex_set facet,
                        const std::vector<long>& partial_on_facet, long k);

/// Difference-table fit of an integer sequence a(1..kmax).
struct hilbert_fit {
    int quasi_period = 1;
    int degree = 0;              // growth degree of the fitted quasi-polynomial
    std::vector<mpq_class> leading_per_class;  // leading coefficient in k, per residue class
    bool confirmed = false;      // a difference row of zeros was observed
};

// Fits on each residue class modulo a quasi-period from {1,2,3,4,6}
// (restricted to periods leaving >= 3 points per class) and returns the
// smallest period whose classes all stabilize.
hilbert_fit fit_quasi_polynomial(const std::vector<long>& values);

// dim = 1 + growth degree of HF_{Abar}.
int estimate_dim_abar(const weighted_complex& wc, long k_max);

// Leading coefficient * degree!: the value of the deepest constant row of
// the difference table of a(1..kmax).  `confirmed` when a zero row follows.
struct multiplicity_fit {
    long multiplicity = 0;
    int degree = 0;
    bool confirmed = false;
};
multiplicity_fit fit_multiplicity(const std::vector<long>& values);

}  // namespace symcomb
