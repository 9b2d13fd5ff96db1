#pragma once

#include <gmpxx.h>

#include <vector>

#include "symcomb/errors.hpp"

namespace symcomb {

/// Weakly decreasing positive parts.  Height convention: ht = first part.
using partition = std::vector<int>;

long partition_size(const partition& p);
void validate_partition(const partition& p);
partition transpose(const partition& p);
bool diagram_contains(const partition& inner, const partition& outer);  // inner subseteq outer

/// Pair (gamma | lambda) with |gamma| = |lambda|.
struct bi_diagram {
    partition gamma;
    partition lambda;
    bool operator==(const bi_diagram& o) const = default;
    bool operator<(const bi_diagram& o) const;
    bool symmetric() const { return gamma == lambda; }
};

struct minors_params {
    int m = 0, n = 0, t = 0;  // 1 <= t <= m <= n
};
void validate_params(const minors_params& p);

// t | |lambda| and at most |lambda|/t parts.
bool is_admissible(const partition& lam, int t);
// |lambda| = t*d with at most d parts.
bool is_d_admissible(const partition& lam, int t, long d);

std::vector<partition> partitions_of(long size, int max_parts);

// All (d-1)-admissible lam' with lam' subseteq lam subseteq lam'(t),
// where lam'(t) = (lam'_1 + t, lam'_1, lam'_2, ...).
std::vector<partition> predecessors(const partition& lam, int t);

// Closed-form uniqueness (rectangle, or two-step hook with d parts) checked
// against the enumeration; disagreement signals an implementation bug.
bool has_unique_predecessor(const partition& lam, int t);

// Multiplicity of (gamma|lambda) in the degree-d tensor power, by the
// predecessor recursion with memoization.
mpz_class multiplicity_n(const bi_diagram& bi, int t);

// Dimension of the Schur module attached to lam for a space of dimension
// dim_v (zero when the first part exceeds dim_v).  Computed by the
// hook-content product on the transpose diagram.
mpz_class dim_schur(const partition& lam, int dim_v);
// Independent oracle: fillings with rows strictly increasing and columns
// weakly increasing, entries in [dim_v].
mpz_class dim_schur_tableaux(const partition& lam, int dim_v);

// Hilbert function of the algebra of t-minors in (renormalized) degree d.
mpz_class hf_at(const minors_params& p, long d);
// Oracle: distinct monomials that factor into diagonal initial terms of
// minors with d-admissible shape.  Feasible for t*d up to ~12.
mpz_class hf_at_oracle(const minors_params& p, long d);

// Sum over d-admissible bi-diagrams of n(gamma,lambda) * dim * dim; equals
// (C(m,t)*C(n,t))^d.
mpz_class tensor_power_dimension(const minors_params& p, long d);
mpz_class bidiagram_dimension_sum(const minors_params& p, long d);

struct regularity_result {
    int case_id = 1;  // 1 or 2
    long k0 = 0;      // case 2 only
    long a_invariant = 0;
    long reg = 0;
};
regularity_result regularity_and_a_invariant(const minors_params& p);

// Max degree of a minimal generator of the initial algebra: m-2 iff
// gcd(m-1, t-1) = 1, else m-1.
int sagbi_degree_bound(int m, int t);

struct relation_bounds {
    int colbound = 0;  // a minimal relation lives in an m x (m+t) matrix
    long degbound = 0;
};
relation_bounds relation_degree_bounds(const minors_params& p);

// The cubic minimal-relation bi-diagrams whose heights fit into (m, n).
std::vector<bi_diagram> shape_relations(const minors_params& p);

struct identity_classification {
    bool is_identity = false;
    bool is_homogeneous = false;
    bool is_primitive = false;
    bool is_homogeneous_primitive = false;
};
identity_classification partition_identity(const std::vector<int>& a, const std::vector<int>& b,
                                           int q);
// Homogeneous primitive identities a_1+...+a_k = t+...+t with entries in [q].
std::vector<std::vector<int>> enumerate_hpi(int q, int t, int k);

// Exact evaluation of the degree-3 determinantal relation (and the Plucker
// combination for t = 2) on an integer matrix.
bool verify_det_relations(int t, const std::vector<std::vector<long>>& matrix);

}  // namespace symcomb
