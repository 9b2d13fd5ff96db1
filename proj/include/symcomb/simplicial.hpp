#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symcomb/errors.hpp"

namespace symcomb {

// Vertices are 1-based externally; a subset of [n] is stored as a bitmask
// with bit i-1 standing for vertex i.  n <= 64.
using vertex_set = std::uint64_t;

vertex_set set_of(const std::vector<int>& vertices, int n);
std::vector<int> vertices_of(vertex_set s);
inline int set_size(vertex_set s) { return __builtin_popcountll(s); }

// Compares two subsets as sorted vertex sequences.
bool vertex_lex_less(vertex_set a, vertex_set b);

/// Simplicial complex on [n], identified with its facet list.
/// Facets are pairwise incomparable and kept in lexicographic order, so
/// equality of complexes is structural equality.
class simplicial_complex {
  public:
    // Normalizes an arbitrary generating family: inclusion-maximal members
    // become the facets, the rest are dropped.
    static simplicial_complex from_facets(int n, const std::vector<std::vector<int>>& sets);
    static simplicial_complex from_masks(int n, std::vector<vertex_set> sets);

    int n() const { return n_; }
    const std::vector<vertex_set>& facets() const { return facets_; }
    std::vector<std::vector<int>> facet_vertices() const;

    int dimension() const;
    bool is_pure() const;

    bool operator==(const simplicial_complex& o) const = default;

  private:
    simplicial_complex(int n, std::vector<vertex_set> facets)
        : n_(n), facets_(std::move(facets)) {}
    int n_ = 0;
    std::vector<vertex_set> facets_;
};

/// A triple (F, G, i) violating the exchange axiom.
struct facet_witness {
    vertex_set facet_f = 0;
    vertex_set facet_g = 0;
    int element_i = 0;  // 1-based, element of facet_f
};

struct matroid_check {
    bool holds = false;
    std::optional<facet_witness> witness;  // set iff !holds
};

// Basis exchange: for all facets F, G and i in F there is j in G with
// (F \ {i}) u {j} a facet.  The witness returned on failure is the first
// violation in (F, i, G) iteration order over the canonical facet list.
matroid_check is_matroid(const simplicial_complex& cx);

// Symmetric exchange: additionally (G \ {j}) u {i} must be a facet.
matroid_check symmetric_exchange_holds(const simplicial_complex& cx);

// Facets are the complements [n] \ F, re-maximalized.  For pure input no
// dropping occurs and dual(dual(cx)) == cx.
simplicial_complex dual(const simplicial_complex& cx);

// Every pair of facets joined by a chain of single-element swaps.
bool is_strongly_connected(const simplicial_complex& cx);

// Largest r such that the union of the coordinate subspaces V(p_A) is
// r-connected, measured on the punctured spectrum: the pairwise
// intersection V(p_{A u B}) counts as empty when A u B = [n].  A single
// prime is irreducible and yields its dimension n - |A|.  Returns -1 when
// the components are already disconnected at r = 0.
int connectivity_degree(const std::vector<std::vector<int>>& primes, int n);
int connectivity_degree_masks(const std::vector<vertex_set>& primes, int n);

}  // namespace symcomb
