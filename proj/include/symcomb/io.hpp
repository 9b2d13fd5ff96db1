#pragma once

#include <string>

#include <json.hpp>

#include "symcomb/covers.hpp"
#include "symcomb/groebner.hpp"
#include "symcomb/homalg.hpp"
#include "symcomb/monomial.hpp"
#include "symcomb/simplicial.hpp"

namespace symcomb::io {

using json = nlohmann::ordered_json;

// {"n": 6, "facets": [[1,2],[2,3],...]}  (1-based vertices, emitted sorted)
json complex_to_json(const simplicial_complex& cx);
simplicial_complex complex_from_json(const json& j);

// {"n": 3, "gens": [[2,0,1],...]}  (exponent vectors)
json ideal_to_json(const monomial_ideal& a);
monomial_ideal ideal_from_json(const json& j);

// {"complex": {...}, "weights": [[facet-index, w], ...]}  (0-based index
// into the canonical facet order)
json weighted_to_json(const weighted_complex& wc);
weighted_complex weighted_from_json(const json& j);

json betti_to_json(const betti_table& bt);

// x1^2*x3  (multiplication by '*', powers by '^'; "1" for the empty monomial)
std::string monomial_to_text(const monomial& m);
monomial monomial_from_text(const std::string& s, int ambient_n);

// terms c*x1^a1*...*xn^an joined by + and -, rationals as p/q
std::string polynomial_to_text(const polynomial& f);
polynomial polynomial_from_text(const std::string& s, int ambient_n, const term_order& order);

// one polynomial per nonempty line
std::vector<polynomial> ideal_file_from_text(const std::string& text, int ambient_n,
                                             const term_order& order);

json load_json_file(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace symcomb::io
