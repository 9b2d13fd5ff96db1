#pragma once

#include <stdexcept>
#include <string>

namespace symcomb {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define SYMCOMB_ERROR(name)                                          \
    struct name : error {                                            \
        explicit name(const std::string& what) : error(what) {}      \
    }

SYMCOMB_ERROR(empty_input);
SYMCOMB_ERROR(vertex_out_of_range);
SYMCOMB_ERROR(dual_has_empty_facet);
SYMCOMB_ERROR(comparable_primes);
SYMCOMB_ERROR(ambient_mismatch);
SYMCOMB_ERROR(nonpositive_k);
SYMCOMB_ERROR(not_square_free);
SYMCOMB_ERROR(unit_ideal);
SYMCOMB_ERROR(not_a_cover);
SYMCOMB_ERROR(not_matroid);
SYMCOMB_ERROR(not_good_weighted);
SYMCOMB_ERROR(sum_mismatch);
SYMCOMB_ERROR(insufficient_data);
SYMCOMB_ERROR(hypothesis_violation);
SYMCOMB_ERROR(not_admissible);
SYMCOMB_ERROR(classification_mismatch);
SYMCOMB_ERROR(out_of_range);
SYMCOMB_ERROR(matrix_too_small);
SYMCOMB_ERROR(oracle_too_large);
SYMCOMB_ERROR(resource_guard);
SYMCOMB_ERROR(degree_cap_exceeded);
SYMCOMB_ERROR(parse_error);
SYMCOMB_ERROR(exponent_overflow);

#undef SYMCOMB_ERROR

}  // namespace symcomb
