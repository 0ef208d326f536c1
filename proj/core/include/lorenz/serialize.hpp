#pragma once

#include <string>
#include <string_view>

#include "lorenz/braid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/laurent_poly.hpp"
#include "lorenz/modular.hpp"
#include "lorenz/tlink.hpp"

// Wire forms. Words travel as their canonical uppercase strings; everything
// else is compact JSON.
namespace lorenz {

/// {"n":..,"targets":[..],"components":[..],"types":["LL",..],"trip":[[p,q],..]}
std::string to_json(const LorenzBraid& b);

/// [[p,q],...]
std::string to_json(const TLinkParams& t);

/// Sorted [[quarter_exponent, coefficient],...]
std::string to_json(const LaurentPoly& p);

/// [[a,b],[c,d]]
std::string to_json(const Mat2Z& m);

/// Accepts "[[2,3],[4,4]]", "((2,3),(4,4))" or "2,3;4,4". Throws InvalidParams.
TLinkParams parse_tlink(std::string_view text);

/// Accepts "[[a,b],[c,d]]" or "a,b,c,d". Throws InvalidParams.
Mat2Z parse_matrix(std::string_view text);

LaurentPoly parse_poly(std::string_view json);

/// Full report for a word family: ranks, permutation, band split, trip,
/// ear counts, invariants and (for links) the linking matrix.
std::string word_info_json(const LinkWords& link);

}  // namespace lorenz
