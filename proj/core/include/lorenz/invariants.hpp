#pragma once

#include <optional>
#include <utility>

#include "lorenz/braid.hpp"

namespace lorenz {

/// Knot invariants read off a Lorenz braid.
///
/// The closure of a positive braid on n strands with c crossings bounds a
/// fibre surface of Euler characteristic n - c, so for a knot
/// 2g = c - n + 1. In terms of the trip parameters this is
/// 2g = sum q_i (p_i - 1) - |R| + 1. For Lorenz knots the braid index is the
/// trip number min(|LR|, |RL|) and the crossing number is attained at minimal
/// braid index, giving c_min = 2g + n_min - 1.
///
/// Variants with the crossing/strand signs reversed (2g = n + 1 - c,
/// c_min = sum q_i (p_i - 1) - |LL| - |RR|, ...) fail on the trefoil.
struct InvariantRecord {
  int components = 0;
  int strands = 0;
  int crossings = 0;
  int euler_characteristic = 0;
  std::optional<int> genus;         // knots only
  int braid_index = 0;
  std::optional<int> min_crossings; // knots only
  std::optional<std::pair<int, int>> torus;
};

/// Throws NotAKnot for links, ParityError if c - n + 1 is odd.
int genus(const LorenzBraid& b);

/// Same value as genus(), evaluated from trip parameters and band sizes.
int genus_from_trip(const LorenzBraid& b);

int euler_characteristic(const LorenzBraid& b);

/// min(|LR|, |RL|), or 1 when the link lives in a single ear.
int braid_index(const LorenzBraid& b);

/// 2g + n_min - 1; zero for the unknot.
int min_crossings(const LorenzBraid& b);

/// (p, q) when every overcrossing strand has the same displacement p. This
/// is a sufficient test only.
std::optional<std::pair<int, int>> is_torus(const LorenzBraid& b);

InvariantRecord invariant_record(const LorenzBraid& b);

}  // namespace lorenz
