#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lorenz/braid.hpp"
#include "lorenz/laurent_poly.hpp"
#include "lorenz/tlink.hpp"

namespace lorenz {

inline constexpr int kDefaultCrossingLimit = 20;

/// Smoothing histogram of a closed positive braid diagram:
/// counts[(a_minus_b + c) * stride + loops] is the number of states with
/// that A-B balance and loop count.
struct BracketHistogram {
  int crossings = 0;
  int max_loops = 0;
  std::vector<std::uint64_t> counts;

  std::size_t stride() const noexcept { return static_cast<std::size_t>(max_loops) + 1; }
  BracketHistogram& operator+=(const BracketHistogram& o);
};

/// States whose first `prefix_bits` smoothing choices spell `prefix`
/// (bit k = 1 means crossing k takes the B smoothing). With prefix_bits = 0
/// this covers the whole state space. Disjoint prefixes merge by +=.
BracketHistogram bracket_histogram(const BraidWord& word, int prefix_bits = 0, std::uint64_t prefix = 0);

/// Kauffman bracket <D> in A of the closed braid diagram, normalized so that
/// the one-strand trivial closure is 1. Throws TooManyCrossings above limit.
/// `workers` > 1 partitions the state space across threads.
LaurentPoly kauffman_bracket(const BraidWord& word, int limit = kDefaultCrossingLimit, int workers = 1);
LaurentPoly kauffman_bracket(std::span<const CrossingRecord> crossings, int strands,
                             int limit = kDefaultCrossingLimit);

/// Jones polynomial in t of the closure, all crossings positive:
/// V = (-A)^(-3c) <D> with t = A^-4.
LaurentPoly jones_of_braid(const BraidWord& word, int limit = kDefaultCrossingLimit, int workers = 1);
LaurentPoly jones_of_braid(std::span<const CrossingRecord> crossings, int strands,
                           int limit = kDefaultCrossingLimit);

/// Converts a bracket in A to the writhe-normalized Jones polynomial in t.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

enum class TorusNumerator {
  Standard,  // 1 - t^(p+1) - t^(q+1) + t^(p+q)
  SignVariant, // 1 - t^(p-1) - t^(q-1) - t^(p+q); not divisible by 1 - t^2
};

LaurentPoly torus_numerator(int p, int q, TorusNumerator form = TorusNumerator::Standard);

/// t^((p-1)(q-1)/2) (numerator) / (1 - t^2). Throws NotCoprime, or
/// DivisionRemainder if the numerator is not divisible.
LaurentPoly jones_torus(int p, int q, TorusNumerator form = TorusNumerator::Standard);

/// Mirror image: t -> 1/t.
LaurentPoly mirror(const LaurentPoly& jones);

}  // namespace lorenz
