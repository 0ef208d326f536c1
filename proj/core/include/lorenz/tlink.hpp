#pragma once

#include <vector>

#include "lorenz/braid.hpp"

namespace lorenz {

/// Parameters ((p_1,q_1),...,(p_k,q_k)) shared by Lorenz braids (p = strand
/// displacement, q = multiplicity) and T-links (torus blocks on p strands,
/// repeated q times).
///
/// Structural rule: 1 <= p_1 < p_2 < ... < p_k and every q_i >= 1. The empty
/// list is the one-strand trivial braid. is_reduced() additionally checks the
/// usual normalization p_1 >= 2 and q_k >= 2 (a single pair is exempt from
/// the q_k rule).
class TLinkParams {
public:
  TLinkParams() = default;
  /// Throws InvalidParams.
  explicit TLinkParams(std::vector<TripPair> pairs);

  const std::vector<TripPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool is_reduced() const noexcept;
  int max_displacement() const noexcept { return pairs_.empty() ? 1 : pairs_.back().displacement; }
  int total_multiplicity() const noexcept;

  friend bool operator==(const TLinkParams&, const TLinkParams&) = default;

private:
  std::vector<TripPair> pairs_;
};

/// Generator indices with the strand count they act on.
struct BraidWord {
  int strands = 1;
  std::vector<int> generators;
};

/// (s_1 ... s_{p_1-1})^{q_1} ... (s_1 ... s_{p_k-1})^{q_k} on p_k strands.
BraidWord t_braid_word(const TLinkParams& t);

/// Lorenz braid with q_i overcrossing strands of displacement p_i, laid out
/// left to right by increasing displacement, under-strands completing the
/// permutation order-preservingly. Throws Infeasible if no such braid exists.
LorenzBraid to_lorenz(const TLinkParams& t);

TLinkParams from_lorenz(const LorenzBraid& b);

}  // namespace lorenz
