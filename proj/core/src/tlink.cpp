#include "lorenz/tlink.hpp"

#include "lorenz/error.hpp"

namespace lorenz {

TLinkParams::TLinkParams(std::vector<TripPair> pairs) : pairs_(std::move(pairs))
{
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& tp = pairs_[i];
    if (tp.displacement < 1 || tp.multiplicity < 1)
      throw Error(ErrorKind::InvalidParams, "parameters must be positive");
    if (i > 0 && tp.displacement <= pairs_[i - 1].displacement)
      throw Error(ErrorKind::InvalidParams, "displacements must be strictly increasing");
  }
}

bool TLinkParams::is_reduced() const noexcept
{
  if (pairs_.empty())
    return false;
  if (pairs_.front().displacement < 2)
    return false;
  return pairs_.size() == 1 || pairs_.back().multiplicity >= 2;
}

int TLinkParams::total_multiplicity() const noexcept
{
  int total = 0;
  for (const auto& tp : pairs_)
    total += tp.multiplicity;
  return total;
}

BraidWord t_braid_word(const TLinkParams& t)
{
  BraidWord word;
  word.strands = t.max_displacement();
  for (const auto& tp : t.pairs()) {
    for (int rep = 0; rep < tp.multiplicity; ++rep)
      for (int g = 1; g < tp.displacement; ++g)
        word.generators.push_back(g);
  }
  return word;
}

LorenzBraid to_lorenz(const TLinkParams& t)
{
  if (t.empty())
    return LorenzBraid({1}, 0);

  const int left = t.total_multiplicity();
  const int n = left + t.max_displacement();
  std::vector<int> targets;
  targets.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& tp : t.pairs()) {
    for (int rep = 0; rep < tp.multiplicity; ++rep) {
      const int start = static_cast<int>(targets.size()) + 1;
      const int end = start + tp.displacement;
      targets.push_back(end);
      used[static_cast<std::size_t>(end)] = true;
    }
  }
  // under-strands take the unused end positions in order
  for (int end = 1; end <= n; ++end) {
    if (used[static_cast<std::size_t>(end)])
      continue;
    const int start = static_cast<int>(targets.size()) + 1;
    if (end >= start)
      throw Error(ErrorKind::Infeasible, "under-strand " + std::to_string(start) + " cannot move left");
    targets.push_back(end);
  }
  if (static_cast<int>(targets.size()) != n)
    throw Error(ErrorKind::Infeasible, "displacements do not complete to a permutation");
  return LorenzBraid(std::move(targets), left);
}

TLinkParams from_lorenz(const LorenzBraid& b)
{
  return TLinkParams(strand_profile(b).trip);
}

}  // namespace lorenz
