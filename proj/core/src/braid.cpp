#include "lorenz/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

std::string to_string(EarType t)
{
  switch (t) {
  case EarType::LL: return "LL";
  case EarType::LR: return "LR";
  case EarType::RL: return "RL";
  case EarType::RR: return "RR";
  }
  return "??";
}

LorenzBraid::LorenzBraid(std::vector<int> targets, int left_count, std::vector<int> components)
: targets_(std::move(targets)), left_count_(left_count)
{
  const int n = strands();
  if (n == 0)
    throw Error(ErrorKind::InvalidParams, "braid needs at least one strand");
  if (left_count_ < 0 || left_count_ > n)
    throw Error(ErrorKind::InvalidParams, "left band size out of range");

  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int t : targets_) {
    if (t < 1 || t > n || hit[static_cast<std::size_t>(t)])
      throw Error(ErrorKind::InvalidParams, "targets are not a permutation of 1..n");
    hit[static_cast<std::size_t>(t)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    const int t = targets_[static_cast<std::size_t>(i - 1)];
    const bool over = i <= left_count_;
    if (over ? t < i : t > i)
      throw Error(ErrorKind::InvalidParams, "strand " + std::to_string(i) + " moves the wrong way");
    const bool first_in_block = (i == 1) || (i == left_count_ + 1);
    if (!first_in_block && t <= targets_[static_cast<std::size_t>(i - 2)])
      throw Error(ErrorKind::InvalidParams, "band targets are not order-preserving");
  }

  if (components.empty()) {
    components.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
      if (components[static_cast<std::size_t>(i - 1)] != -1)
        continue;
      int j = i;
      do {
        components[static_cast<std::size_t>(j - 1)] = next;
        j = targets_[static_cast<std::size_t>(j - 1)];
      } while (j != i);
      ++next;
    }
  } else if (static_cast<int>(components.size()) != n) {
    throw Error(ErrorKind::InvalidParams, "component labels do not match strand count");
  }

  component_count_ = 0;
  meta_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& m = meta_[static_cast<std::size_t>(i - 1)];
    const int t = targets_[static_cast<std::size_t>(i - 1)];
    m.component = components[static_cast<std::size_t>(i - 1)];
    m.over = i <= left_count_;
    m.displacement = t - i;
    const bool ends_left = t <= left_count_;
    m.ear = m.over ? (ends_left ? EarType::LL : EarType::LR) : (ends_left ? EarType::RL : EarType::RR);
    if (m.component < 0)
      throw Error(ErrorKind::InvalidParams, "negative component label");
    component_count_ = std::max(component_count_, m.component + 1);
    // a strand and its successor on the closed braid belong to one component
    if (components[static_cast<std::size_t>(t - 1)] != m.component)
      throw Error(ErrorKind::InvalidParams, "component labels split a permutation cycle");
  }
}

std::vector<std::vector<int>> LorenzBraid::cycles() const
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(targets_.size() + 1, false);
  for (int i = 1; i <= strands(); ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    std::vector<int> cycle;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
      j = target(j);
    } while (j != i);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<CyclicWord> LorenzBraid::component_words() const
{
  std::vector<CyclicWord> out;
  for (const auto& cycle : cycles()) {
    std::string letters;
    for (int pos : cycle)
      letters.push_back(pos <= left_count_ ? 'L' : 'R');
    out.push_back(CyclicWord::canonicalize(letters));
  }
  return out;
}

namespace {

struct Rotation {
  std::string letters;
  std::size_t component;
  std::size_t offset;
};

std::vector<Rotation> sorted_rotations(const LinkWords& link)
{
  std::vector<Rotation> rots;
  for (std::size_t c = 0; c < link.words.size(); ++c) {
    const auto& w = link.words[c];
    for (std::size_t k = 0; k < w.size(); ++k)
      rots.push_back({w.rotation(k), c, k});
  }
  std::sort(rots.begin(), rots.end(), [](const Rotation& a, const Rotation& b) {
    return precedes_infinite(a.letters, b.letters);
  });
  return rots;
}

}  // namespace

LorenzBraid braid_of_words(const LinkWords& link)
{
  const auto rots = sorted_rotations(link);
  std::map<std::pair<std::size_t, std::size_t>, int> rank;
  int left = 0;
  for (std::size_t r = 0; r < rots.size(); ++r) {
    rank[{rots[r].component, rots[r].offset}] = static_cast<int>(r) + 1;
    if (rots[r].letters.front() == 'L')
      ++left;
  }

  std::vector<int> targets(rots.size());
  std::vector<int> components(rots.size());
  for (std::size_t r = 0; r < rots.size(); ++r) {
    const auto& rot = rots[r];
    const std::size_t len = link.words[rot.component].size();
    targets[r] = rank.at({rot.component, (rot.offset + 1) % len});
    components[r] = static_cast<int>(rot.component);
  }
  return LorenzBraid(std::move(targets), left, std::move(components));
}

std::vector<int> rotation_ranks(const LinkWords& link, std::size_t component)
{
  const auto rots = sorted_rotations(link);
  std::vector<int> ranks(link.words.at(component).size());
  for (std::size_t r = 0; r < rots.size(); ++r) {
    if (rots[r].component == component)
      ranks[rots[r].offset] = static_cast<int>(r) + 1;
  }
  return ranks;
}

StrandProfile strand_profile(const LorenzBraid& b)
{
  StrandProfile prof;
  for (const auto& m : b.strand_meta()) {
    switch (m.ear) {
    case EarType::LL: ++prof.counts.ll; break;
    case EarType::LR: ++prof.counts.lr; break;
    case EarType::RL: ++prof.counts.rl; break;
    case EarType::RR: ++prof.counts.rr; break;
    }
    // fixed left strands (the ear-boundary word L) carry no crossings
    if (!m.over || m.displacement == 0)
      continue;
    if (!prof.trip.empty() && prof.trip.back().displacement == m.displacement)
      ++prof.trip.back().multiplicity;
    else
      prof.trip.push_back({m.displacement, 1});
    prof.crossings += m.displacement;
  }
  return prof;
}

std::vector<CrossingRecord> braid_generators(const LorenzBraid& b)
{
  std::vector<CrossingRecord> records;
  // arrangement[p] = id of the strand currently at position p+1
  std::vector<int> arrangement(static_cast<std::size_t>(b.strands()));
  std::iota(arrangement.begin(), arrangement.end(), 1);

  for (int s = b.left_count(); s >= 1; --s) {
    int pos = s;  // over-strands to the right of s are already placed further right
    while (pos < b.target(s)) {
      const int under = arrangement[static_cast<std::size_t>(pos)];
      records.push_back({pos, s, under});
      std::swap(arrangement[static_cast<std::size_t>(pos - 1)], arrangement[static_cast<std::size_t>(pos)]);
      ++pos;
    }
  }
  return records;
}

std::vector<int> generator_word(std::span<const CrossingRecord> records)
{
  std::vector<int> word;
  word.reserve(records.size());
  for (const auto& r : records)
    word.push_back(r.generator);
  return word;
}

std::int64_t inversion_count(std::span<const int> permutation)
{
  std::int64_t count = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i)
    for (std::size_t j = i + 1; j < permutation.size(); ++j)
      if (permutation[i] > permutation[j])
        ++count;
  return count;
}

std::vector<std::vector<std::int64_t>> linking_matrix(const LorenzBraid& b)
{
  const auto mu = static_cast<std::size_t>(b.component_count());
  std::vector<std::vector<std::int64_t>> total(mu, std::vector<std::int64_t>(mu, 0));
  std::vector<std::vector<std::int64_t>> over(mu, std::vector<std::int64_t>(mu, 0));

  for (const auto& rec : braid_generators(b)) {
    const auto a = static_cast<std::size_t>(b.meta(rec.over_strand).component);
    const auto c = static_cast<std::size_t>(b.meta(rec.under_strand).component);
    if (a == c)
      continue;
    ++total[a][c];
    ++total[c][a];
    ++over[a][c];
  }

  std::vector<std::vector<std::int64_t>> lk(mu, std::vector<std::int64_t>(mu, 0));
  for (std::size_t a = 0; a < mu; ++a) {
    for (std::size_t c = 0; c < mu; ++c) {
      if (a == c)
        continue;
      if (total[a][c] % 2 != 0)
        throw Error(ErrorKind::OddInterCrossings,
                    "components " + std::to_string(a) + " and " + std::to_string(c) + " cross an odd number of times");
      lk[a][c] = total[a][c] / 2;
      if (over[a][c] != lk[a][c])
        throw Error(ErrorKind::OddInterCrossings, "over-count disagrees with half the crossing count");
    }
  }
  return lk;
}

}  // namespace lorenz
