#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lorenz/words.hpp"

namespace lorenz {

/// Which template lobe a strand leaves from and which it enters.
enum class EarType { LL, LR, RL, RR };

std::string to_string(EarType t);

struct StrandMeta {
  int component = 0;
  EarType ear = EarType::LL;
  bool over = false;     // starts in the left band
  int displacement = 0;  // target - start
};

/// One group of overcrossing strands: `multiplicity` strands, each moving
/// `displacement` positions to the right.
struct TripPair {
  int displacement = 0;
  int multiplicity = 0;

  friend bool operator==(const TripPair&, const TripPair&) = default;
};

struct EarCounts {
  int ll = 0;
  int lr = 0;
  int rl = 0;
  int rr = 0;

  friend bool operator==(const EarCounts&, const EarCounts&) = default;
};

struct StrandProfile {
  EarCounts counts;
  std::vector<TripPair> trip;  // strictly increasing displacement
  int crossings = 0;
};

/// Positive permutation braid carried by the Lorenz braid template.
///
/// Strands are numbered 1..n by start position. The first `left_count()`
/// strands start in the left band and move right (overcrossing); the rest move
/// left (undercrossing). Both blocks map order-preservingly onto their targets.
class LorenzBraid {
public:
  /// Builds and validates a braid from a 1-indexed target permutation.
  /// `components` may be empty, in which case labels come from the cycles.
  LorenzBraid(std::vector<int> targets, int left_count, std::vector<int> components = {});

  int strands() const noexcept { return static_cast<int>(targets_.size()); }
  int left_count() const noexcept { return left_count_; }
  int right_count() const noexcept { return strands() - left_count_; }
  int component_count() const noexcept { return component_count_; }

  /// targets()[i-1] is the end position of the strand starting at i.
  std::span<const int> targets() const noexcept { return targets_; }
  int target(int start) const { return targets_.at(static_cast<std::size_t>(start - 1)); }

  std::span<const StrandMeta> strand_meta() const noexcept { return meta_; }
  const StrandMeta& meta(int start) const { return meta_.at(static_cast<std::size_t>(start - 1)); }

  /// Cycle of start positions for each component, beginning at its smallest position.
  std::vector<std::vector<int>> cycles() const;

  /// The itinerary of each component read off the closed braid.
  std::vector<CyclicWord> component_words() const;

  friend bool operator==(const LorenzBraid& a, const LorenzBraid& b)
  {
    return a.targets_ == b.targets_ && a.left_count_ == b.left_count_;
  }

private:
  std::vector<int> targets_;
  int left_count_ = 0;
  int component_count_ = 0;
  std::vector<StrandMeta> meta_;
};

/// Crossing in the emitted positive braid word: sigma_{generator}, with strand
/// ids given by start position.
struct CrossingRecord {
  int generator = 0;
  int over_strand = 0;
  int under_strand = 0;

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

/// Sort every rotation of every word by infinite-extension order; the strand
/// at the rank of rotation r ends at the rank of r shifted by one letter.
LorenzBraid braid_of_words(const LinkWords& link);

/// Rank sequence of the successive rotations of a single word (1-indexed),
/// i.e. the cyclic order in which the closed orbit visits the branch line.
std::vector<int> rotation_ranks(const LinkWords& link, std::size_t component);

StrandProfile strand_profile(const LorenzBraid& b);

/// Positive permutation braid word realizing the braid: over-strands are
/// swept to their targets starting from the rightmost one, so each pair of
/// strands crosses at most once.
std::vector<CrossingRecord> braid_generators(const LorenzBraid& b);

/// Generator indices only.
std::vector<int> generator_word(std::span<const CrossingRecord> records);

std::int64_t inversion_count(std::span<const int> permutation);

/// Symmetric matrix of pairwise linking numbers, diagonal zero. All template
/// crossings count +1.
std::vector<std::vector<std::int64_t>> linking_matrix(const LorenzBraid& b);

}  // namespace lorenz
