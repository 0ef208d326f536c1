#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorenz {

/// A closed orbit on the Lorenz template, named by its cyclic itinerary over
/// {L, R}. Always aperiodic and stored as its least rotation (L < R).
class CyclicWord {
public:
  /// Throws EmptyWord, InvalidLetter or PeriodicWord.
  static CyclicWord canonicalize(std::string_view raw);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  std::size_t count(char letter) const noexcept;
  bool has_both_letters() const noexcept;

  /// Rotation starting at offset k (k taken modulo size()).
  std::string rotation(std::size_t k) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
  friend std::vector<CyclicWord> enumerate_length(std::size_t length);

  explicit CyclicWord(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

inline CyclicWord canonicalize(std::string_view raw) { return CyclicWord::canonicalize(raw); }

/// A family of distinct orbits; component i is words[i].
struct LinkWords {
  std::vector<CyclicWord> words;

  std::size_t components() const noexcept { return words.size(); }
  std::size_t total_length() const noexcept;
};

/// Throws PeriodicWord, EmptyWord, InvalidLetter or DuplicateComponent.
LinkWords validate_link(std::span<const std::string> raw_words);

/// All canonical aperiodic cyclic words of length 1..max_len, sorted by
/// (length, lexicographic).
std::vector<CyclicWord> enumerate(std::size_t max_len);

/// Words of exactly the given length, lexicographic.
std::vector<CyclicWord> enumerate_length(std::size_t length);

/// Number of aperiodic necklaces of length n over two letters (Moebius sum).
std::size_t necklace_count(std::size_t n);

/// The order-2 template symmetry: swap L and R, then re-canonicalize.
CyclicWord involute(const CyclicWord& w);

/// Starting index of the least rotation of s (L < R).
std::size_t least_rotation_offset(std::string_view s);

bool is_periodic(std::string_view s);

/// Order on infinite periodic extensions: u^inf < v^inf. Decided by u+v < v+u.
bool precedes_infinite(std::string_view u, std::string_view v);

}  // namespace lorenz
