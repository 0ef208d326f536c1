#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lorenz/braid.hpp"
#include "lorenz/laurent_poly.hpp"

namespace lorenz {

/// One census line, keyed by canonical word. Every field is a function of
/// the word.
struct AtlasRecord {
  std::string word;
  int length = 0;
  int components = 1;
  int strands = 0;
  int crossings = 0;
  std::vector<TripPair> trip;
  EarCounts ears;
  std::optional<int> genus;
  int euler_characteristic = 0;
  int braid_index = 0;
  std::optional<int> min_crossings;
  std::optional<std::pair<int, int>> torus;
  std::optional<LaurentPoly> jones;

  friend bool operator==(const AtlasRecord&, const AtlasRecord&) = default;
};

inline constexpr std::size_t kDefaultAtlasCap = 18;
inline constexpr int kMaxAtlasJonesCrossings = 24;

struct AtlasOptions {
  std::size_t max_len = 0;
  /// Attach the Jones polynomial when c <= this; negative disables.
  int jones_max_crossings = -1;
  std::size_t cap = kDefaultAtlasCap;
  /// Length shards processed concurrently; output order does not depend on it.
  int workers = 1;
};

AtlasRecord make_record(const CyclicWord& w, int jones_max_crossings = -1);

/// Single JSON line, fixed key order, no trailing newline.
std::string to_json_line(const AtlasRecord& r);

/// CSV row in the same field order as the JSON line; list-valued fields are
/// embedded as quoted JSON.
std::string to_csv_line(const AtlasRecord& r);
std::string atlas_csv_header();

/// Throws CorruptRecord on malformed input.
AtlasRecord record_from_json(std::string_view line);

/// Checks the internal relations between fields (chi = n - c, 2g = c - n + 1,
/// c_min = 2g + n_min - 1, |LR| = |RL|, c = sum p q, torus genus, ...).
/// Throws CorruptRecord naming the failed relation.
void check_record(const AtlasRecord& r);

/// Throws CapExceeded for max_len > cap or an oversized Jones threshold,
/// IOError if the stream fails.
void atlas_build(const AtlasOptions& opts, std::ostream& out);
std::vector<AtlasRecord> atlas_records(const AtlasOptions& opts);

/// Conjunction of clauses `field op value`, separated by ',' or '&&'.
/// Operators: = == != < <= > >= (also the symbols for <= and >=). Values:
/// integers, null, words, or [p,q] for torus/trip. Empty text matches all.
class AtlasFilter {
public:
  static AtlasFilter parse(std::string_view text);

  bool matches(const AtlasRecord& r) const;
  std::size_t clause_count() const noexcept { return clauses_.size(); }

  struct Clause {
    std::string field;
    std::string op;
    std::string value;
  };

private:
  std::vector<Clause> clauses_;
};

/// Streams matching records from a JSON-lines atlas, checking each record
/// on load. Throws CorruptRecord, IOError.
std::vector<AtlasRecord> atlas_query(std::istream& in, const AtlasFilter& filter);

}  // namespace lorenz
