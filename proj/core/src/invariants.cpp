#include "lorenz/invariants.hpp"

#include <algorithm>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

void require_knot(const LorenzBraid& b, const char* what)
{
  if (b.component_count() != 1)
    throw Error(ErrorKind::NotAKnot, std::string(what) + " needs a knot, got " +
                                         std::to_string(b.component_count()) + " components");
}

int half_or_throw(int twice)
{
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::ParityError, "2g = " + std::to_string(twice) + " is not a non-negative even number");
  return twice / 2;
}

}  // namespace

int genus(const LorenzBraid& b)
{
  require_knot(b, "genus");
  const auto prof = strand_profile(b);
  return half_or_throw(prof.crossings - b.strands() + 1);
}

int genus_from_trip(const LorenzBraid& b)
{
  require_knot(b, "genus");
  int sum = 0;
  for (const auto& tp : strand_profile(b).trip)
    sum += tp.multiplicity * (tp.displacement - 1);
  // fixed left strands (word L) count towards |L| but not the trip
  int fixed_left = 0;
  for (const auto& m : b.strand_meta())
    if (m.over && m.displacement == 0)
      ++fixed_left;
  return half_or_throw(sum - fixed_left - b.right_count() + 1);
}

int euler_characteristic(const LorenzBraid& b)
{
  return b.strands() - strand_profile(b).crossings;
}

int braid_index(const LorenzBraid& b)
{
  const auto counts = strand_profile(b).counts;
  const int trip = std::min(counts.lr, counts.rl);
  return trip == 0 ? 1 : trip;
}

int min_crossings(const LorenzBraid& b)
{
  require_knot(b, "crossing number");
  const int g = genus(b);
  if (g == 0)
    return 0;
  return 2 * g + braid_index(b) - 1;
}

std::optional<std::pair<int, int>> is_torus(const LorenzBraid& b)
{
  const auto prof = strand_profile(b);
  if (prof.trip.size() != 1)
    return std::nullopt;
  return std::pair{prof.trip.front().displacement, prof.trip.front().multiplicity};
}

InvariantRecord invariant_record(const LorenzBraid& b)
{
  const auto prof = strand_profile(b);
  InvariantRecord rec;
  rec.components = b.component_count();
  rec.strands = b.strands();
  rec.crossings = prof.crossings;
  rec.euler_characteristic = b.strands() - prof.crossings;
  rec.braid_index = braid_index(b);
  rec.torus = is_torus(b);
  if (rec.components == 1) {
    rec.genus = genus(b);
    rec.min_crossings = min_crossings(b);
  }
  return rec;
}

}  // namespace lorenz
