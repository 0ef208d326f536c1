#include "lorenz/serialize.hpp"

#include <cctype>
#include <climits>
#include <cstdint>

#include "json.hpp"
#include "lorenz/error.hpp"

namespace lorenz {

using nlohmann::ordered_json;

namespace {

ordered_json trip_json(const std::vector<TripPair>& trip)
{
  ordered_json arr = ordered_json::array();
  for (const auto& tp : trip)
    arr.push_back({tp.displacement, tp.multiplicity});
  return arr;
}

// All integers appearing in text, in order; '-' directly before a digit is a sign.
std::vector<long long> integers_in(std::string_view text)
{
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool neg = text[i] == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (neg || std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = neg ? i + 1 : i;
      long long v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        if (v > (LLONG_MAX - 9) / 10)
          throw Error(ErrorKind::InvalidParams, "integer too large in '" + std::string(text) + "'");
        v = v * 10 + (text[j] - '0');
        ++j;
      }
      out.push_back(neg ? -v : v);
      i = j;
      continue;
    }
    const char ch = text[i];
    if (!(std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';' || ch == '(' || ch == ')' ||
          ch == '[' || ch == ']'))
      throw Error(ErrorKind::InvalidParams, "unexpected character '" + std::string(1, ch) + "' in '" +
                                                std::string(text) + "'");
    ++i;
  }
  return out;
}

}  // namespace

std::string to_json(const LorenzBraid& b)
{
  ordered_json j;
  j["n"] = b.strands();
  j["targets"] = std::vector<int>(b.targets().begin(), b.targets().end());
  std::vector<int> components;
  std::vector<std::string> types;
  for (const auto& m : b.strand_meta()) {
    components.push_back(m.component);
    types.push_back(to_string(m.ear));
  }
  j["components"] = components;
  j["types"] = types;
  j["trip"] = trip_json(strand_profile(b).trip);
  return j.dump();
}

std::string to_json(const TLinkParams& t)
{
  return trip_json(t.pairs()).dump();
}

std::string to_json(const LaurentPoly& p)
{
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : p.pairs())
    arr.push_back({e, c});
  return arr.dump();
}

std::string to_json(const Mat2Z& m)
{
  ordered_json j = {{m.a, m.b}, {m.c, m.d}};
  return j.dump();
}

TLinkParams parse_tlink(std::string_view text)
{
  const auto ints = integers_in(text);
  if (ints.size() % 2 != 0)
    throw Error(ErrorKind::InvalidParams, "T-link parameters come in (p,q) pairs");
  std::vector<TripPair> pairs;
  for (std::size_t i = 0; i < ints.size(); i += 2) {
    if (ints[i] > INT32_MAX || ints[i + 1] > INT32_MAX)
      throw Error(ErrorKind::InvalidParams, "parameter out of range");
    pairs.push_back({static_cast<int>(ints[i]), static_cast<int>(ints[i + 1])});
  }
  return TLinkParams(std::move(pairs));
}

Mat2Z parse_matrix(std::string_view text)
{
  const auto ints = integers_in(text);
  if (ints.size() != 4)
    throw Error(ErrorKind::InvalidParams, "a matrix needs exactly four entries");
  return {ints[0], ints[1], ints[2], ints[3]};
}

LaurentPoly parse_poly(std::string_view json)
{
  try {
    const auto j = ordered_json::parse(json);
    std::vector<std::pair<int, LaurentPoly::Coeff>> pairs;
    for (const auto& term : j)
      pairs.emplace_back(term.at(0).get<int>(), term.at(1).get<LaurentPoly::Coeff>());
    return LaurentPoly::from_pairs(pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("malformed polynomial: ") + e.what());
  }
}

std::string word_info_json(const LinkWords& link)
{
  const LorenzBraid b = braid_of_words(link);
  const auto prof = strand_profile(b);
  const auto rec = invariant_record(b);

  ordered_json j;
  std::vector<std::string> words;
  for (const auto& w : link.words)
    words.push_back(w.str());
  j["words"] = words;
  j["components"] = b.component_count();
  ordered_json ranks = ordered_json::array();
  for (std::size_t c = 0; c < link.words.size(); ++c)
    ranks.push_back(rotation_ranks(link, c));
  j["rotation_ranks"] = ranks;
  j["n"] = b.strands();
  j["over"] = b.left_count();
  j["under"] = b.right_count();
  j["targets"] = std::vector<int>(b.targets().begin(), b.targets().end());
  j["trip"] = trip_json(prof.trip);
  j["c"] = prof.crossings;
  j["ears"] = {{"LL", prof.counts.ll}, {"LR", prof.counts.lr}, {"RL", prof.counts.rl}, {"RR", prof.counts.rr}};
  j["chi"] = rec.euler_characteristic;
  j["genus"] = rec.genus ? ordered_json(*rec.genus) : ordered_json(nullptr);
  j["braid_index"] = rec.braid_index;
  j["c_min"] = rec.min_crossings ? ordered_json(*rec.min_crossings) : ordered_json(nullptr);
  j["torus"] = rec.torus ? ordered_json({rec.torus->first, rec.torus->second}) : ordered_json(nullptr);
  if (b.component_count() > 1)
    j["linking"] = linking_matrix(b);
  return j.dump();
}

}  // namespace lorenz
