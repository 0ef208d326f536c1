#include "lorenz/atlas.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <istream>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "lorenz/error.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/jones.hpp"

namespace lorenz {

using nlohmann::ordered_json;

namespace {

ordered_json record_json(const AtlasRecord& r)
{
  ordered_json j;
  j["word"] = r.word;
  j["length"] = r.length;
  j["components"] = r.components;
  j["n"] = r.strands;
  j["c"] = r.crossings;
  ordered_json trip = ordered_json::array();
  for (const auto& tp : r.trip)
    trip.push_back({tp.displacement, tp.multiplicity});
  j["trip"] = trip;
  j["ears"] = {r.ears.ll, r.ears.lr, r.ears.rl, r.ears.rr};
  j["genus"] = r.genus ? ordered_json(*r.genus) : ordered_json(nullptr);
  j["chi"] = r.euler_characteristic;
  j["braid_index"] = r.braid_index;
  j["c_min"] = r.min_crossings ? ordered_json(*r.min_crossings) : ordered_json(nullptr);
  j["torus"] = r.torus ? ordered_json({r.torus->first, r.torus->second}) : ordered_json(nullptr);
  if (r.jones) {
    ordered_json poly = ordered_json::array();
    for (const auto& [e, c] : r.jones->pairs())
      poly.push_back({e, c});
    j["jones"] = poly;
  }
  return j;
}

[[noreturn]] void corrupt(const std::string& word, const std::string& what)
{
  throw Error(ErrorKind::CorruptRecord, "record " + word + ": " + what);
}

}  // namespace

AtlasRecord make_record(const CyclicWord& w, int jones_max_crossings)
{
  LinkWords link;
  link.words.push_back(w);
  const LorenzBraid b = braid_of_words(link);
  const auto prof = strand_profile(b);
  const auto inv = invariant_record(b);

  AtlasRecord r;
  r.word = w.str();
  r.length = static_cast<int>(w.size());
  r.components = inv.components;
  r.strands = inv.strands;
  r.crossings = inv.crossings;
  r.trip = prof.trip;
  r.ears = prof.counts;
  r.genus = inv.genus;
  r.euler_characteristic = inv.euler_characteristic;
  r.braid_index = inv.braid_index;
  r.min_crossings = inv.min_crossings;
  r.torus = inv.torus;
  if (jones_max_crossings >= 0 && prof.crossings <= jones_max_crossings)
    r.jones = jones_of_braid(braid_generators(b), b.strands(), std::max(jones_max_crossings, kDefaultCrossingLimit));
  return r;
}

std::string to_json_line(const AtlasRecord& r)
{
  return record_json(r).dump();
}

std::string atlas_csv_header()
{
  return "word,length,components,n,c,trip,ears,genus,chi,braid_index,c_min,torus,jones";
}

std::string to_csv_line(const AtlasRecord& r)
{
  const ordered_json j = record_json(r);
  std::string line;
  bool first = true;
  for (const char* key : {"word", "length", "components", "n", "c", "trip", "ears", "genus", "chi", "braid_index",
                          "c_min", "torus", "jones"}) {
    if (!first)
      line += ',';
    first = false;
    if (!j.contains(key) || j.at(key).is_null())
      continue;
    const auto& v = j.at(key);
    if (v.is_string())
      line += v.get<std::string>();
    else if (v.is_array())
      line += '"' + v.dump() + '"';
    else
      line += v.dump();
  }
  return line;
}

AtlasRecord record_from_json(std::string_view line)
{
  AtlasRecord r;
  try {
    const auto j = ordered_json::parse(line);
    r.word = j.at("word").get<std::string>();
    r.length = j.at("length").get<int>();
    r.components = j.at("components").get<int>();
    r.strands = j.at("n").get<int>();
    r.crossings = j.at("c").get<int>();
    for (const auto& tp : j.at("trip"))
      r.trip.push_back({tp.at(0).get<int>(), tp.at(1).get<int>()});
    const auto& ears = j.at("ears");
    if (ears.size() != 4)
      corrupt(r.word, "ears must have four entries");
    r.ears = {ears[0].get<int>(), ears[1].get<int>(), ears[2].get<int>(), ears[3].get<int>()};
    if (!j.at("genus").is_null())
      r.genus = j.at("genus").get<int>();
    r.euler_characteristic = j.at("chi").get<int>();
    r.braid_index = j.at("braid_index").get<int>();
    if (!j.at("c_min").is_null())
      r.min_crossings = j.at("c_min").get<int>();
    if (!j.at("torus").is_null())
      r.torus = std::pair{j.at("torus").at(0).get<int>(), j.at("torus").at(1).get<int>()};
    if (j.contains("jones")) {
      std::vector<std::pair<int, LaurentPoly::Coeff>> pairs;
      for (const auto& term : j.at("jones"))
        pairs.emplace_back(term.at(0).get<int>(), term.at(1).get<LaurentPoly::Coeff>());
      r.jones = LaurentPoly::from_pairs(pairs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CorruptRecord, std::string("malformed atlas line: ") + e.what());
  }
  return r;
}

void check_record(const AtlasRecord& r)
{
  if (r.length != static_cast<int>(r.word.size()))
    corrupt(r.word, "length does not match word");
  if (r.strands != r.length)
    corrupt(r.word, "strand count differs from word length");
  if (r.euler_characteristic != r.strands - r.crossings)
    corrupt(r.word, "chi != n - c");
  int trip_crossings = 0;
  for (std::size_t i = 0; i < r.trip.size(); ++i) {
    trip_crossings += r.trip[i].displacement * r.trip[i].multiplicity;
    if (i > 0 && r.trip[i].displacement <= r.trip[i - 1].displacement)
      corrupt(r.word, "trip displacements not increasing");
  }
  if (trip_crossings != r.crossings)
    corrupt(r.word, "c != sum p q");
  if (r.ears.lr != r.ears.rl)
    corrupt(r.word, "|LR| != |RL|");
  if (r.ears.ll + r.ears.lr + r.ears.rl + r.ears.rr != r.strands)
    corrupt(r.word, "ear counts do not sum to n");
  const int trip_number = std::min(r.ears.lr, r.ears.rl);
  if (r.braid_index != (trip_number == 0 ? 1 : trip_number))
    corrupt(r.word, "braid index is not the trip number");
  if (r.components == 1) {
    if (!r.genus || !r.min_crossings)
      corrupt(r.word, "knot record without genus or crossing number");
    if (2 * *r.genus != r.crossings - r.strands + 1)
      corrupt(r.word, "2g != c - n + 1");
    const int expected_cmin = *r.genus == 0 ? 0 : 2 * *r.genus + r.braid_index - 1;
    if (*r.min_crossings != expected_cmin)
      corrupt(r.word, "c_min != 2g + n_min - 1");
  }
  if (r.torus) {
    if (r.trip.size() != 1 || r.trip.front().displacement != r.torus->first ||
        r.trip.front().multiplicity != r.torus->second)
      corrupt(r.word, "torus pair disagrees with trip");
    if (r.genus && 2 * *r.genus != (r.torus->first - 1) * (r.torus->second - 1))
      corrupt(r.word, "torus genus mismatch");
  } else if (r.trip.size() == 1) {
    corrupt(r.word, "single trip pair but no torus pair");
  }
}

std::vector<AtlasRecord> atlas_records(const AtlasOptions& opts)
{
  if (opts.max_len > opts.cap)
    throw Error(ErrorKind::CapExceeded, "max length " + std::to_string(opts.max_len) + " exceeds cap " +
                                            std::to_string(opts.cap));
  if (opts.jones_max_crossings > kMaxAtlasJonesCrossings)
    throw Error(ErrorKind::CapExceeded, "Jones threshold above " + std::to_string(kMaxAtlasJonesCrossings));

  std::vector<std::vector<AtlasRecord>> shards(opts.max_len);
  auto build_shard = [&](std::size_t len) {
    auto& shard = shards[len - 1];
    for (const auto& w : enumerate_length(len))
      shard.push_back(make_record(w, opts.jones_max_crossings));
  };

  const auto workers = static_cast<std::size_t>(std::max(1, opts.workers));
  if (workers == 1) {
    for (std::size_t len = 1; len <= opts.max_len; ++len)
      build_shard(len);
  } else {
    // longest shards first, handed out round-robin
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (std::size_t wk = 0; wk < workers; ++wk) {
      pool.emplace_back([&, wk] {
        try {
          for (std::size_t i = wk; i < opts.max_len; i += workers)
            build_shard(opts.max_len - i);
        } catch (...) {
          failures[wk] = std::current_exception();
        }
      });
    }
    for (auto& t : pool)
      t.join();
    for (const auto& f : failures)
      if (f)
        std::rethrow_exception(f);
  }

  std::vector<AtlasRecord> out;
  for (auto& shard : shards)
    std::move(shard.begin(), shard.end(), std::back_inserter(out));
  return out;
}

void atlas_build(const AtlasOptions& opts, std::ostream& out)
{
  for (const auto& r : atlas_records(opts))
    out << to_json_line(r) << '\n';
  out.flush();
  if (!out)
    throw Error(ErrorKind::IOError, "failed writing atlas");
}

namespace {

const std::array<std::string_view, 17> kFields = {"word",  "length", "components", "n",           "c",
                                                  "trip",  "ears",   "genus",      "chi",         "braid_index",
                                                  "c_min", "torus",  "jones",      "LL",          "LR",
                                                  "RL",    "RR"};

ordered_json field_value(const ordered_json& rec, const std::string& field)
{
  static const std::array<std::string_view, 4> ears = {"LL", "LR", "RL", "RR"};
  for (std::size_t i = 0; i < ears.size(); ++i)
    if (field == ears[i])
      return rec.at("ears").at(i);
  return rec.contains(field) ? rec.at(field) : ordered_json(nullptr);
}

ordered_json parse_value(const std::string& raw)
{
  std::string text = raw;
  std::replace(text.begin(), text.end(), '(', '[');
  std::replace(text.begin(), text.end(), ')', ']');
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception&) {
    return ordered_json(raw);
  }
}

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

AtlasFilter AtlasFilter::parse(std::string_view text)
{
  std::string normalized;
  // unicode comparison signs and "&&" are accepted as aliases
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "≤") {
      normalized += "<=";
      i += 2;
    } else if (text.substr(i, 3) == "≥") {
      normalized += ">=";
      i += 2;
    } else if (text.substr(i, 2) == "&&") {
      normalized += ',';
      ++i;
    } else {
      normalized += text[i];
    }
  }

  // split on commas outside brackets
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : normalized) {
    if (ch == '[' || ch == '(')
      ++depth;
    if (ch == ']' || ch == ')')
      --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);

  AtlasFilter filter;
  for (const auto& part : parts) {
    const std::string clause = trim(part);
    if (clause.empty())
      continue;
    const auto op_pos = clause.find_first_of("=!<>");
    if (op_pos == std::string::npos || op_pos == 0)
      throw Error(ErrorKind::BadFilter, "clause '" + clause + "' has no comparison");
    std::size_t op_len = 1;
    if (op_pos + 1 < clause.size() && clause[op_pos + 1] == '=')
      op_len = 2;
    Clause c{trim(clause.substr(0, op_pos)), clause.substr(op_pos, op_len), trim(clause.substr(op_pos + op_len))};
    if (c.op == "!")
      throw Error(ErrorKind::BadFilter, "clause '" + clause + "' uses '!' without '='");
    if (c.op == "==")
      c.op = "=";
    if (std::find(kFields.begin(), kFields.end(), c.field) == kFields.end())
      throw Error(ErrorKind::BadFilter, "unknown field '" + c.field + "'");
    if (c.value.empty())
      throw Error(ErrorKind::BadFilter, "clause '" + clause + "' has no value");
    if (c.op != "=" && c.op != "!=" && !parse_value(c.value).is_number())
      throw Error(ErrorKind::BadFilter, "ordering comparison needs a number in '" + clause + "'");
    filter.clauses_.push_back(std::move(c));
  }
  return filter;
}

bool AtlasFilter::matches(const AtlasRecord& r) const
{
  if (clauses_.empty())
    return true;
  const ordered_json rec = record_json(r);
  for (const auto& c : clauses_) {
    const ordered_json lhs = field_value(rec, c.field);
    const ordered_json rhs = parse_value(c.value);
    if (c.op == "=") {
      if (lhs != rhs)
        return false;
      continue;
    }
    if (c.op == "!=") {
      if (lhs == rhs)
        return false;
      continue;
    }
    if (!lhs.is_number())
      return false;
    const double a = lhs.get<double>();
    const double b = rhs.get<double>();
    const bool ok = (c.op == "<") ? a < b : (c.op == "<=") ? a <= b : (c.op == ">") ? a > b : a >= b;
    if (!ok)
      return false;
  }
  return true;
}

std::vector<AtlasRecord> atlas_query(std::istream& in, const AtlasFilter& filter)
{
  if (!in)
    throw Error(ErrorKind::IOError, "atlas stream is not readable");
  std::vector<AtlasRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    AtlasRecord r = record_from_json(line);
    check_record(r);
    if (filter.matches(r))
      out.push_back(std::move(r));
  }
  if (in.bad())
    throw Error(ErrorKind::IOError, "read error in atlas stream");
  return out;
}

}  // namespace lorenz
