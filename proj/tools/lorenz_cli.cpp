// lorenz: command-line front end for the Lorenz link toolkit.
//
// Exit status: 0 success, 2 validation error, 3 resource cap, 4 I/O.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lorenz/atlas.hpp"
#include "lorenz/braid.hpp"
#include "lorenz/error.hpp"
#include "lorenz/flow.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/jones.hpp"
#include "lorenz/modular.hpp"
#include "lorenz/serialize.hpp"
#include "lorenz/tlink.hpp"
#include "lorenz/words.hpp"

namespace {

using nlohmann::ordered_json;
using namespace lorenz;

constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitIO = 4;

int exit_code(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::TooManyCrossings:
  case ErrorKind::CapExceeded:
  case ErrorKind::Overflow:
    return kExitResource;
  case ErrorKind::IOError:
  case ErrorKind::CorruptRecord:
    return kExitIO;
  default:
    return kExitValidation;
  }
}

bool looks_like_word(const std::string& s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == 'L' || c == 'R'; });
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const std::string& text) const
  {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f)
      throw Error(ErrorKind::IOError, "cannot open " + path + " for writing");
    f << text << '\n';
    if (!f)
      throw Error(ErrorKind::IOError, "failed writing " + path);
  }
};

std::string table(const ordered_json& j)
{
  std::ostringstream os;
  for (const auto& [key, value] : j.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  std::string s = os.str();
  if (!s.empty())
    s.pop_back();
  return s;
}

std::string render(const ordered_json& j, const std::string& format)
{
  if (format == "table")
    return table(j);
  if (format == "csv") {
    std::string header, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      const std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
      header += (first ? "" : ",") + key;
      row += (first ? "" : ",") + (cell.find(',') != std::string::npos ? '"' + cell + '"' : cell);
      first = false;
    }
    return header + "\n" + row;
  }
  return j.dump();
}

LinkWords link_of(const std::vector<std::string>& raw)
{
  return validate_link(raw);
}

ordered_json poly_json(const LaurentPoly& p, const char* var)
{
  ordered_json j;
  j["pretty"] = p.to_string(var);
  j["terms"] = ordered_json::parse(to_json(p));
  return j;
}

// ---- subcommand handlers ---------------------------------------------------

void run_word_info(const std::vector<std::string>& words, const Output& out)
{
  const auto j = ordered_json::parse(word_info_json(link_of(words)));
  out.emit(render(j, out.format));
}

void run_convert(const std::string& input, const std::string& to, const Output& out)
{
  ordered_json j;
  if (looks_like_word(input)) {
    LinkWords link = link_of({input});
    const LorenzBraid b = braid_of_words(link);
    j["input"] = link.words.front().str();
    if (to == "braid")
      j["braid"] = ordered_json::parse(to_json(b));
    else if (to == "tlink")
      j["tlink"] = ordered_json::parse(to_json(from_lorenz(b)));
    else
      j["word"] = link.words.front().str();
  } else {
    const TLinkParams t = parse_tlink(input);
    j["input"] = ordered_json::parse(to_json(t));
    if (to == "braid") {
      j["braid"] = ordered_json::parse(to_json(to_lorenz(t)));
    } else if (to == "tlink") {
      const BraidWord w = t_braid_word(t);
      j["tlink"] = ordered_json::parse(to_json(t));
      j["strands"] = w.strands;
      j["generators"] = w.generators;
    } else {
      std::vector<std::string> words;
      for (const auto& w : to_lorenz(t).component_words())
        words.push_back(w.str());
      j["words"] = words;
    }
  }
  out.emit(render(j, out.format));
}

void run_jones(const std::vector<std::string>& inputs, int max_crossings, const Output& out)
{
  ordered_json j;
  if (inputs.size() == 1 && !looks_like_word(inputs.front())) {
    const TLinkParams t = parse_tlink(inputs.front());
    if (t.size() != 1)
      throw Error(ErrorKind::InvalidParams, "closed form needs a single (p,q) pair");
    const int p = t.pairs().front().displacement;
    const int q = t.pairs().front().multiplicity;
    j["torus"] = {p, q};
    j["jones"] = poly_json(jones_torus(p, q), "t");
  } else {
    const LinkWords link = link_of(inputs);
    const LorenzBraid b = braid_of_words(link);
    const auto records = braid_generators(b);
    std::vector<std::string> words;
    for (const auto& w : link.words)
      words.push_back(w.str());
    j["words"] = words;
    j["crossings"] = records.size();
    j["jones"] = poly_json(jones_of_braid(records, b.strands(), max_crossings), "t");
  }
  out.emit(render(j, out.format));
}

void run_modular(const std::string& action, const std::string& input, const Output& out)
{
  ordered_json j;
  if (action == "encode") {
    const auto w = canonicalize(input);
    const Mat2Z m = matrix_of_word(w);
    j["word"] = w.str();
    j["matrix"] = ordered_json::parse(to_json(m));
    j["trace"] = m.trace();
  } else if (action == "decode") {
    const Mat2Z m = parse_matrix(input);
    j["matrix"] = ordered_json::parse(to_json(m));
    j["word"] = word_of_matrix(m).str();
  } else {
    const auto w = canonicalize(input);
    const Mat2Z m = matrix_of_word(w);
    j["word"] = w.str();
    j["rademacher"] = rademacher(w);
    j["dedekind_psi"] = rademacher_psi(m);
  }
  out.emit(render(j, out.format));
}

State parse_state(const std::string& text)
{
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParams, "bad coordinate '" + item + "'");
    }
  }
  if (v.size() != 3)
    throw Error(ErrorKind::InvalidParams, "seed state needs x,y,z");
  return {v[0], v[1], v[2]};
}

void run_flow(const std::string& seed, double dt, std::size_t steps, double skip, const std::string& csv_path,
              const Output& out)
{
  const Trajectory traj = integrate(parse_state(seed), dt, steps);
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f)
      throw Error(ErrorKind::IOError, "cannot open " + csv_path);
    write_csv(f, traj);
    if (!f)
      throw Error(ErrorKind::IOError, "failed writing " + csv_path);
  }
  ordered_json j;
  j["seed"] = seed;
  j["dt"] = dt;
  j["steps"] = steps;
  j["itinerary"] = itinerary(traj, skip);
  out.emit(render(j, out.format));
}

void run_atlas_build(std::size_t max_len, int jones_max, int workers, const Output& out)
{
  AtlasOptions opts;
  opts.max_len = max_len;
  opts.jones_max_crossings = jones_max;
  opts.workers = workers;
  if (out.path.empty()) {
    atlas_build(opts, std::cout);
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f)
    throw Error(ErrorKind::IOError, "cannot open " + out.path + " for writing");
  atlas_build(opts, f);
}

void run_atlas_query(const std::string& in_path, const std::vector<std::string>& clauses, const Output& out)
{
  std::string expr;
  for (const auto& c : clauses)
    expr += (expr.empty() ? "" : ",") + c;
  const AtlasFilter filter = AtlasFilter::parse(expr);
  std::ifstream f(in_path);
  if (!f)
    throw Error(ErrorKind::IOError, "cannot open " + in_path);
  const auto records = atlas_query(f, filter);

  std::ostringstream os;
  if (out.format == "csv") {
    os << atlas_csv_header() << '\n';
    for (const auto& r : records)
      os << to_csv_line(r) << '\n';
  } else if (out.format == "table") {
    for (const auto& r : records) {
      os << r.word << "  n=" << r.strands << " c=" << r.crossings << " genus="
         << (r.genus ? std::to_string(*r.genus) : "-") << " braid_index=" << r.braid_index
         << " c_min=" << (r.min_crossings ? std::to_string(*r.min_crossings) : "-") << " torus="
         << (r.torus ? "(" + std::to_string(r.torus->first) + "," + std::to_string(r.torus->second) + ")" : "-")
         << '\n';
    }
  } else {
    for (const auto& r : records)
      os << to_json_line(r) << '\n';
  }
  std::string text = os.str();
  if (!text.empty() && text.back() == '\n')
    text.pop_back();
  out.emit(text);
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Lorenz links: words, braids, T-links, invariants, census"};
  app.require_subcommand(1);

  Output out;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--out", out.path, "Write output to a file");
  };

  // word info
  auto* word = app.add_subcommand("word", "Cyclic LR words");
  word->require_subcommand(1);
  auto* word_info = word->add_subcommand("info", "Braid, trip parameters and invariants of a word family");
  std::vector<std::string> info_words;
  word_info->add_option("words", info_words, "One word per link component")->required();
  add_output(word_info);

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between words, Lorenz braids and T-link parameters");
  std::string convert_input;
  std::string convert_to = "braid";
  convert->add_option("input", convert_input, "LR word or parameters like ((2,3),(4,4))")->required();
  convert->add_option("--to", convert_to, "Target form")->check(CLI::IsMember({"braid", "tlink", "word"}));
  add_output(convert);

  // jones
  auto* jones = app.add_subcommand("jones", "Jones polynomial of words (state sum) or of a torus knot p,q");
  std::vector<std::string> jones_inputs;
  int jones_max = kDefaultCrossingLimit;
  jones->add_option("input", jones_inputs, "Words, or a single p,q pair")->required();
  jones->add_option("--jones-max-crossings", jones_max, "State-sum crossing limit");
  add_output(jones);

  // modular
  auto* modular = app.add_subcommand("modular", "PSL(2,Z) dictionary");
  modular->require_subcommand(1);
  std::string modular_input;
  std::string modular_action;
  for (const char* name : {"encode", "decode", "rademacher"}) {
    auto* sub = modular->add_subcommand(name);
    sub->add_option("input", modular_input, "Word, or matrix [[a,b],[c,d]] for decode")->required();
    add_output(sub);
    sub->callback([&, name] { modular_action = name; });
  }

  // flow itinerary
  auto* flow = app.add_subcommand("flow", "Lorenz ODE");
  flow->require_subcommand(1);
  auto* flow_it = flow->add_subcommand("itinerary", "Integrate and read the LR itinerary");
  std::string seed = "1,1,1";
  double dt = 1e-3;
  std::size_t steps = 20000;
  double skip = 5.0;
  std::string csv_path;
  flow_it->add_option("--seed-state", seed, "Initial x,y,z");
  flow_it->add_option("--dt", dt, "Step size");
  flow_it->add_option("--steps", steps, "Number of steps");
  flow_it->add_option("--skip", skip, "Transient to discard (time units)");
  flow_it->add_option("--csv", csv_path, "Also write the trajectory as CSV");
  add_output(flow_it);

  // atlas
  auto* atlas = app.add_subcommand("atlas", "Census of Lorenz knots by word");
  atlas->require_subcommand(1);
  auto* build = atlas->add_subcommand("build", "Write a JSON-lines atlas");
  std::size_t max_len = 8;
  int atlas_jones = -1;
  int workers = 1;
  build->add_option("--max-len", max_len, "Longest word length");
  build->add_option("--jones-max-crossings", atlas_jones, "Attach Jones when c <= this");
  build->add_option("--workers", workers, "Length shards built concurrently");
  build->add_option("--out", out.path, "Atlas file (default stdout)");
  auto* query = atlas->add_subcommand("query", "Filter an atlas");
  std::string in_path;
  std::vector<std::string> clauses;
  query->add_option("--in", in_path, "Atlas file")->required();
  query->add_option("filter", clauses, "Clauses such as genus=5 torus=null 'c_min<=3'");
  add_output(query);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (word_info->parsed())
      run_word_info(info_words, out);
    else if (convert->parsed())
      run_convert(convert_input, convert_to, out);
    else if (jones->parsed())
      run_jones(jones_inputs, jones_max, out);
    else if (modular->parsed())
      run_modular(modular_action, modular_input, out);
    else if (flow_it->parsed())
      run_flow(seed, dt, steps, skip, csv_path, out);
    else if (build->parsed())
      run_atlas_build(max_len, atlas_jones, workers, out);
    else if (query->parsed())
      run_atlas_query(in_path, clauses, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
