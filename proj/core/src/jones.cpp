#include "lorenz/jones.hpp"

#include <exception>
#include <numeric>
#include <thread>

#include "lorenz/error.hpp"

namespace lorenz {

BracketHistogram& BracketHistogram::operator+=(const BracketHistogram& o)
{
  if (o.crossings != crossings || o.max_loops != max_loops)
    throw Error(ErrorKind::InvalidParams, "merging histograms of different diagrams");
  for (std::size_t i = 0; i < counts.size(); ++i)
    counts[i] += o.counts[i];
  return *this;
}

namespace {

/// Union-find with union by size and an undo log; no path compression so
/// that every union can be rolled back.
class RollbackDsu {
public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1), components_(static_cast<int>(n))
  {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const
  {
    while (parent_[static_cast<std::size_t>(x)] != x)
      x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  void unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back(-1);
      return;
    }
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
      std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --components_;
    log_.push_back(b);
  }

  void undo()
  {
    const int b = log_.back();
    log_.pop_back();
    if (b < 0)
      return;
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
    ++components_;
  }

  int components() const noexcept { return components_; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
  std::vector<int> log_;
};

struct CrossingArcs {
  int in_left, in_right, out_left, out_right;
};

// Arc ids: 0..n-1 are the strands at the bottom of the braid; crossing k
// creates 2k+n (left outgoing) and 2k+n+1 (right outgoing).
std::vector<CrossingArcs> label_arcs(const BraidWord& word, std::vector<int>& top)
{
  const int n = word.strands;
  top.resize(static_cast<std::size_t>(n));
  std::iota(top.begin(), top.end(), 0);
  std::vector<CrossingArcs> arcs;
  arcs.reserve(word.generators.size());
  int next = n;
  for (int g : word.generators) {
    if (g < 1 || g >= n)
      throw Error(ErrorKind::InvalidParams, "generator " + std::to_string(g) + " out of range for " +
                                                std::to_string(n) + " strands");
    auto& l = top[static_cast<std::size_t>(g - 1)];
    auto& r = top[static_cast<std::size_t>(g)];
    arcs.push_back({l, r, next, next + 1});
    l = next;
    r = next + 1;
    next += 2;
  }
  return arcs;
}

class StateSum {
public:
  StateSum(const std::vector<CrossingArcs>& arcs, RollbackDsu& dsu, BracketHistogram& hist)
  : arcs_(arcs), dsu_(dsu), hist_(hist)
  {}

  void run(std::size_t k, int balance)
  {
    if (k == arcs_.size()) {
      const auto idx = static_cast<std::size_t>(balance + hist_.crossings) * hist_.stride() +
                       static_cast<std::size_t>(dsu_.components());
      ++hist_.counts[idx];
      return;
    }
    apply(k, false);
    run(k + 1, balance + 1);
    rollback();
    apply(k, true);
    run(k + 1, balance - 1);
    rollback();
  }

  // A smoothing follows the strands through (the oriented resolution of a
  // positive crossing); B turns back.
  void apply(std::size_t k, bool b_smoothing)
  {
    const auto& x = arcs_[k];
    if (b_smoothing) {
      dsu_.unite(x.in_left, x.in_right);
      dsu_.unite(x.out_left, x.out_right);
    } else {
      dsu_.unite(x.in_left, x.out_left);
      dsu_.unite(x.in_right, x.out_right);
    }
  }

  void rollback()
  {
    dsu_.undo();
    dsu_.undo();
  }

private:
  const std::vector<CrossingArcs>& arcs_;
  RollbackDsu& dsu_;
  BracketHistogram& hist_;
};

void check_limit(std::size_t crossings, int limit)
{
  if (static_cast<long long>(crossings) > limit)
    throw Error(ErrorKind::TooManyCrossings, std::to_string(crossings) + " crossings exceed the limit of " +
                                                 std::to_string(limit));
}

LaurentPoly bracket_from_histogram(const BracketHistogram& hist)
{
  const LaurentPoly delta = LaurentPoly::power(2, -1) + LaurentPoly::power(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  LaurentPoly out;
  const std::size_t stride = hist.stride();
  for (int balance = -hist.crossings; balance <= hist.crossings; ++balance) {
    for (int loops = 1; loops <= hist.max_loops; ++loops) {
      const auto count = hist.counts[static_cast<std::size_t>(balance + hist.crossings) * stride +
                                     static_cast<std::size_t>(loops)];
      if (count == 0)
        continue;
      while (static_cast<int>(delta_pow.size()) < loops)
        delta_pow.push_back(delta_pow.back() * delta);
      out += LaurentPoly::power(balance, static_cast<LaurentPoly::Coeff>(count)) *
             delta_pow[static_cast<std::size_t>(loops - 1)];
    }
  }
  return out;
}

}  // namespace

BracketHistogram bracket_histogram(const BraidWord& word, int prefix_bits, std::uint64_t prefix)
{
  if (word.strands < 1)
    throw Error(ErrorKind::InvalidParams, "closed braid needs at least one strand");
  std::vector<int> top;
  const auto arcs = label_arcs(word, top);
  const int c = static_cast<int>(arcs.size());
  if (prefix_bits < 0 || prefix_bits > c || prefix_bits > 62)
    throw Error(ErrorKind::InvalidParams, "prefix longer than the crossing list");

  BracketHistogram hist;
  hist.crossings = c;
  hist.max_loops = word.strands + 2 * c;
  hist.counts.assign(static_cast<std::size_t>(2 * c + 1) * hist.stride(), 0);

  RollbackDsu dsu(static_cast<std::size_t>(word.strands + 2 * c));
  // braid closure: top of each strand meets its bottom
  for (int j = 0; j < word.strands; ++j)
    dsu.unite(top[static_cast<std::size_t>(j)], j);

  StateSum sum(arcs, dsu, hist);
  int balance = 0;
  for (int k = 0; k < prefix_bits; ++k) {
    const bool b = (prefix >> k) & 1U;
    sum.apply(static_cast<std::size_t>(k), b);
    balance += b ? -1 : 1;
  }
  sum.run(static_cast<std::size_t>(prefix_bits), balance);
  return hist;
}

LaurentPoly kauffman_bracket(const BraidWord& word, int limit, int workers)
{
  const std::size_t c = word.generators.size();
  check_limit(c, limit);
  if (workers <= 1 || c < 8)
    return bracket_from_histogram(bracket_histogram(word));

  int bits = 0;
  while ((1 << bits) < workers && bits < 6)
    ++bits;
  const std::size_t parts = std::size_t{1} << bits;
  std::vector<BracketHistogram> partial(parts);
  std::vector<std::exception_ptr> failures(parts);
  std::vector<std::thread> pool;
  for (std::size_t p = 0; p < parts; ++p) {
    pool.emplace_back([&, p] {
      try {
        partial[p] = bracket_histogram(word, bits, p);
      } catch (...) {
        failures[p] = std::current_exception();
      }
    });
  }
  for (auto& t : pool)
    t.join();
  for (const auto& f : failures)
    if (f)
      std::rethrow_exception(f);
  BracketHistogram total = partial.front();
  for (std::size_t p = 1; p < parts; ++p)
    total += partial[p];
  return bracket_from_histogram(total);
}

LaurentPoly kauffman_bracket(std::span<const CrossingRecord> crossings, int strands, int limit)
{
  return kauffman_bracket(BraidWord{strands, generator_word(crossings)}, limit);
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe)
{
  // (-A)^(-3w)
  const LaurentPoly::Coeff sign = (writhe % 2 == 0) ? 1 : -1;
  const LaurentPoly in_a = LaurentPoly::power(-3 * writhe, sign) * bracket;
  // A^(e/4) -> t^(-e/16): quarter units of t are -e/4
  return in_a.rescale_exponents(-1, 4);
}

LaurentPoly jones_of_braid(const BraidWord& word, int limit, int workers)
{
  return jones_from_bracket(kauffman_bracket(word, limit, workers), static_cast<int>(word.generators.size()));
}

LaurentPoly jones_of_braid(std::span<const CrossingRecord> crossings, int strands, int limit)
{
  return jones_of_braid(BraidWord{strands, generator_word(crossings)}, limit);
}

LaurentPoly torus_numerator(int p, int q, TorusNumerator form)
{
  const LaurentPoly one(1);
  if (form == TorusNumerator::Standard)
    return one - LaurentPoly::power(p + 1) - LaurentPoly::power(q + 1) + LaurentPoly::power(p + q);
  return one - LaurentPoly::power(p - 1) - LaurentPoly::power(q - 1) - LaurentPoly::power(p + q);
}

LaurentPoly jones_torus(int p, int q, TorusNumerator form)
{
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error(ErrorKind::NotCoprime, "(" + std::to_string(p) + "," + std::to_string(q) +
                                           ") is not a coprime pair with p, q >= 2");
  const LaurentPoly denominator = LaurentPoly(1) - LaurentPoly::power(2);
  const LaurentPoly quotient = divide_exact(torus_numerator(p, q, form), denominator);
  return LaurentPoly::power((p - 1) * (q - 1) / 2) * quotient;
}

LaurentPoly mirror(const LaurentPoly& jones)
{
  return jones.rescale_exponents(-1, 1);
}

}  // namespace lorenz
