#include <gtest/gtest.h>

#include <functional>

#include "lorenz/braid.hpp"
#include "lorenz/error.hpp"
#include "lorenz/tlink.hpp"
#include "lorenz/words.hpp"
#include "oracles.hpp"

using namespace lorenz;

namespace {

LorenzBraid braid_of(std::vector<std::string> words)
{
  return braid_of_words(validate_link(words));
}

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

/// Every set of distinct canonical words with total length <= max_total.
void for_each_link(std::size_t max_total, const std::function<void(const std::vector<std::string>&)>& fn)
{
  const auto words = enumerate(max_total);
  std::vector<std::string> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t used) {
    if (!current.empty())
      fn(current);
    for (std::size_t i = start; i < words.size(); ++i) {
      if (used + words[i].size() > max_total)
        continue;
      current.push_back(words[i].str());
      rec(i + 1, used + words[i].size());
      current.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

TEST(Braid, WorkedExample)
{
  const auto link = validate_link(std::vector<std::string>{"LRLRRRLRRR"});
  EXPECT_EQ(rotation_ranks(link, 0), (std::vector<int>{1, 6, 3, 10, 8, 5, 2, 9, 7, 4}));
  const auto b = braid_of_words(link);
  EXPECT_EQ(b.strands(), 10);
  EXPECT_EQ(b.left_count(), 3);
  EXPECT_EQ(b.right_count(), 7);
  const auto prof = strand_profile(b);
  EXPECT_EQ(prof.trip, (std::vector<TripPair>{{5, 1}, {7, 2}}));
  EXPECT_EQ(prof.crossings, 19);
  EXPECT_EQ(prof.counts, (EarCounts{0, 3, 3, 4}));
  EXPECT_EQ(braid_generators(b).size(), 19U);
}

TEST(Braid, TrefoilAndSmallCases)
{
  const auto tre = braid_of({"LRLRL"});
  EXPECT_EQ(to_vec(tre.targets()), (std::vector<int>{3, 4, 5, 1, 2}));
  EXPECT_EQ(tre.left_count(), 3);
  for (int s = 1; s <= 3; ++s)
    EXPECT_EQ(tre.meta(s).displacement, 2);
  const auto tp = strand_profile(tre);
  EXPECT_EQ(tp.trip, (std::vector<TripPair>{{2, 3}}));
  EXPECT_EQ(tp.crossings, 6);
  EXPECT_EQ(tp.counts, (EarCounts{1, 2, 2, 0}));
  EXPECT_EQ(braid_generators(tre).size(), 6U);
  EXPECT_EQ(tre.cycles().size(), 1U);

  const auto unknot = braid_of({"L"});
  EXPECT_EQ(unknot.strands(), 1);
  EXPECT_EQ(to_vec(unknot.targets()), std::vector<int>{1});
  EXPECT_TRUE(braid_generators(unknot).empty());
  EXPECT_EQ(strand_profile(unknot).crossings, 0);

  const auto lr = strand_profile(braid_of({"LR"}));
  EXPECT_EQ(lr.trip, (std::vector<TripPair>{{1, 1}}));
  EXPECT_EQ(lr.crossings, 1);
  EXPECT_EQ(lr.counts, (EarCounts{0, 1, 1, 0}));
}

TEST(Braid, ConstructorRejectsNonLorenzPermutations)
{
  EXPECT_THROW(LorenzBraid({1, 1}, 1), Error);
  EXPECT_THROW(LorenzBraid({2, 1}, 0), Error);        // under-strand moving right
  EXPECT_THROW(LorenzBraid({3, 2, 1}, 2), Error);     // over-strand moving left
  EXPECT_THROW(LorenzBraid({3, 2, 4, 1}, 2), Error);  // over block not order-preserving
  EXPECT_NO_THROW(LorenzBraid({3, 4, 5, 1, 2}, 3));
}

TEST(Braid, MatchesBruteForceSortOnAllSmallLinks)
{
  std::size_t checked = 0;
  for_each_link(12, [&](const std::vector<std::string>& words) {
    const auto link = validate_link(words);
    const auto b = braid_of_words(link);
    const auto ref = oracle::braid(words);
    ASSERT_EQ(to_vec(b.targets()), ref.targets);
    ASSERT_EQ(b.left_count(), ref.left);

    // roundtrip: cycles read back as the input words
    ASSERT_EQ(b.component_count(), static_cast<int>(words.size()));
    ASSERT_EQ(b.cycles().size(), words.size());
    auto back = b.component_words();
    std::vector<std::string> got;
    for (const auto& w : back)
      got.push_back(w.str());
    std::sort(got.begin(), got.end());
    auto want = words;
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got, want);

    for (int i = 1; i <= b.strands(); ++i) {
      ASSERT_EQ(b.meta(i).component, ref.component[static_cast<std::size_t>(i - 1)]);
      // fixed strand of the word L is the only left strand that does not move
      if (ref.rotation[static_cast<std::size_t>(i - 1)] != "L")
        ASSERT_EQ(ref.rotation[static_cast<std::size_t>(i - 1)][0] == 'L', b.target(i) > i);
    }

    const auto prof = strand_profile(b);
    std::int64_t sum_pq = 0;
    for (const auto& t : prof.trip)
      sum_pq += std::int64_t{t.displacement} * t.multiplicity;
    ASSERT_EQ(prof.crossings, sum_pq);
    ASSERT_EQ(inversion_count(b.targets()), sum_pq);
    ASSERT_EQ(oracle::crossings(ref.targets), sum_pq);
    ASSERT_EQ(prof.counts.lr, prof.counts.rl);

    // crossing records realise the permutation, over-strand always from the left band
    const auto recs = braid_generators(b);
    ASSERT_EQ(static_cast<std::int64_t>(recs.size()), sum_pq);
    std::vector<int> at(static_cast<std::size_t>(b.strands()));
    std::iota(at.begin(), at.end(), 1);
    for (const auto& r : recs) {
      ASSERT_EQ(at[static_cast<std::size_t>(r.generator - 1)], r.over_strand);
      ASSERT_EQ(at[static_cast<std::size_t>(r.generator)], r.under_strand);
      ASSERT_TRUE(b.meta(r.over_strand).over);
      ASSERT_FALSE(b.meta(r.under_strand).over);
      std::swap(at[static_cast<std::size_t>(r.generator - 1)], at[static_cast<std::size_t>(r.generator)]);
    }
    for (int i = 1; i <= b.strands(); ++i)
      ASSERT_EQ(at[static_cast<std::size_t>(b.target(i) - 1)], i);

    ASSERT_EQ(linking_matrix(b), oracle::linking(ref.targets, ref.component, static_cast<int>(words.size())));
    ++checked;
  });
  EXPECT_GT(checked, 1000U);
}

TEST(Braid, Linking)
{
  const auto hopf = to_lorenz(TLinkParams({{2, 4}}));
  EXPECT_EQ(hopf.component_count(), 2);
  const auto lk = linking_matrix(hopf);
  EXPECT_EQ(lk[0][1], 2);
  EXPECT_EQ(lk[1][0], 2);
  EXPECT_TRUE(linking_matrix(braid_of({"LRLRL"}))[0].size() == 1);

  const auto three = braid_of({"L", "R", "LR"});
  const auto ref = oracle::braid({"L", "R", "LR"});
  EXPECT_EQ(linking_matrix(three), oracle::linking(ref.targets, ref.component, 3));
}
