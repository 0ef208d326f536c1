#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lorenz/error.hpp"
#include "lorenz/words.hpp"
#include "oracles.hpp"

using namespace lorenz;

namespace {

ErrorKind kind_of(auto&& fn)
{
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IOError;
}

}  // namespace

TEST(Words, CanonicalExamples)
{
  EXPECT_EQ(canonicalize("RLRLL").str(), "LLRLR");
  EXPECT_EQ(canonicalize("L").str(), "L");
  EXPECT_EQ(canonicalize("R").str(), "R");
  EXPECT_EQ(canonicalize("RL").str(), "LR");
  EXPECT_EQ(kind_of([] { canonicalize("LRLR"); }), ErrorKind::PeriodicWord);
  EXPECT_EQ(kind_of([] { canonicalize(""); }), ErrorKind::EmptyWord);
  EXPECT_EQ(kind_of([] { canonicalize("LXR"); }), ErrorKind::InvalidLetter);
}

TEST(Words, CanonicalMatchesBruteForceOnRandomStrings)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    std::string s(n, 'L');
    for (char& ch : s)
      ch = (rng() & 1U) ? 'R' : 'L';
    EXPECT_EQ(oracle::least_rotation(s), oracle::rotate(s, least_rotation_offset(s))) << s;
    EXPECT_EQ(is_periodic(s), oracle::is_power(s)) << s;
    if (oracle::is_power(s))
      continue;
    const auto w = canonicalize(s);
    EXPECT_EQ(w.str(), oracle::least_rotation(s));
    EXPECT_EQ(canonicalize(w.str()), w);
    for (std::size_t k = 0; k < n; ++k)
      EXPECT_EQ(canonicalize(oracle::rotate(s, k)), w);
  }
}

TEST(Words, EnumerateSmall)
{
  const auto two = enumerate(2);
  ASSERT_EQ(two.size(), 3U);
  EXPECT_EQ(two[0].str(), "L");
  EXPECT_EQ(two[1].str(), "R");
  EXPECT_EQ(two[2].str(), "LR");
  EXPECT_EQ(enumerate_length(5).size(), 6U);
  EXPECT_TRUE(enumerate(0).empty());
}

TEST(Words, EnumerateCountsMatchNecklaceFormula)
{
  const std::vector<std::size_t> known{0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161, 2182, 4080, 7710, 14532, 27594, 52377};
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(necklace_count(n), known[n]) << n;
    EXPECT_EQ(enumerate_length(n).size(), known[n]) << n;
  }
}

TEST(Words, EnumerateMatchesBruteForce)
{
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::string> got;
    std::string prev;
    for (const auto& w : enumerate_length(n)) {
      EXPECT_LT(prev, w.str());
      prev = w.str();
      got.insert(w.str());
    }
    EXPECT_EQ(got, oracle::necklaces(n)) << n;
  }
}

TEST(Words, EnumerateOrderIsLengthThenLex)
{
  const auto all = enumerate(9);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1].str();
    const auto& b = all[i].str();
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b)) << a << " " << b;
  }
}

TEST(Words, InvoluteIsBijection)
{
  EXPECT_EQ(involute(canonicalize("LRLRL")).str(), "LRLRR");
  EXPECT_EQ(involute(canonicalize("LR")).str(), "LR");
  EXPECT_EQ(involute(canonicalize("L")).str(), "R");
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto words = enumerate_length(n);
    std::set<std::string> image;
    for (const auto& w : words) {
      const auto v = involute(w);
      EXPECT_EQ(v.str(), oracle::least_rotation(oracle::swap_letters(w.str())));
      EXPECT_EQ(involute(v), w);
      image.insert(v.str());
    }
    EXPECT_EQ(image.size(), words.size());
  }
}

TEST(Words, RotationComparisonNeverTies)
{
  const auto words = enumerate(8);
  std::vector<std::string> rotations;
  for (const auto& w : words)
    for (std::size_t k = 0; k < w.size(); ++k)
      rotations.push_back(w.rotation(k));
  for (std::size_t i = 0; i < rotations.size(); ++i)
    for (std::size_t j = 0; j < rotations.size(); ++j) {
      if (i == j)
        continue;
      const bool lt = precedes_infinite(rotations[i], rotations[j]);
      const bool gt = precedes_infinite(rotations[j], rotations[i]);
      ASSERT_NE(lt, gt) << rotations[i] << " " << rotations[j];
      ASSERT_EQ(lt, oracle::extension_less(rotations[i], rotations[j]));
    }
}

TEST(Words, ValidateLink)
{
  const std::vector<std::string> fig{"LRLRL", "LRLRLRL", "LRLRRRLRRR"};
  const auto link = validate_link(fig);
  EXPECT_EQ(link.components(), 3U);
  EXPECT_EQ(link.total_length(), 22U);
  const std::vector<std::string> dup{"LR", "RL"};
  EXPECT_EQ(kind_of([&] { validate_link(dup); }), ErrorKind::DuplicateComponent);
  const std::vector<std::string> per{"LRLR"};
  EXPECT_EQ(kind_of([&] { validate_link(per); }), ErrorKind::PeriodicWord);
  const std::vector<std::string> none;
  EXPECT_EQ(kind_of([&] { validate_link(none); }), ErrorKind::EmptyWord);
}
