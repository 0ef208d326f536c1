#include <gtest/gtest.h>

#include "json.hpp"
#include "lorenz/error.hpp"
#include "lorenz/serialize.hpp"

using namespace lorenz;
using nlohmann::json;

TEST(Serialize, BraidJson)
{
  const auto b = braid_of_words(validate_link(std::vector<std::string>{"LRLRL"}));
  const auto j = json::parse(to_json(b));
  EXPECT_EQ(j.at("n"), 5);
  EXPECT_EQ(j.at("targets"), json::parse("[3,4,5,1,2]"));
  EXPECT_EQ(j.at("types"), json::parse(R"(["LL","LR","LR","RL","RL"])"));
  EXPECT_EQ(j.at("trip"), json::parse("[[2,3]]"));
}

TEST(Serialize, ParseParameters)
{
  EXPECT_EQ(parse_tlink("((2,3),(4,4),(5,3))"), TLinkParams({{2, 3}, {4, 4}, {5, 3}}));
  EXPECT_EQ(parse_tlink("[[2,3]]"), TLinkParams({{2, 3}}));
  EXPECT_EQ(json::parse(to_json(TLinkParams({{2, 3}}))), json::parse("[[2,3]]"));
  EXPECT_THROW(parse_tlink("((2,3),(4))"), Error);
  EXPECT_THROW(parse_tlink("((2,x))"), Error);
  EXPECT_THROW(parse_tlink("((3,1),(2,1))"), Error);
}

TEST(Serialize, MatricesAndPolynomials)
{
  EXPECT_EQ(parse_matrix("[[2,1],[1,1]]"), (Mat2Z{2, 1, 1, 1}));
  EXPECT_EQ(json::parse(to_json(Mat2Z{2, 1, 1, 1})), json::parse("[[2,1],[1,1]]"));
  EXPECT_THROW(parse_matrix("[[2,1],[1]]"), Error);
  const auto p = LaurentPoly::power(1) + LaurentPoly::power(3) - LaurentPoly::power(4);
  EXPECT_EQ(json::parse(to_json(p)), json::parse("[[4,1],[12,1],[16,-1]]"));
  EXPECT_EQ(parse_poly(to_json(p)), p);
  EXPECT_THROW(parse_poly("[[4]"), Error);
}

TEST(Serialize, WordInfo)
{
  const auto j = json::parse(word_info_json(validate_link(std::vector<std::string>{"LRLRRRLRRR"})));
  EXPECT_EQ(j.at("rotation_ranks"), json::parse("[[1,6,3,10,8,5,2,9,7,4]]"));
  EXPECT_EQ(j.at("over"), 3);
  EXPECT_EQ(j.at("under"), 7);
  EXPECT_EQ(j.at("trip"), json::parse("[[5,1],[7,2]]"));
  EXPECT_EQ(j.at("genus"), 5);
  EXPECT_EQ(j.at("braid_index"), 3);
  EXPECT_FALSE(j.contains("linking"));

  const auto link = json::parse(word_info_json(validate_link(std::vector<std::string>{"LLR", "LRR"})));
  EXPECT_EQ(link.at("components"), 2);
  EXPECT_TRUE(link.at("genus").is_null());
  EXPECT_TRUE(link.contains("linking"));
}
