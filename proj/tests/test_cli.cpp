#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace kac;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Letter> word(std::initializer_list<const char*> xs) {
  std::vector<Letter> w;
  for (auto x : xs) w.push_back(parse_letter(x));
  return w;
}

Tableau worked_tableau() {
  return Tableau::from_rows(Alphabet::B, {4, 3, 2, 1, 1}, {},
                            {word({"b3", "b3", "b2", "b1"}), word({"b2", "b1", "3"}), word({"1", "2"}), word({"1"}),
                             word({"2"})});
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kac_cli_test_" + name)).string();
}

}  // namespace

TEST(CliCrystal, HandCases) {
  auto a = run({"crystal", "--rank", "1,1", "--lambda", "0|0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "vertices=2 edges=1\n");
  auto b = run({"crystal", "--rank", "2,1", "--lambda", "0,0|0"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out.rfind("vertices=4 ", 0), 0u);
}

TEST(CliCrystal, ParseErrorsExitTwo) {
  auto a = run({"crystal", "--rank", "1,1", "--lambda", "0|x"});
  EXPECT_EQ(a.code, 2);
  EXPECT_NE(a.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"crystal", "--rank", "2,2", "--lambda", "0,1|0,0"}).code, 2);
  EXPECT_EQ(run({"crystal", "--rank", "1", "--lambda", "0|0"}).code, 2);
  EXPECT_EQ(run({"crystal", "--lambda", "0|0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCrystal, CapExceededExitsThreeWithCardinality) {
  auto a = run({"crystal", "--rank", "3,3", "--lambda", "4,3,2|3,1,0", "--cap", "100"});
  EXPECT_EQ(a.code, 3);
  EXPECT_NE(a.err.find("cardinality=61440"), std::string::npos);
}

TEST(CliCrystal, WritesDotAndJsonFiles) {
  auto dot = temp_path("g.dot");
  auto a = run({"crystal", "--rank", "2,1", "--lambda", "1,0|0", "--format", "dot", "--out", dot});
  EXPECT_EQ(a.code, 0);
  std::ifstream f(dot);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("digraph", 0), 0u);
  EXPECT_NE(text.find("->"), std::string::npos);
  std::filesystem::remove(dot);

  auto js = temp_path("g.json");
  EXPECT_EQ(run({"crystal", "--rank", "1,1", "--lambda", "0|0", "--out", js}).code, 0);
  std::ifstream g(js);
  auto j = nlohmann::ordered_json::parse(g);
  EXPECT_EQ(j["vertices"].size(), 2u);
  std::filesystem::remove(js);
}

TEST(CliVerify, SingleInstancePasses) {
  auto a = run({"verify", "--rank", "3,3", "--lambda", "4,3,2|3,1,0", "--threads", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(j["summary"]["pass"], true);
  EXPECT_EQ(j["reports"].size(), 1u);
}

TEST(CliVerify, CorruptFlagFails) {
  auto a = run({"verify", "--rank", "2,2", "--lambda", "-1,-2|2,1", "--corrupt"});
  EXPECT_EQ(a.code, 1);
  auto j = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(j["summary"]["failed"], 1);
}

TEST(CliVerify, OutputIsReproducible) {
  std::vector<std::string> args = {"verify", "--rank", "2,1", "--lambda", "2,-1|1", "--spot", "20", "--seed", "5"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, UnknownCheckIsAUsageError) {
  EXPECT_EQ(run({"verify", "--rank", "1,1", "--lambda", "0|0", "--checks", "nope"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(CliEmbed, WorkedExampleTriple) {
  Rank r(3, 3);
  auto a = run({"embed", "--rank", "3,3"}, to_json(worked_tableau()).dump());
  ASSERT_EQ(a.code, 0) << a.err;
  KacElement expect{OddRootSet::of(r, {{3, 1}, {2, 2}, {1, 3}}),
                    Tableau::from_rows(Alphabet::BPlus, {4, 3, 2}, {},
                                       {word({"b3", "b3", "b3", "b2"}), word({"b2", "b2", "b1"}), word({"b1", "b1"})}),
                    Tableau::from_rows(Alphabet::BMinus, {1, 1}, {}, {word({"1"}), word({"2"})})};
  EXPECT_EQ(kac_element_from_json(r, nlohmann::ordered_json::parse(a.out)), expect);
}

TEST(CliEmbed, SingleBox) {
  Rank r(2, 3);
  auto t = Tableau::from_rows(Alphabet::B, {1}, {}, {word({"b2"})});
  auto a = run({"embed", "--rank", "2,3"}, to_json(t).dump());
  ASSERT_EQ(a.code, 0) << a.err;
  auto x = kac_element_from_json(r, nlohmann::ordered_json::parse(a.out));
  EXPECT_EQ(x.s, OddRootSet{});
  EXPECT_EQ(to_string(x.t_plus), "b2");
  EXPECT_EQ(x.t_minus.size(), 0);
}

TEST(CliEmbed, RoundTripThroughInverse) {
  Rank r(2, 2);
  for (const auto& t : enumerate_sst(r, Alphabet::B, make_shape({3, 2, 1}))) {
    auto a = run({"embed", "--rank", "2,2"}, to_json(t).dump());
    ASSERT_EQ(a.code, 0);
    auto b = run({"embed", "--rank", "2,2", "--inverse"}, a.out);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(tableau_from_json(nlohmann::ordered_json::parse(b.out)), t);
  }
}

TEST(CliEmbed, OutOfImagePrintsNull) {
  Rank r(2, 2);
  auto kc = KacCrystal::standard(r, parse_weight(r, "2,1|1,0"));
  PolynomialEmbedding emb(r, parse_weight(r, "2,1|1,0"));
  int outside = 0;
  for (const auto& x : kc.enumerate()) {
    if (emb.pi_bar(x)) continue;
    auto a = run({"embed", "--rank", "2,2", "--inverse", "--lambda", "2,1|1,0"}, to_json(r, x).dump());
    EXPECT_EQ(a.code, 4);
    EXPECT_EQ(a.out, "null\n");
    if (++outside == 3) break;
  }
  EXPECT_EQ(outside, 3);
}

TEST(CliEmbed, InvalidTableauExitsTwo) {
  EXPECT_EQ(run({"embed", "--rank", "2,2"}, "{not json").code, 2);
  auto skew = Tableau::from_rows(Alphabet::B, {2}, {1}, {word({"1"})});
  EXPECT_EQ(run({"embed", "--rank", "2,2"}, to_json(skew).dump()).code, 2);
}

TEST(CliThreads, EnvironmentOverridesFlag) {
  ::setenv("KAC_CRYSTAL_THREADS", "3", 1);
  EXPECT_EQ(cli::resolve_threads(8), 3);
  ::unsetenv("KAC_CRYSTAL_THREADS");
  EXPECT_EQ(cli::resolve_threads(2), 2);
  EXPECT_GE(cli::resolve_threads(0), 1);
}
