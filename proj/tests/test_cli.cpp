#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "hopfact/hopfact.hpp"

using namespace hopfact;
namespace cli = hopfact::cli;

namespace {

std::string sample_file(std::string const& name) {
  std::ifstream in(std::string(HOPFACT_SAMPLES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(std::string const& haystack, std::string const& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, ValidateSample) {
  auto r = cli::validate(sample_file("small.txt"));
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_TRUE(contains(r.out, "monoid M2 (size 2): ok"));
  EXPECT_TRUE(contains(r.out, "act Z4reg over Z4 (size 4): ok"));
}

TEST(Cli, ValidateRejectsBadInput) {
  auto arity = cli::validate(sample_file("bad_arity.txt"));
  EXPECT_EQ(arity.exit_code, cli::exit_input);
  EXPECT_TRUE(contains(arity.err, "3:5"));
  auto act = cli::validate(sample_file("bad_act.txt"));
  EXPECT_EQ(act.exit_code, cli::exit_input);
  EXPECT_TRUE(contains(act.err, "broken"));
}

TEST(Cli, ClassifyA2) {
  auto r = cli::classify(sample_file("small.txt"), "A2", true);
  ASSERT_EQ(r.exit_code, cli::exit_ok);
  auto doc = Json::parse(r.out);
  auto const& rep = doc.at("reports").at(0);
  EXPECT_EQ(rep.at("end_size"), 2);
  EXPECT_EQ(rep.at("strongly_hopfian"), true);
  EXPECT_EQ(rep.at("strongly_hopfian_index"), 1);
  EXPECT_EQ(rep.at("fitting"), true);
  EXPECT_TRUE(doc.at("verdicts").empty());

  auto text = cli::classify(sample_file("small.txt"), "A2", false);
  EXPECT_TRUE(contains(text.out, "fitting"));
  EXPECT_TRUE(contains(text.out, "(index 1)"));
}

TEST(Cli, ClassifyPointIsAllTrue) {
  auto r = cli::classify(sample_file("small.txt"), "point", true);
  auto const doc = Json::parse(r.out);
  auto const& rep = doc.at("reports").at(0);
  for (auto key : {"hopfian", "co_hopfian", "strongly_hopfian",
                   "strongly_co_hopfian", "fitting", "noetherian", "artinian",
                   "quasi_injective", "quasi_projective", "end_commutative",
                   "end_strongly_pi_regular"}) {
    EXPECT_EQ(rep.at(key), true) << key;
  }
}

TEST(Cli, ClassifyRegular) {
  auto r = cli::classify_regular(std::nullopt, "Z4", true);
  ASSERT_EQ(r.exit_code, cli::exit_ok);
  auto const doc = Json::parse(r.out);
  auto const& rep = doc.at("reports").at(0);
  EXPECT_EQ(rep.at("strongly_hopfian_index"), 2);
  EXPECT_EQ(rep.at("strongly_co_hopfian_index"), 2);
  EXPECT_EQ(rep.at("quasi_injective"), true);
  EXPECT_EQ(rep.at("chains").size(), 4u);

  // The file's Z4 and the built-in one agree.
  auto from_file = cli::classify_regular(sample_file("small.txt"), "Z4", true);
  EXPECT_EQ(Json::parse(from_file.out).at("reports"),
            Json::parse(r.out).at("reports"));

  EXPECT_EQ(cli::classify_regular(std::nullopt, "Q8", false).exit_code,
            cli::exit_input);
}

TEST(Cli, UnknownAct) {
  EXPECT_EQ(cli::classify(sample_file("small.txt"), "nope", false).exit_code,
            cli::exit_input);
}

TEST(Cli, Endos) {
  auto r = cli::endos(sample_file("small.txt"), "Z4reg");
  ASSERT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_TRUE(contains(r.out, "|End| = 4, commutative: yes"));
  EXPECT_TRUE(contains(r.out, "k=2 i=2"));
}

TEST(Cli, Congruences) {
  auto r = cli::congruences(sample_file("small.txt"), "A2");
  ASSERT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.out, "2 congruences\n{0}{1}\n{0,1}\n");
}

TEST(Cli, SuiteExitCodes) {
  CorpusSpec spec;
  spec.max_act_size = 3;
  EXPECT_EQ(cli::suite(spec, false).exit_code, cli::exit_ok);
  spec.fault.corrupt_hopfian = true;
  spec.theorems = {1};
  auto failed = cli::suite(spec, true);
  EXPECT_EQ(failed.exit_code, cli::exit_failure);
  EXPECT_FALSE(Json::parse(failed.out).at("verdicts").at(0).at("witness")
                   .is_null());
}

TEST(Cli, SuiteBudgetError) {
  // End of a 5-point trivial act exceeds the End cap.
  CorpusSpec spec;
  spec.max_monoid_size = 1;
  spec.max_act_size = 5;
  spec.theorems = {10};
  EXPECT_EQ(cli::suite(spec, false).exit_code, cli::exit_budget);
}

TEST(Cli, SuiteJsonIsByteStable) {
  CorpusSpec spec;
  spec.max_act_size = 3;
  spec.seed = 9;
  spec.samples = 3;
  auto a = cli::suite(spec, true).out;
  auto b = cli::suite(spec, true).out;
  EXPECT_EQ(a, b);
  auto doc = Json::parse(a);
  EXPECT_EQ(doc.at("input_digest"), fnv1a_hex(cli::suite_input(spec)));
}

TEST(Cli, Family36) {
  auto rows = cli::family36_rows(2, 3);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(rows[n - 1].depth, n);
    EXPECT_EQ(rows[n - 1].r_index, n);
  }
  EXPECT_EQ(rows[2].monoid_size, 64u);
  auto out = cli::family36(2, 2);
  EXPECT_EQ(out.exit_code, cli::exit_ok);
  EXPECT_EQ(out.out, "N  |S_N|  r-index(x)\n1  2  1\n2  8  2\n");
  EXPECT_EQ(cli::family36(1, 4).exit_code, cli::exit_input);
  EXPECT_EQ(cli::family36(2, 0).exit_code, cli::exit_input);
  EXPECT_EQ(cli::family36(2, 9).exit_code, cli::exit_budget);
}
