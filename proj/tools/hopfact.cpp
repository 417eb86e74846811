// hopfact: classify finite monoid acts and check the theorem suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfact/cli.hpp"

namespace {

std::optional<std::string> read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(hopfact::cli::CommandResult const& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hopfact::cli;
  CLI::App app{"Hopfian-type properties of finite monoid acts"};
  app.require_subcommand(1);

  std::string file;
  std::string act_name;
  std::string regular;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "Check an input file");
  validate->add_option("file", file, "Input file")->required();

  auto* classify = app.add_subcommand("classify", "Decide every property of an act");
  classify->add_option("file", file, "Input file");
  auto* act_opt = classify->add_option("--act", act_name, "Act to classify");
  auto* regular_opt = classify->add_option(
      "--regular", regular,
      "Classify the regular act of a monoid (trivial, M2, Z<m> or a monoid in FILE)");
  act_opt->excludes(regular_opt);
  classify->add_flag("--json", json, "Emit the JSON report");

  auto* endos = app.add_subcommand("endos", "List endomorphisms of an act");
  endos->add_option("file", file, "Input file")->required();
  endos->add_option("--act", act_name, "Act")->required();

  auto* congruences =
      app.add_subcommand("congruences", "List congruences of an act");
  congruences->add_option("file", file, "Input file")->required();
  congruences->add_option("--act", act_name, "Act")->required();

  hopfact::CorpusSpec spec;
  std::string theorems;
  std::uint64_t seed = 0;
  auto* suite = app.add_subcommand("suite", "Check the theorem suite");
  suite->add_option("--max-monoid", spec.max_monoid_size,
                    "Largest monoid size in the corpus")
      ->capture_default_str();
  suite->add_option("--max-act", spec.max_act_size,
                    "Largest act size in the corpus")
      ->capture_default_str();
  suite->add_option("--theorems", theorems, "Comma-separated ids, e.g. T1,T4");
  auto* seed_opt = suite->add_option("--seed", seed, "Seed for random samples");
  suite->add_option("--samples", spec.samples,
                    "Random acts beyond the exhaustive range")
      ->needs(seed_opt);
  suite->add_flag("--json", json, "Emit the JSON report");

  std::size_t p = 2;
  std::size_t max_n = 4;
  auto* family = app.add_subcommand(
      "family36", "r-chain index of x in prod_{n<=N} (Z/p^n, *)");
  family->add_option("--p", p, "Prime")->capture_default_str();
  family->add_option("--max-n", max_n, "Largest N")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : cli::exit_input;
  }

  auto load_or_fail = [&](std::string const& path) -> std::optional<std::string> {
    auto text = read_file(path);
    if (!text) {
      std::cerr << "error: cannot read " << path << "\n";
    }
    return text;
  };

  if (validate->parsed()) {
    auto text = load_or_fail(file);
    return text ? emit(cli::validate(*text)) : cli::exit_input;
  }
  if (classify->parsed()) {
    if (!regular.empty()) {
      std::optional<std::string> text;
      if (!file.empty()) {
        text = load_or_fail(file);
        if (!text) {
          return cli::exit_input;
        }
      }
      return emit(cli::classify_regular(text, regular, json));
    }
    if (file.empty() || act_name.empty()) {
      std::cerr << "error: classify needs FILE --act NAME or --regular NAME\n";
      return cli::exit_input;
    }
    auto text = load_or_fail(file);
    return text ? emit(cli::classify(*text, act_name, json)) : cli::exit_input;
  }
  if (endos->parsed()) {
    auto text = load_or_fail(file);
    return text ? emit(cli::endos(*text, act_name)) : cli::exit_input;
  }
  if (congruences->parsed()) {
    auto text = load_or_fail(file);
    return text ? emit(cli::congruences(*text, act_name)) : cli::exit_input;
  }
  if (suite->parsed()) {
    try {
      std::stringstream list(theorems);
      for (std::string item; std::getline(list, item, ',');) {
        if (!item.empty()) {
          spec.theorems.push_back(hopfact::parse_theorem_id(item));
        }
      }
    } catch (hopfact::Error const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::exit_input;
    }
    if (*seed_opt) {
      spec.seed = seed;
    }
    return emit(cli::suite(spec, json));
  }
  if (family->parsed()) {
    return emit(cli::family36(p, max_n));
  }
  return cli::exit_input;
}
