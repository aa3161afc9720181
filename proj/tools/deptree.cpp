// deptree: classify dependency trees and treebanks by formal tree class.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

deptree::ReportFormat default_format() {
  if (const char* env = std::getenv("DEPTREE_FORMAT"))
    if (auto f = deptree::parse_report_format(env)) return *f;
  return deptree::ReportFormat::Csv;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = deptree::cli;
  CLI::App app{"Formal class membership, transforms and coverage statistics for dependency trees"};
  app.require_subcommand(1);

  // analyze
  cli::AnalyzeOptions analyze;
  std::string format_name;
  std::string output_path;
  auto* a = app.add_subcommand("analyze", "Class coverage report over CoNLL-U files");
  a->add_option("paths", analyze.paths, "CoNLL-U files ('-' for stdin)")->required();
  a->add_option("--format", format_name, "csv or json-lines (default: $DEPTREE_FORMAT or csv)");
  a->add_option("-o,--output", output_path, "Write the report here instead of stdout");
  a->add_option("--attardi-cap", analyze.classify.attardi_cap, "Largest Attardi degree searched")
      ->check(CLI::PositiveNumber);
  a->add_option("--budget", analyze.classify.attardi_budget, "Attardi search transition budget")
      ->check(CLI::PositiveNumber);
  a->add_option("--coloring-budget", analyze.classify.coloring_budget, "Page-number search state budget")
      ->check(CLI::PositiveNumber);
  a->add_option("-j,--jobs", analyze.jobs, "Parallel classification workers")->check(CLI::PositiveNumber);

  // classify
  std::string heads;
  deptree::ClassifyOptions classify_opts;
  auto* c = app.add_subcommand("classify", "Every class membership and measure of one tree");
  c->add_option("--heads", heads, "Comma-separated head list, e.g. 0,4,1,1")->required();
  c->add_option("--attardi-cap", classify_opts.attardi_cap)->check(CLI::PositiveNumber);
  c->add_option("--budget", classify_opts.attardi_budget)->check(CLI::PositiveNumber);

  // transform
  cli::TransformOptions transform;
  bool pseudo = false, rearrange = false;
  std::string separator = "%";
  auto* t = app.add_subcommand("transform", "Pseudo-projectivize or projectively rearrange trees");
  auto* pp = t->add_flag("--pseudo-projective", pseudo, "Lift non-projective arcs, annotating labels");
  auto* rr = t->add_flag("--rearrange", rearrange, "Reorder words into a projective arrangement");
  pp->excludes(rr);
  t->add_option("paths", transform.paths, "CoNLL-U files ('-' for stdin)");
  t->add_option("--heads", transform.heads, "Transform a single comma-separated head list");
  t->add_option("--separator", separator, "Annotation separator in lifted labels");
  t->add_flag("--round-trip", transform.round_trip, "Report how many trees deprojectivize back exactly");
  t->add_option("--random-count", transform.random_count, "Use a seeded random labeled sample of this size");
  t->add_option("--max-n", transform.random_max_n, "Largest tree in the random sample")->check(CLI::PositiveNumber);
  t->add_option("--seed", transform.seed, "Seed of the random sample");
  t->add_option("--alphabet", transform.alphabet_size, "Label alphabet size of the random sample")
      ->check(CLI::PositiveNumber);

  // verify-lattice
  int max_n = 6;
  auto* v = app.add_subcommand("verify-lattice", "Exhaustively check class inclusions and equivalences");
  v->add_option("--max-n", max_n, "Largest tree size enumerated (<= 7)");

  // generate
  cli::GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Seeded random trees as head lists");
  g->add_option("--n", gen.n, "Tree size")->required();
  g->add_option("--count", gen.count, "Number of trees");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--class", gen.class_name, "Keep only trees of this class (rejection sampling)");

  CLI11_PARSE(app, argc, argv);

  if (*a) {
    analyze.format = default_format();
    if (!format_name.empty()) {
      auto f = deptree::parse_report_format(format_name);
      if (!f) {
        std::cerr << "deptree analyze: unknown format '" << format_name << "'\n";
        return cli::kExitFatal;
      }
      analyze.format = *f;
    }
    if (output_path.empty()) return cli::cmd_analyze(analyze, std::cout, std::cerr);
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "deptree analyze: cannot write '" << output_path << "'\n";
      return cli::kExitFatal;
    }
    return cli::cmd_analyze(analyze, out, std::cerr);
  }
  if (*c) return cli::cmd_classify(heads, classify_opts, std::cout, std::cerr);
  if (*t) {
    if (pseudo == rearrange) {
      std::cerr << "deptree transform: pass exactly one of --pseudo-projective or --rearrange\n";
      return cli::kExitFatal;
    }
    if (separator.size() != 1) {
      std::cerr << "deptree transform: --separator must be a single character\n";
      return cli::kExitFatal;
    }
    transform.mode = pseudo ? cli::TransformMode::PseudoProjective : cli::TransformMode::Rearrange;
    transform.separator = separator.front();
    if (transform.paths.empty() && !transform.heads && transform.random_count == 0)
      transform.paths.push_back("-");
    return cli::cmd_transform(transform, std::cout, std::cerr);
  }
  if (*v) return cli::cmd_verify_lattice(max_n, std::cout, std::cerr);
  if (*g) return cli::cmd_generate(gen, std::cout, std::cerr);
  return cli::kExitFatal;
}
