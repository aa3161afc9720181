#pragma once

// Subcommand implementations for the deptree CLI. Each command writes to the
// given streams and returns the process exit code (0 clean, 1 fatal,
// 2 partial: some sentences failed but output was still produced).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "deptree/deptree.hpp"

namespace deptree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

inline std::vector<int> parse_heads(const std::string& text) {
  std::vector<int> heads;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    const auto v = detail::parse_int(first == std::string::npos ? "" : item.substr(first, last - first + 1));
    if (!v) throw Error("head list entry '" + item + "' is not an integer");
    heads.push_back(*v);
  }
  return heads;
}

// Reads every sentence of every path ("-" is stdin), in order.
inline std::vector<SentenceOutcome> read_sentences(const std::vector<std::string>& paths) {
  std::vector<SentenceOutcome> out;
  for (const auto& path : paths) {
    if (path == "-") {
      auto part = parse_conllu(std::cin);
      std::move(part.begin(), part.end(), std::back_inserter(out));
      continue;
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    auto part = parse_conllu(in);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// Classifies trees on `jobs` threads. Results keep input order.
inline std::vector<ClassificationRecord> classify_all(const std::vector<const DepTree*>& trees,
                                                      const ClassifyOptions& opts, int jobs) {
  std::vector<ClassificationRecord> out(trees.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trees.size();) out[i] = classify(*trees[i], opts);
  };
  const int n = std::max(1, jobs);
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::vector<std::string> paths;
  ReportFormat format = ReportFormat::Csv;
  ClassifyOptions classify;
  int jobs = 1;
};

inline TreebankReport build_report(const std::vector<SentenceOutcome>& sentences,
                                   const ClassifyOptions& opts, int jobs) {
  std::vector<const DepTree*> trees;
  for (const auto& s : sentences)
    if (const auto* rec = std::get_if<SentenceRecord>(&s)) trees.push_back(&rec->tree);
  const auto records = classify_all(trees, opts, jobs);

  TreebankReport report(opts.attardi_cap);
  std::size_t k = 0;
  for (const auto& s : sentences) {
    if (const auto* err = std::get_if<SentenceError>(&s))
      report.add_error(*err);
    else
      report.add(records[k++]);
  }
  report.check_monotone();
  return report;
}

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<SentenceOutcome> sentences;
  try {
    sentences = read_sentences(o.paths);
  } catch (const Error& e) {
    err << "deptree analyze: " << e.what() << '\n';
    return kExitFatal;
  }
  for (const auto& s : sentences)
    if (const auto* e = std::get_if<SentenceError>(&s))
      err << "line " << e->line << ": " << to_string(e->kind) << ": " << e->message << '\n';
  const TreebankReport report = build_report(sentences, o.classify, o.jobs);
  write_report(report, o.format, out);
  return report.error_total() > 0 ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------------------
// classify

inline std::string render_search(SearchStatus status, int value, int cap) {
  switch (status) {
    case SearchStatus::Found: return std::to_string(value);
    case SearchStatus::AboveCap: return "above_cap(" + std::to_string(cap) + ")";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

inline void print_record(const DepTree& t, const ClassificationRecord& r, const ClassifyOptions& opts,
                         std::ostream& out) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "heads=" << heads_to_string(t) << '\n'
      << "n=" << r.n << '\n'
      << "projective=" << b(r.projective) << '\n'
      << "planar1=" << b(r.planar1) << '\n'
      << "root_covered=" << b(r.root_covered) << '\n'
      << "gap_degree=" << r.gap_degree << '\n'
      << "well_nested=" << b(r.well_nested) << '\n'
      << "wg_level=" << (r.wg_level ? std::to_string(*r.wg_level) : "none") << '\n'
      << "gap_minding=" << b(r.gap_minding) << '\n'
      << "mild_plus_one_inherit=" << b(r.mild_plus_one_inherit) << '\n'
      << "head_split_wg1=" << b(r.head_split_wg1) << '\n'
      << "page_number=" << render_search(r.page_number_status, r.page_number, 0) << '\n'
      << "one_endpoint_crossing=" << b(r.one_endpoint_crossing) << '\n'
      << "attardi_degree=" << render_search(r.attardi_status, r.attardi_degree, opts.attardi_cap) << '\n'
      << "crossings=" << r.crossings << '\n'
      << "max_dependency_length=" << r.max_dependency_length << '\n';
}

inline int cmd_classify(const std::string& heads, const ClassifyOptions& opts, std::ostream& out,
                        std::ostream& err) {
  try {
    const DepTree t = validate_tree(parse_heads(heads));
    print_record(t, classify(t, opts), opts, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "deptree classify: " << e.what() << '\n';
    return kExitFatal;
  }
}

// ---------------------------------------------------------------------------
// transform

enum class TransformMode { PseudoProjective, Rearrange };

struct TransformOptions {
  TransformMode mode = TransformMode::PseudoProjective;
  std::vector<std::string> paths;
  std::optional<std::string> heads;  // single tree instead of files
  char separator = kDefaultLiftSeparator;
  bool round_trip = false;
  // Random labeled sample instead of input, for round-trip measurement.
  int random_count = 0;
  int random_max_n = 10;
  std::uint64_t seed = 1;
  int alphabet_size = 5;
};

inline std::vector<std::string> label_alphabet(int size) {
  std::vector<std::string> out;
  for (int i = 0; i < size; ++i) out.push_back("l" + std::to_string(i));
  return out;
}

// The seeded labeled sample used for round-trip measurement: tree k has
// 1 + (draw mod max_n) nodes.
inline std::vector<DepTree> random_labeled_sample(int count, int max_n, std::uint64_t seed, int alphabet_size) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  const auto alphabet = label_alphabet(alphabet_size);
  std::vector<DepTree> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(random_labeled_tree(size(rng), rng, alphabet));
  return out;
}

struct RoundTripStats {
  std::size_t trees = 0;
  std::size_t recovered = 0;
  std::size_t lifts = 0;
  std::size_t unresolved = 0;
  double rate() const { return TreebankReport::ratio(recovered, trees); }
};

inline RoundTripStats measure_round_trip(const std::vector<DepTree>& trees, char sep) {
  RoundTripStats s;
  for (const DepTree& t : trees) {
    const LiftResult lifted = pseudo_projectivize(t, sep);
    const LowerResult lowered = deprojectivize(lifted.tree, sep);
    ++s.trees;
    s.lifts += static_cast<std::size_t>(lifted.lifts);
    s.unresolved += static_cast<std::size_t>(lowered.unresolved);
    if (lowered.tree == t) ++s.recovered;
  }
  return s;
}

inline SentenceRecord record_from_tree(const DepTree& t) {
  SentenceRecord r{t, {}, {}, 0, {}};
  for (Node i = 1; i <= t.size(); ++i) {
    r.forms.push_back("_");
    r.rows.push_back({std::to_string(i), "_", "_", "_", "_", "_", std::to_string(t.head(i)),
                      t.has_labels() ? t.label(i) : "_", "_", "_"});
  }
  return r;
}

inline void write_sentence(const SentenceRecord& s, const DepTree& t, const std::vector<Node>& order,
                           std::ostream& out) {
  for (const auto& [k, v] : s.metadata) out << "# " << k << (v.empty() ? "" : " = " + v) << '\n';
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& row = s.rows[static_cast<std::size_t>(order[pos] - 1)];
    const Node node = static_cast<Node>(pos) + 1;
    for (std::size_t c = 0; c < kConlluColumns; ++c) {
      if (c) out << '\t';
      if (c == kId)
        out << node;
      else if (c == kHead)
        out << t.head(node);
      else if (c == kDeprel && t.has_labels())
        out << t.label(node);
      else
        out << row[c];
    }
    out << '\n';
  }
  out << '\n';
}

inline int cmd_transform(const TransformOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<SentenceOutcome> sentences;
  try {
    if (o.random_count > 0) {
      for (const auto& t : random_labeled_sample(o.random_count, o.random_max_n, o.seed, o.alphabet_size))
        sentences.emplace_back(record_from_tree(t));
    } else if (o.heads) {
      sentences.emplace_back(record_from_tree(validate_tree(parse_heads(*o.heads))));
    } else {
      sentences = read_sentences(o.paths);
    }
  } catch (const Error& e) {
    err << "deptree transform: " << e.what() << '\n';
    return kExitFatal;
  }

  bool partial = false;
  std::vector<DepTree> inputs;
  for (const auto& s : sentences) {
    if (const auto* e = std::get_if<SentenceError>(&s)) {
      err << "line " << e->line << ": " << to_string(e->kind) << ": " << e->message << '\n';
      partial = true;
      continue;
    }
    inputs.push_back(std::get<SentenceRecord>(s).tree);
  }

  if (o.round_trip) {
    if (o.mode != TransformMode::PseudoProjective) {
      err << "deptree transform: --round-trip applies to --pseudo-projective only\n";
      return kExitFatal;
    }
    const RoundTripStats st = measure_round_trip(inputs, o.separator);
    out << "trees=" << st.trees << '\n'
        << "recovered=" << st.recovered << '\n'
        << "lifts=" << st.lifts << '\n'
        << "unresolved_annotations=" << st.unresolved << '\n'
        << "round_trip_recovery=" << format_fraction(st.rate()) << '\n';
    return partial ? kExitPartial : kExitOk;
  }

  for (const auto& s : sentences) {
    const auto* rec = std::get_if<SentenceRecord>(&s);
    if (!rec) continue;
    const int n = rec->tree.size();
    std::vector<Node> order(static_cast<std::size_t>(n));
    if (o.mode == TransformMode::PseudoProjective) {
      for (Node i = 1; i <= n; ++i) order[static_cast<std::size_t>(i - 1)] = i;
      write_sentence(*rec, pseudo_projectivize(rec->tree, o.separator).tree, order, out);
    } else {
      const Permutation p = projective_rearrangement(rec->tree);
      for (Node i = 1; i <= n; ++i) order[static_cast<std::size_t>(p(i) - 1)] = i;
      write_sentence(*rec, apply_permutation(rec->tree, p), order, out);
    }
  }
  return partial ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------------------
// verify-lattice

inline int cmd_verify_lattice(int max_n, std::ostream& out, std::ostream& err, Deciders deciders = {}) {
  LatticeReport report;
  try {
    report = verify_lattice(max_n, std::move(deciders));
  } catch (const Error& e) {
    err << "deptree verify-lattice: " << e.what() << '\n';
    return kExitFatal;
  }
  for (const auto& p : report.properties) {
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << " (checked " << p.checked << ", "
        << (p.existential ? "witnesses " : "violations ") << p.hits << ")";
    if (p.example && (!p.passed() || p.existential))
      out << (p.existential ? " witness: " : " counterexample: ") << heads_to_string(*p.example);
    out << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << " all properties over " << report.trees
      << " trees with n <= " << max_n << '\n';
  return report.passed() ? kExitOk : kExitFatal;
}

// ---------------------------------------------------------------------------
// generate

// Class filters accepted by `generate --class`.
inline const std::map<std::string, TreePredicate>& class_filters() {
  static const std::map<std::string, TreePredicate> filters = [] {
    std::map<std::string, TreePredicate> m;
    m["any"] = [](const DepTree&) { return true; };
    m["projective"] = [](const DepTree& t) { return is_projective(t); };
    m["non-projective"] = [](const DepTree& t) { return !is_projective(t); };
    m["1planar"] = [](const DepTree& t) { return is_planar1(t); };
    m["2planar"] = [](const DepTree& t) { return is_k_planar(t, 2); };
    m["3planar"] = [](const DepTree& t) { return is_k_planar(t, 3); };
    m["2planar-not-1planar"] = [](const DepTree& t) { return !is_planar1(t) && is_k_planar(t, 2); };
    m["3planar-not-2planar"] = [](const DepTree& t) { return !is_k_planar(t, 2) && is_k_planar(t, 3); };
    m["1planar-not-projective"] = [](const DepTree& t) { return is_planar1(t) && !is_projective(t); };
    m["root-covered"] = [](const DepTree& t) { return is_root_covered(t); };
    m["well-nested"] = [](const DepTree& t) { return is_well_nested(t); };
    m["ill-nested"] = [](const DepTree& t) { return !is_well_nested(t); };
    m["wg1"] = [](const DepTree& t) { return in_wg(t, 1); };
    m["wg2"] = [](const DepTree& t) { return in_wg(t, 2); };
    m["wg1-not-projective"] = [](const DepTree& t) { return in_wg(t, 1) && !is_projective(t); };
    m["m0i"] = [](const DepTree& t) { return is_gap_minding(t); };
    m["m1i"] = [](const DepTree& t) { return is_mild_plus_one_inherit(t); };
    m["head-split-wg1"] = [](const DepTree& t) { return is_head_split_wg1(t); };
    m["1ec"] = [](const DepTree& t) { return is_one_endpoint_crossing(t); };
    m["not-1ec"] = [](const DepTree& t) { return !is_one_endpoint_crossing(t); };
    m["1ec-ill-nested"] = [](const DepTree& t) { return is_one_endpoint_crossing(t) && !is_well_nested(t); };
    m["well-nested-not-1ec"] = [](const DepTree& t) { return is_well_nested(t) && !is_one_endpoint_crossing(t); };
    m["ad1"] = [](const DepTree& t) { return attardi_reachable(t, 1); };
    m["ad2"] = [](const DepTree& t) { return attardi_reachable(t, 2); };
    m["ad3"] = [](const DepTree& t) { return attardi_reachable(t, 3); };
    m["ad2-not-ad1"] = [](const DepTree& t) { return !attardi_reachable(t, 1) && attardi_reachable(t, 2); };
    return m;
  }();
  return filters;
}

struct GenerateOptions {
  int n = 1;
  int count = 1;
  std::uint64_t seed = 1;
  std::string class_name = "any";
  std::size_t max_attempts = 1'000'000;  // per emitted tree
};

inline int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) {
    err << "deptree generate: --n must be >= 1\n";
    return kExitFatal;
  }
  const auto& filters = class_filters();
  const auto it = filters.find(o.class_name);
  if (it == filters.end()) {
    err << "deptree generate: unknown class '" << o.class_name << "'; valid classes:";
    for (const auto& [name, _] : filters) err << ' ' << name;
    err << '\n';
    return kExitFatal;
  }
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < o.count; ++k) {
    std::size_t attempts = 0;
    for (;;) {
      const DepTree t = random_tree(o.n, rng);
      if (it->second(t)) {
        out << heads_to_string(t) << '\n';
        break;
      }
      if (++attempts >= o.max_attempts) {
        err << "deptree generate: no tree of class '" << o.class_name << "' with n=" << o.n
            << " found in " << o.max_attempts << " draws\n";
        return kExitFatal;
      }
    }
  }
  return kExitOk;
}

}  // namespace deptree::cli
