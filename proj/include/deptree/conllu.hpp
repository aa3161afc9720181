#pragma once

// CoNLL-U ingestion and treebank coverage reports.
//
// Only basic trees are read: multiword-token rows ("3-4") and empty-node
// rows ("5.1") are skipped, and the DEPS column is ignored.

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "deptree/checkers.hpp"
#include "deptree/errors.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr std::size_t kConlluColumns = 10;
enum ConlluColumn : std::size_t { kId = 0, kForm = 1, kHead = 6, kDeprel = 7 };

struct SentenceRecord {
  DepTree tree;
  std::vector<std::string> forms;
  std::vector<std::pair<std::string, std::string>> metadata;
  int source_line = 0;  // line of the first row or comment of the sentence
  // The ten columns of each syntactic word row, in order.
  std::vector<std::array<std::string, kConlluColumns>> rows;
};

struct SentenceError {
  enum class Kind { MalformedRow, NonIntegerHead, InvalidTree };
  Kind kind = Kind::MalformedRow;
  TreeErrorKind tree_kind = TreeErrorKind::Empty;  // for InvalidTree
  int line = 0;
  std::string message;
};

inline const char* to_string(SentenceError::Kind k) {
  switch (k) {
    case SentenceError::Kind::MalformedRow: return "MalformedRow";
    case SentenceError::Kind::NonIntegerHead: return "NonIntegerHead";
    case SentenceError::Kind::InvalidTree: return "InvalidTree";
  }
  return "Unknown";
}

using SentenceOutcome = std::variant<SentenceRecord, SentenceError>;

namespace detail {

inline std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

// Streams sentences out of CoNLL-U text. Each blank-line separated block
// yields one record or one error; reading always resumes at the next block.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in) : in_(in) {}

  std::optional<SentenceOutcome> next() {
    Block b;
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        // Comment-only blocks carry no sentence.
        if (b.started && !b.error && b.rows.empty()) b = Block{};
        if (b.started) return finish(std::move(b));
        continue;
      }
      if (!b.started) {
        b.started = true;
        b.first_line = line_no_;
      }
      if (b.error) continue;
      if (line.front() == '#') {
        add_comment(b, line);
        continue;
      }
      add_row(b, line);
    }
    if (b.started && (b.error || !b.rows.empty())) return finish(std::move(b));
    return std::nullopt;
  }

 private:
  struct Block {
    bool started = false;
    int first_line = 0;
    std::optional<SentenceError> error;
    std::vector<int> heads;
    std::vector<std::string> labels;
    std::vector<std::string> forms;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::array<std::string, kConlluColumns>> rows;
  };

  static void add_comment(Block& b, const std::string& line) {
    std::string_view body(line);
    body.remove_prefix(1);
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return std::string(s);
    };
    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
      b.metadata.emplace_back(trim(body), "");
    else
      b.metadata.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }

  void add_row(Block& b, const std::string& line) {
    auto cols = detail::split_tabs(line);
    if (cols.size() != kConlluColumns) {
      b.error = SentenceError{SentenceError::Kind::MalformedRow, TreeErrorKind::Empty, line_no_,
                              "expected 10 tab-separated columns, found " + std::to_string(cols.size())};
      return;
    }
    const std::string& id = cols[kId];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) return;
    const auto idv = detail::parse_int(id);
    if (!idv || *idv != static_cast<int>(b.heads.size()) + 1) {
      b.error = SentenceError{SentenceError::Kind::MalformedRow, TreeErrorKind::Empty, line_no_,
                              "word ID '" + id + "' out of sequence"};
      return;
    }
    const auto head = detail::parse_int(cols[kHead]);
    if (!head) {
      b.error = SentenceError{SentenceError::Kind::NonIntegerHead, TreeErrorKind::Empty, line_no_,
                              "HEAD '" + cols[kHead] + "' is not an integer"};
      return;
    }
    b.heads.push_back(*head);
    b.labels.push_back(cols[kDeprel]);
    b.forms.push_back(cols[kForm]);
    std::array<std::string, kConlluColumns> row;
    for (std::size_t c = 0; c < kConlluColumns; ++c) row[c] = std::move(cols[c]);
    b.rows.push_back(std::move(row));
  }

  SentenceOutcome finish(Block b) {
    if (b.error) return *b.error;
    try {
      SentenceRecord r{validate_tree(std::move(b.heads), std::move(b.labels)), std::move(b.forms),
                       std::move(b.metadata), b.first_line, std::move(b.rows)};
      return r;
    } catch (const InvalidTree& e) {
      return SentenceError{SentenceError::Kind::InvalidTree, e.kind(), b.first_line, e.what()};
    }
  }

  std::istream& in_;
  int line_no_ = 0;
};

inline std::vector<SentenceOutcome> parse_conllu(std::istream& in) {
  std::vector<SentenceOutcome> out;
  ConlluReader reader(in);
  while (auto s = reader.next()) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Treebank report

struct ClassCount {
  std::string name;
  std::size_t count = 0;
};

// Aggregated class coverage over a stream of classified trees. Counts are
// associative, so partial reports over disjoint inputs can be merged.
class TreebankReport {
 public:
  explicit TreebankReport(int attardi_cap = 3) : attardi_cap_(attardi_cap) {
    for (const char* name : {"projective", "1planar", "2planar", "3planar", "root-covered",
                             "well-nested", "wg1", "wg2", "m0i", "m1i", "head-split-wg1", "1ec"})
      classes_.push_back({name, 0});
    for (int d = 1; d <= attardi_cap; ++d) classes_.push_back({"ad" + std::to_string(d), 0});
    classes_.push_back({"ad-above-cap", 0});
    for (const char* name : {"malformed_row", "non_integer_head", "multiple_roots", "cycle",
                             "out_of_range", "empty_sentence", "attardi_budget_exceeded",
                             "coloring_budget_exceeded"})
      errors_.push_back({name, 0});
  }

  void add(const ClassificationRecord& r) {
    ++total_trees_;
    ++sentences_;
    bump("projective", r.projective);
    bump("1planar", r.planar1);
    bump("2planar", r.k_planar(2));
    bump("3planar", r.k_planar(3));
    bump("root-covered", r.root_covered);
    bump("well-nested", r.well_nested);
    bump("wg1", r.in_wg(1));
    bump("wg2", r.in_wg(2));
    bump("m0i", r.gap_minding);
    bump("m1i", r.mild_plus_one_inherit);
    bump("head-split-wg1", r.head_split_wg1);
    bump("1ec", r.one_endpoint_crossing);
    for (int d = 1; d <= attardi_cap_; ++d) bump("ad" + std::to_string(d), r.in_attardi(d));
    bump("ad-above-cap", r.attardi_status == SearchStatus::AboveCap);
    if (r.attardi_status == SearchStatus::BudgetExceeded) bump_error("attardi_budget_exceeded");
    if (r.page_number_status == SearchStatus::BudgetExceeded) bump_error("coloring_budget_exceeded");

    ++gap_degree_hist_[r.gap_degree];
    if (r.page_number_status == SearchStatus::Found) ++page_number_hist_[r.page_number];
    ++crossings_hist_[r.crossings];
    for (int len : r.dependency_lengths) {
      ++dependency_length_hist_[len];
      ++arcs_;
    }
  }

  void add_error(const SentenceError& e) {
    ++sentences_;
    switch (e.kind) {
      case SentenceError::Kind::MalformedRow: bump_error("malformed_row"); break;
      case SentenceError::Kind::NonIntegerHead: bump_error("non_integer_head"); break;
      case SentenceError::Kind::InvalidTree:
        switch (e.tree_kind) {
          case TreeErrorKind::MultipleRoots: bump_error("multiple_roots"); break;
          case TreeErrorKind::Cycle: bump_error("cycle"); break;
          case TreeErrorKind::OutOfRange: bump_error("out_of_range"); break;
          case TreeErrorKind::Empty: bump_error("empty_sentence"); break;
        }
        break;
    }
  }

  void merge(const TreebankReport& o) {
    if (o.attardi_cap_ != attardi_cap_) throw Error("cannot merge reports with different Attardi caps");
    total_trees_ += o.total_trees_;
    sentences_ += o.sentences_;
    arcs_ += o.arcs_;
    for (std::size_t i = 0; i < classes_.size(); ++i) classes_[i].count += o.classes_[i].count;
    for (std::size_t i = 0; i < errors_.size(); ++i) errors_[i].count += o.errors_[i].count;
    for (auto [k, v] : o.gap_degree_hist_) gap_degree_hist_[k] += v;
    for (auto [k, v] : o.page_number_hist_) page_number_hist_[k] += v;
    for (auto [k, v] : o.crossings_hist_) crossings_hist_[k] += v;
    for (auto [k, v] : o.dependency_length_hist_) dependency_length_hist_[k] += v;
  }

  std::size_t total_trees() const noexcept { return total_trees_; }
  std::size_t sentences() const noexcept { return sentences_; }
  std::size_t arcs() const noexcept { return arcs_; }
  std::size_t error_total() const {
    std::size_t s = 0;
    for (const auto& e : errors_) s += e.count;
    return s;
  }
  int attardi_cap() const noexcept { return attardi_cap_; }
  const std::vector<ClassCount>& classes() const noexcept { return classes_; }
  const std::vector<ClassCount>& errors() const noexcept { return errors_; }
  std::size_t count(const std::string& name) const {
    for (const auto& c : classes_)
      if (c.name == name) return c.count;
    throw Error("unknown report class '" + name + "'");
  }
  double fraction(const std::string& name) const { return ratio(count(name), total_trees_); }
  const std::map<int, std::size_t>& gap_degree_histogram() const { return gap_degree_hist_; }
  const std::map<int, std::size_t>& page_number_histogram() const { return page_number_hist_; }
  const std::map<int, std::size_t>& crossings_histogram() const { return crossings_hist_; }
  const std::map<int, std::size_t>& dependency_length_histogram() const { return dependency_length_hist_; }

  static double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }

  // Inclusion chains whose counts must not decrease toward the superset.
  std::vector<std::pair<std::string, std::string>> inclusion_chain_links() const {
    std::vector<std::pair<std::string, std::string>> links{
        {"projective", "1planar"}, {"1planar", "2planar"}, {"2planar", "3planar"},
        {"projective", "wg1"},     {"wg1", "wg2"},         {"m0i", "m1i"},
        {"m1i", "wg1"},            {"head-split-wg1", "wg1"}, {"1ec", "2planar"},
        {"wg2", "well-nested"}};
    for (int d = 1; d < attardi_cap_; ++d)
      links.emplace_back("ad" + std::to_string(d), "ad" + std::to_string(d + 1));
    return links;
  }

  // Throws when a subset class outnumbers its superset.
  void check_monotone() const {
    for (const auto& [sub, sup] : inclusion_chain_links())
      if (count(sub) > count(sup))
        throw Error("report violates inclusion " + sub + " <= " + sup + ": " +
                    std::to_string(count(sub)) + " > " + std::to_string(count(sup)));
  }

 private:
  void bump(const std::string& name, bool hit) {
    if (!hit) return;
    for (auto& c : classes_)
      if (c.name == name) {
        ++c.count;
        return;
      }
  }
  void bump_error(const std::string& name) {
    for (auto& c : errors_)
      if (c.name == name) {
        ++c.count;
        return;
      }
  }

  int attardi_cap_;
  std::size_t total_trees_ = 0;
  std::size_t sentences_ = 0;
  std::size_t arcs_ = 0;
  std::vector<ClassCount> classes_;
  std::vector<ClassCount> errors_;
  std::map<int, std::size_t> gap_degree_hist_;
  std::map<int, std::size_t> page_number_hist_;
  std::map<int, std::size_t> crossings_hist_;
  std::map<int, std::size_t> dependency_length_hist_;
};

enum class ReportFormat { Csv, JsonLines };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json-lines" || s == "jsonl") return ReportFormat::JsonLines;
  return std::nullopt;
}

// Fractions are rendered with four decimals in both formats.
inline std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", f);
  return buf;
}

namespace detail {

struct ReportRow {
  std::string key;
  std::size_t count;
  std::string fraction;
};

// Every CSV row after the header, in output order.
inline std::vector<ReportRow> report_rows(const TreebankReport& r) {
  std::vector<ReportRow> rows;
  const auto total = r.total_trees();
  rows.push_back({"total", total, format_fraction(total ? 1.0 : 0.0)});
  for (const auto& c : r.classes())
    rows.push_back({c.name, c.count, format_fraction(TreebankReport::ratio(c.count, total))});
  rows.push_back({"error:sentences", r.sentences(), format_fraction(r.sentences() ? 1.0 : 0.0)});
  for (const auto& e : r.errors())
    rows.push_back({"error:" + e.name, e.count, format_fraction(TreebankReport::ratio(e.count, r.sentences()))});
  auto hist = [&](const std::string& name, const std::map<int, std::size_t>& h, std::size_t den) {
    for (auto [k, v] : h)
      rows.push_back({"hist:" + name + ":" + std::to_string(k), v,
                      format_fraction(TreebankReport::ratio(v, den))});
  };
  hist("gap_degree", r.gap_degree_histogram(), total);
  hist("page_number", r.page_number_histogram(), total);
  hist("crossings", r.crossings_histogram(), total);
  hist("dependency_length", r.dependency_length_histogram(), r.arcs());
  return rows;
}

}  // namespace detail

inline void write_report(const TreebankReport& r, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) {
    out << "key,count,fraction\n";
    for (const auto& row : detail::report_rows(r))
      out << row.key << ',' << row.count << ',' << row.fraction << '\n';
    return;
  }

  using nlohmann::ordered_json;
  const auto total = r.total_trees();
  for (const auto& c : r.classes()) {
    ordered_json j;
    j["class"] = c.name;
    j["count"] = c.count;
    j["fraction"] = std::stod(format_fraction(TreebankReport::ratio(c.count, total)));
    out << j.dump() << '\n';
  }
  ordered_json s;
  s["summary"] = true;
  s["total_trees"] = total;
  s["sentences"] = r.sentences();
  s["arcs"] = r.arcs();
  s["attardi_cap"] = r.attardi_cap();
  ordered_json errors = ordered_json::object();
  for (const auto& e : r.errors()) errors[e.name] = e.count;
  s["errors"] = errors;
  auto hist = [](const std::map<int, std::size_t>& h) {
    ordered_json j = ordered_json::object();
    for (auto [k, v] : h) j[std::to_string(k)] = v;
    return j;
  };
  ordered_json hists;
  hists["gap_degree"] = hist(r.gap_degree_histogram());
  hists["page_number"] = hist(r.page_number_histogram());
  hists["crossings"] = hist(r.crossings_histogram());
  hists["dependency_length"] = hist(r.dependency_length_histogram());
  s["histograms"] = hists;
  out << s.dump() << '\n';
}

}  // namespace deptree
