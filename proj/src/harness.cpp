#include "privword/harness.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "privword/error.hpp"
#include "privword/privileged.hpp"

namespace privword::harness {

using json = nlohmann::ordered_json;

namespace {

struct SeriesShape {
  ComplexityKind kind;
  PrefixClass cls;
};

SeriesShape shape_of(Series s) {
  switch (s) {
    case Series::A: return {ComplexityKind::A, {}};
    case Series::P: return {ComplexityKind::P, {}};
    case Series::B: return {ComplexityKind::B, {}};
    case Series::A_00: return {ComplexityKind::A, {"00"_w}};
    case Series::A_010: return {ComplexityKind::A, {"010"_w}};
    case Series::A_0110: return {ComplexityKind::A, {"0110"_w}};
    case Series::B_00: return {ComplexityKind::B, {"00"_w}};
    case Series::B_010: return {ComplexityKind::B, {"010"_w}};
    case Series::B_0110: return {ComplexityKind::B, {"0110"_w}};
  }
  throw std::logic_error("unhandled series");
}

std::vector<Series> expand_series(const std::string& kind) {
  if (kind == "all") return all_series();
  if (kind == "classes") return class_series();
  return {parse_series(kind)};
}

}  // namespace

Count oracle_value(const FactorIndex& idx, Series s, Index n) {
  const auto shape = shape_of(s);
  return oracle_complexity(idx, static_cast<std::size_t>(n), shape.kind, shape.cls);
}

ComplexityTable oracle_table(const FactorIndex& idx, Series s, Index max_n) {
  ComplexityTable t{s, Provenance::Oracle, {}};
  for (Index n = 0; n <= max_n; ++n) t.entries.emplace_back(n, oracle_value(idx, s, n));
  return t;
}

bool has_recurrence(const std::string& word) { return word == "tm" || word == "tm-theta"; }

VerificationReport verify(const FactorIndex& idx, const std::vector<Series>& series, Index max_n) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.word = idx.name();
  report.series = series;
  report.max_n = max_n;
  report.prefix_length = idx.text().size();
  report.certified_length = idx.certified_length();
  auto& rec = recurrences();
  for (Index n = 0; n <= max_n; ++n) {
    for (Series s : series) {
      const Count o = oracle_value(idx, s, n);
      const Count r = rec.value(s, n);
      if (o != r) report.mismatches.push_back({s, n, o, r});
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GapReport scan_gap(Index n) {
  GapReport g;
  g.interval = gap_interval(n);
  auto& rec = recurrences();
  g.all_zero = true;
  for (Index k = g.interval.lo; k <= g.interval.hi && g.all_zero; ++k) g.all_zero = rec.A(k) == 0;
  g.left_witness = rec.A(g.interval.lo - 1);
  g.right_witness = rec.A(g.interval.hi + 1);
  g.stated_right_point = (Index{1} << (2 * n + 1)) + 2;
  g.stated_right_witness = rec.A(g.stated_right_point);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

struct Options {
  // word
  std::string word_name;
  std::string morphism;
  std::string seed = "0";
  std::size_t len = 16;
  // shared
  std::string kind = "A";
  Index max_n = 0;
  std::string format;
  std::string out_file;
  bool paper_check = false;
  std::string word = "tm";
  Index gap_index = 3;
  std::string what = "privileged";
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::ParseError, "cannot open output file " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_word(const Options& o, std::ostream& out) {
  Word w;
  if (!o.morphism.empty()) {
    const Morphism m = Morphism::parse(o.morphism);
    if (o.seed.size() != 1) throw Error(ErrorCode::ParseError, "--seed must be a single letter");
    w = fixed_point_prefix(m, letter_from_display(o.seed.front()), o.len);
  } else if (!o.word_name.empty()) {
    w = InfiniteWordSpec::builtin(o.word_name).prefix(o.len);
  } else {
    throw Error(ErrorCode::ParseError, "give a built-in word name or --morphism");
  }
  if (o.format == "csv") {
    out << "position,letter\n";
    for (std::size_t i = 0; i < w.size(); ++i) out << i + 1 << ',' << display_char(w[i]) << '\n';
  } else {
    out << w.str() << '\n';
  }
  return kPass;
}

json table_json(const ComplexityTable& t) {
  json entries = json::array();
  for (const auto& [n, v] : t.entries) entries.push_back({{"n", n}, {"value", v}});
  return {{"series", to_string(t.series)}, {"provenance", to_string(t.provenance)}, {"entries", entries}};
}

void write_tables_csv(const std::vector<ComplexityTable>& tables, std::ostream& out) {
  if (tables.size() == 1) {
    out << "n,value,provenance\n";
    for (const auto& [n, v] : tables.front().entries) out << n << ',' << v << ',' << to_string(tables.front().provenance) << '\n';
    return;
  }
  out << "n,series,value,provenance\n";
  const std::size_t rows = tables.front().entries.size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& t : tables) {
      out << t.entries[i].first << ',' << to_string(t.series) << ',' << t.entries[i].second << ','
          << to_string(t.provenance) << '\n';
    }
  }
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const auto series = expand_series(o.kind);
  std::vector<ComplexityTable> tables;
  for (Series s : series) tables.push_back(recurrences().table(s, o.max_n));

  std::vector<std::pair<Index, std::pair<Count, Count>>> paper_mismatches;
  if (o.paper_check) {
    for (const auto& [n, expected] : published_A_table()) {
      const Count got = A(n);
      if (got != expected) paper_mismatches.push_back({n, {expected, got}});
    }
  }

  Output sink(o.out_file, out);
  if (o.format == "json") {
    json doc{{"schema", 1}, {"command", "table"}, {"max", o.max_n}, {"tables", json::array()}};
    for (const auto& t : tables) doc["tables"].push_back(table_json(t));
    if (o.paper_check) {
      json mism = json::array();
      for (const auto& [n, v] : paper_mismatches) mism.push_back({{"n", n}, {"published", v.first}, {"recurrence", v.second}});
      doc["paper_check"] = {{"checked", published_A_table().size()}, {"mismatches", mism}};
    }
    *sink << doc.dump(2) << '\n';
  } else {
    write_tables_csv(tables, *sink);
  }
  if (o.paper_check) {
    for (const auto& [n, v] : paper_mismatches) {
      err << "paper-check mismatch at n=" << n << ": published " << v.first << ", recurrence " << v.second << '\n';
    }
    err << "paper-check: " << published_A_table().size() - paper_mismatches.size() << '/'
        << published_A_table().size() << " published values reproduced\n";
    if (!paper_mismatches.empty()) return kMismatch;
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto series = expand_series(o.kind);
  const auto spec = InfiniteWordSpec::builtin(o.word);
  const FactorIndex idx = FactorIndex::build(spec, std::max<std::size_t>(o.max_n, 1));

  if (!has_recurrence(o.word)) {
    std::vector<ComplexityTable> tables;
    for (Series s : series) tables.push_back(oracle_table(idx, s, o.max_n));
    if (o.format == "json") {
      json doc{{"schema", 1}, {"command", "verify"}, {"word", o.word}, {"supported", false}, {"tables", json::array()}};
      for (const auto& t : tables) doc["tables"].push_back(table_json(t));
      out << doc.dump(2) << '\n';
    } else {
      write_tables_csv(tables, out);
    }
    err << "no recurrence defined for word '" << o.word << "'; reported oracle values only\n";
    return kUnsupported;
  }

  const auto report = verify(idx, series, o.max_n);
  if (o.format == "json") {
    json mism = json::array();
    for (const auto& m : report.mismatches) {
      mism.push_back({{"series", to_string(m.series)}, {"n", m.n}, {"oracle", m.oracle}, {"recurrence", m.recurrence}});
    }
    json names = json::array();
    for (Series s : report.series) names.push_back(to_string(s));
    out << json{{"schema", 1},
                {"command", "verify"},
                {"word", report.word},
                {"series", names},
                {"max", report.max_n},
                {"prefix_length", report.prefix_length},
                {"certified_length", report.certified_length},
                {"elapsed_seconds", report.elapsed_seconds},
                {"mismatches", mism},
                {"pass", report.pass()}}
               .dump(2)
        << '\n';
  } else {
    out << "verify " << report.word << ": n = 0.." << report.max_n << ", prefix length " << report.prefix_length
        << ", certified factor length " << report.certified_length << '\n';
    for (Series s : report.series) {
      std::size_t bad = 0;
      for (const auto& m : report.mismatches) bad += m.series == s;
      out << "  " << to_string(s) << ": " << report.max_n + 1 << " values, " << bad << " mismatches\n";
    }
    for (const auto& m : report.mismatches) {
      out << "  mismatch " << to_string(m.series) << "(" << m.n << "): oracle " << m.oracle << ", recurrence "
          << m.recurrence << '\n';
    }
    out << (report.pass() ? "PASS" : "FAIL") << " (" << report.elapsed_seconds << " s)\n";
  }
  return report.pass() ? kPass : kMismatch;
}

int cmd_gaps(const Options& o, std::ostream& out) {
  if (o.gap_index < 1 || o.gap_index > 8) throw Error(ErrorCode::ParseError, "--index must be in 1..8");
  bool ok = true;
  json doc{{"schema", 1}, {"command", "gaps"}, {"gaps", json::array()}};
  for (Index n = 1; n <= o.gap_index; ++n) {
    const auto g = scan_gap(n);
    const bool good = g.all_zero && g.left_witness != 0 && g.right_witness != 0;
    ok = ok && good;
    if (o.format == "json") {
      doc["gaps"].push_back({{"n", n},
                             {"a_n", a_seq(n)},
                             {"lo", g.interval.lo},
                             {"hi", g.interval.hi},
                             {"all_zero", g.all_zero},
                             {"left_witness", {{"n", g.interval.lo - 1}, {"A", g.left_witness}}},
                             {"right_witness", {{"n", g.interval.hi + 1}, {"A", g.right_witness}}},
                             {"stated_right_witness", {{"n", g.stated_right_point}, {"A", g.stated_right_witness}}}});
    } else {
      out << "n=" << n << " [" << g.interval.lo << ", " << g.interval.hi << "] "
          << (g.all_zero ? "all zero" : "NOT all zero") << "; A(" << g.interval.lo - 1 << ") = " << g.left_witness
          << ", A(" << g.interval.hi + 1 << ") = " << g.right_witness << ", A(" << g.stated_right_point
          << ") = " << g.stated_right_witness << '\n';
    }
  }
  if (o.format == "json") out << doc.dump(2) << '\n';
  return ok ? kPass : kMismatch;
}

json word_entry(const Word& w) {
  return {{"word", w.str()}, {"length", w.size()}, {"palindrome", is_palindrome(w)}, {"privileged", is_privileged(w)}};
}

int cmd_structures(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = InfiniteWordSpec::builtin(o.word);
  const bool tm = has_recurrence(o.word);
  Index max_n = o.max_n;
  if (max_n == 0) max_n = o.what == "palindromes" ? 14 : 16;

  json doc{{"schema", 1}, {"command", "structures"}, {"word", o.word}, {"what", o.what}, {"max", max_n}};
  json entries = json::array();

  if (o.what == "defect") {
    const auto report = defect(spec.prefix(max_n));
    doc["prefix_length"] = max_n;
    doc["defect"] = report.defect;
    doc["lacking_positions"] = report.lacking_positions;
    doc["note"] = "defect of the prefix; the defect of the infinite word is the supremum over prefixes";
    out << doc.dump(2) << '\n';
    return kPass;
  }

  if ((o.what == "classifications" || o.what == "bijections") && !tm) {
    err << "'" << o.what << "' is only defined for the Thue-Morse word\n";
    return kUnsupported;
  }

  const std::size_t certified = o.what == "returns" ? 16 * max_n : max_n + 8;
  const FactorIndex idx = FactorIndex::build(spec, certified);
  doc["prefix_length"] = idx.text().size();
  doc["certified_length"] = idx.certified_length();

  if (o.what == "privileged") {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (const Word& w : privileged_set(idx, n).members) entries.push_back(word_entry(w));
    }
  } else if (o.what == "palindromes") {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (const auto& f : idx.factors(n)) {
        if (is_palindrome(f.word)) entries.push_back(word_entry(f.word));
      }
    }
  } else if (o.what == "classifications") {
    for (std::size_t n = 6; n <= max_n; ++n) {
      for (const Word& w : privileged_set(idx, n, PrefixClass{"0"_w}).members) {
        const auto c = classify_tm_privileged(w, idx);
        entries.push_back({{"word", w.str()},
                           {"starts_with", c.starts_with.str()},
                           {"mod4", c.mod4},
                           {"begins_with", c.begins_with},
                           {"matching_contexts", c.matching_contexts},
                           {"consistent", c.consistent}});
      }
    }
  } else if (o.what == "bijections") {
    for (Reduction r : all_reductions()) {
      for (std::size_t n = reduction_min_n(r);; ++n) {
        const auto sig = reduction_signature(r, n);
        if (sig.range.second > max_n) break;
        json pairs = json::array();
        for (const auto& [cls, len] : sig.domain) {
          for (const Word& w : privileged_set(idx, len, cls).members) {
            pairs.push_back({{"from", w.str()}, {"to", apply_reduction(r, w, idx).str()}});
          }
        }
        entries.push_back({{"map", to_string(r)}, {"n", n}, {"range_class", sig.range.first.key()},
                           {"range_length", sig.range.second}, {"pairs", pairs}});
      }
    }
  } else if (o.what == "returns") {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& f : idx.factors(n)) {
        json rs = json::array();
        for (const Word& r : complete_first_returns(idx, f.word)) rs.push_back(r.str());
        entries.push_back({{"factor", f.word.str()}, {"returns", rs}});
      }
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown --what '" + o.what + "'");
  }
  doc["count"] = entries.size();
  doc["entries"] = entries;
  out << doc.dump(2) << '\n';
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Privileged and palindromic factor complexity of infinite words", "privword"};
  app.require_subcommand(1);
  Options o;

  auto* word = app.add_subcommand("word", "Print a prefix of a built-in word or of a morphism fixed point");
  word->add_option("name", o.word_name, "Built-in word: tm, tm-theta, chacon, kappa, mu, h-mu");
  word->add_option("--morphism", o.morphism, "Rules such as \"0->01,1->10\"");
  word->add_option("--seed", o.seed, "Seed letter for --morphism");
  word->add_option("--len", o.len, "Prefix length");
  word->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* table = app.add_subcommand("table", "Tabulate recurrence values");
  table->add_option("kind", o.kind, "A, P, B, a class series such as A_010, all, or classes");
  table->add_option("--max", o.max_n, "Largest n")->default_val(128);
  table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", o.out_file, "Write the table to a file");
  table->add_flag("--paper-check", o.paper_check, "Compare A(2..128) with the published table");

  auto* ver = app.add_subcommand("verify", "Compare brute-force counts with the recurrences");
  ver->add_option("kind", o.kind, "A, P, B, a class series, all, or classes");
  ver->add_option("--max", o.max_n, "Largest n")->default_val(64);
  ver->add_option("--word", o.word, "Built-in word");
  ver->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* gaps = app.add_subcommand("gaps", "Check the zero gaps of A");
  gaps->add_option("--index", o.gap_index, "Check gaps n = 1..index (at most 8)");
  gaps->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* st = app.add_subcommand("structures", "Dump privileged sets, palindromes, classifications, bijections, "
                                              "defect or returns as JSON");
  st->add_option("word", o.word, "Built-in word");
  st->add_option("--max", o.max_n, "Largest factor length (default 16; 14 for palindromes)");
  st->add_option("--what", o.what, "privileged, palindromes, classifications, bijections, defect, returns")
      ->check(CLI::IsMember({"privileged", "palindromes", "classifications", "bijections", "defect", "returns"}));

  std::vector<const char*> argv{"privword"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (word->parsed()) return cmd_word(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (gaps->parsed()) return cmd_gaps(o, out);
    if (st->parsed()) return cmd_structures(o, out, err);
  } catch (const Error& e) {
    err << "privword: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kBudget;
      case ErrorCode::NotAFactor:
      case ErrorCode::CertificationTooShort:
      case ErrorCode::NotPrivileged:
      case ErrorCode::DomainViolation:
      case ErrorCode::RangeViolation: return kMismatch;
      default: return kUsage;
    }
  }
  return kUsage;
}

}  // namespace privword::harness
