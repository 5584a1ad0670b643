#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "privword/harness.hpp"

using namespace privword;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = harness::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("word") {
  CHECK(cli({"word", "tm", "--len", "16"}).out == "0110100110010110\n");
  CHECK(cli({"word", "--morphism", "0->0010,1->1", "--seed", "0", "--len", "8"}).out == "00100010\n");
  const auto empty = cli({"word", "tm", "--len", "0"});
  CHECK(empty.code == harness::kPass);
  CHECK(empty.out == "\n");
  const auto csv = cli({"word", "tm", "--len", "3", "--format", "csv"});
  CHECK(csv.out == "position,letter\n1,0\n2,1\n3,1\n");
  CHECK(cli({"word", "--morphism", "0->01,0->10", "--len", "4"}).code == harness::kUsage);
  CHECK(cli({"word", "--morphism", "0->0,1->1", "--len", "4"}).code == harness::kUsage);
  CHECK(cli({"word", "nosuchword"}).code == harness::kUsage);
  CHECK(cli({"word", "tm", "--len", "abc"}).code == harness::kUsage);
}

TEST_CASE("usage errors and help") {
  CHECK(cli({}).code == harness::kUsage);
  CHECK(cli({"frobnicate"}).code == harness::kUsage);
  const auto help = cli({"--help"});
  CHECK(help.code == harness::kPass);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("table") {
  const auto a = cli({"table", "A", "--max", "16"});
  CHECK(a.code == harness::kPass);
  CHECK(a.out.rfind("n,value,provenance\n", 0) == 0);
  CHECK(has_line(a.out, "6,4,recurrence"));
  CHECK(has_line(a.out, "14,0,recurrence"));

  const auto b = cli({"table", "B", "--max", "8"});
  CHECK(has_line(b.out, "6,4,recurrence"));
  CHECK(has_line(b.out, "8,4,recurrence"));

  CHECK(cli({"table", "A", "--max", "4"}).out ==
        "n,value,provenance\n0,1,recurrence\n1,2,recurrence\n2,2,recurrence\n3,2,recurrence\n4,2,recurrence\n");

  const auto all = cli({"table", "all", "--max", "2"});
  CHECK(all.out.rfind("n,series,value,provenance\n", 0) == 0);
  CHECK(has_line(all.out, "2,A_00,1,recurrence"));

  const auto check = cli({"table", "A", "--max", "128", "--paper-check"});
  CHECK(check.code == harness::kPass);
  CHECK(check.err.find("64/64") != std::string::npos);

  const auto js = json::parse(cli({"table", "classes", "--max", "8", "--format", "json", "--paper-check"}).out);
  CHECK(js["schema"] == 1);
  CHECK(js["tables"].size() == 6);
  CHECK(js["paper_check"]["mismatches"].empty());

  CHECK(cli({"table", "Q"}).code == harness::kUsage);
  CHECK(cli({"table", "A", "--format", "xml"}).code == harness::kUsage);

  const std::string path = "privword_table_test.csv";
  CHECK(cli({"table", "P", "--max", "3", "--out", path}).out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == "n,value,provenance\n0,1,recurrence\n1,2,recurrence\n2,2,recurrence\n3,2,recurrence\n");
  std::remove(path.c_str());

  // Output is deterministic across runs.
  CHECK(cli({"table", "all", "--max", "64"}).out == cli({"table", "all", "--max", "64"}).out);
}

TEST_CASE("verify") {
  const auto a = cli({"verify", "A", "--max", "64"});
  CHECK(a.code == harness::kPass);
  CHECK(a.out.find("0 mismatches") != std::string::npos);

  const auto js = json::parse(cli({"verify", "all", "--max", "40", "--format", "json"}).out);
  CHECK(js["schema"] == 1);
  CHECK(js["pass"] == true);
  CHECK(js["mismatches"].empty());
  CHECK(js["series"].size() == 9);
  CHECK(js["certified_length"] == 40);

  CHECK(cli({"verify", "B", "--max", "32", "--word", "tm-theta"}).code == harness::kPass);

  const auto kappa = cli({"verify", "A", "--max", "10", "--word", "kappa"});
  CHECK(kappa.code == harness::kUnsupported);
  CHECK(kappa.err.find("no recurrence defined") != std::string::npos);
  CHECK(has_line(kappa.out, "3,3,oracle"));

  setenv("PRIVWORD_BYTE_CAP", "64", 1);
  CHECK(cli({"verify", "A", "--max", "64"}).code == harness::kBudget);
  unsetenv("PRIVWORD_BYTE_CAP");
}

TEST_CASE("verification report") {
  const auto idx = FactorIndex::build(InfiniteWordSpec::builtin("tm"), 32);
  const auto report = harness::verify(idx, {Series::A, Series::B_010}, 32);
  CHECK(report.pass());
  CHECK(report.word == "tm");
  CHECK(report.max_n == 32);
  CHECK(report.certified_length == 32);
  CHECK(report.prefix_length >= 32);
  CHECK(harness::oracle_value(idx, Series::A_0110, 4) == 1);
  CHECK(harness::oracle_table(idx, Series::P, 5).entries.back() == std::pair<Index, Count>{5, 0});
}

TEST_CASE("gaps") {
  const auto g = cli({"gaps", "--index", "3"});
  CHECK(g.code == harness::kPass);
  CHECK(g.out.find("n=1 [13, 17] all zero; A(12) = 4") != std::string::npos);
  CHECK(g.out.find("n=2 [49, 65] all zero; A(48) = 2") != std::string::npos);
  CHECK(g.out.find("n=3 [189, 257] all zero") != std::string::npos);

  const auto js = json::parse(cli({"gaps", "--index", "2", "--format", "json"}).out);
  CHECK(js["gaps"][1]["lo"] == 49);
  CHECK(js["gaps"][1]["left_witness"]["A"] == 2);
  CHECK(cli({"gaps", "--index", "0"}).code == harness::kUsage);

  const auto r = harness::scan_gap(2);
  CHECK(r.all_zero);
  CHECK(r.stated_right_point == 34);
  CHECK(r.stated_right_witness == 14);
}

TEST_CASE("structures") {
  auto entries = [](const std::string& out) { return json::parse(out)["entries"]; };

  const auto pri = json::parse(cli({"structures", "tm", "--max", "8", "--what", "privileged"}).out);
  CHECK(pri["schema"] == 1);
  std::set<std::string> len8;
  for (const auto& e : pri["entries"]) {
    if (e["length"] == 8 && e["word"].get<std::string>()[0] == '0') len8.insert(e["word"]);
  }
  CHECK(len8 == std::set<std::string>{"00101100", "00110100", "01011010", "01100110"});

  const auto chacon = entries(cli({"structures", "chacon", "--what", "palindromes"}).out);
  CHECK(chacon.size() == 23);
  for (const auto& e : chacon) CHECK(e["privileged"] == true);

  std::size_t longest = 0;
  for (const auto& e : entries(cli({"structures", "h-mu", "--what", "palindromes"}).out)) {
    longest = std::max<std::size_t>(longest, e["length"]);
  }
  CHECK(longest == 12);

  const auto cls = entries(cli({"structures", "tm", "--max", "12", "--what", "classifications"}).out);
  CHECK_FALSE(cls.empty());
  for (const auto& e : cls) CHECK(e["consistent"] == true);

  const auto bij = entries(cli({"structures", "tm", "--max", "16", "--what", "bijections"}).out);
  CHECK_FALSE(bij.empty());
  CHECK(bij[0]["map"] == "f1");
  CHECK(bij[0]["pairs"][0]["to"] == "00101100");

  const auto defect = json::parse(cli({"structures", "tm", "--max", "32", "--what", "defect"}).out);
  CHECK(defect["defect"].get<int>() > 0);

  const auto returns = entries(cli({"structures", "tm", "--max", "2", "--what", "returns"}).out);
  CHECK(returns[0]["factor"] == "0");
  CHECK(returns[0]["returns"].size() == 3);

  CHECK(cli({"structures", "kappa", "--what", "classifications"}).code == harness::kUnsupported);
  CHECK(cli({"structures", "tm", "--what", "nothing"}).code == harness::kUsage);
}
