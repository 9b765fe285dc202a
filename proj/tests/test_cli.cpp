#include <filesystem>
#include <fstream>
#include <sstream>

#include "congrep/cli.hpp"
#include "congrep/pipelines.hpp"
#include "congrep/sato.hpp"
#include "doctest.h"

using namespace congrep;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "congrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("factors prints the table") {
  const auto r = invoke({"factors", "mod-level2", "--genus", "4"});
  CHECK(r.code == cli::kExitOk);
  const auto l = lines(r.out);
  // Header, column titles, four rows, verdict.
  REQUIRE(l.size() == 7);
  CHECK(l[2].starts_with("F "));
  CHECK(l[6] == "verified: match");
  std::vector<int> mults;
  for (std::size_t i = 2; i < 6; ++i) {
    std::istringstream row(l[i].substr(l[i].find("  ")));
    int dim = 0, mult = 0;
    row >> dim >> mult;
    mults.push_back(mult);
  }
  CHECK(mults == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("factors for Aut with n = 1 mod p") {
  const auto r = invoke({"factors", "aut-congruence", "--n", "5", "--p", "2", "--json"});
  CHECK(r.code == cli::kExitOk);
  const auto report = report_from_json(nlohmann::json::parse(r.out));
  CHECK(report.label_multiplicities() ==
        std::map<std::string, std::size_t>{{"L(w1)", 2}, {"L(w2+w(n-1))", 1}, {"L(w1+w(n-1))", 1}});
}

TEST_CASE("JSON output round trips and is byte-identical") {
  const auto a = invoke({"factors", "sp-level2", "--genus", "4", "--json", "--seed", "0x1234"});
  const auto b = invoke({"factors", "sp-level2", "--genus", "4", "--json", "--seed", "4660"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  const auto parsed = report_from_json(nlohmann::json::parse(a.out));
  CHECK(parsed == factors_sp_level2(4, 0x1234));

  const auto path = temp_file("congrep_cli_report.json");
  CHECK(invoke({"factors", "torelli", "--genus", "4", "--json", "--out", path.string()}).out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == invoke({"factors", "torelli", "--genus", "4", "--json"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"factors", "nonsense", "--genus", "3"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "mod-level2", "--genus", "7"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "torelli", "--genus", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "aut-congruence", "--n", "9", "--p", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "aut-congruence", "--n", "4", "--p", "11"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "aut-congruence", "--n", "4", "--p", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "aut-congruence", "--genus", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"factors", "mod-level2", "--genus", "3", "--seed", "abc"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "some"}).code == cli::kExitUsage);
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK_FALSE(invoke({"factors", "nonsense", "--genus", "3"}).err.empty());
}

TEST_CASE("a mismatch exits 1") {
  const auto r = invoke({"factors", "torelli", "--genus", "3"});
  CHECK(r.code == cli::kExitMismatch);
  CHECK(lines(r.out).back() == "verified: mismatch");
}

TEST_CASE("verify all: canonical order independent of threads") {
  const auto one = invoke({"verify", "all", "--max-genus", "2", "--max-n", "3"});
  const auto two = invoke({"verify", "all", "--max-genus", "2", "--max-n", "3", "--threads", "3"});
  CHECK(one.code == cli::kExitOk);
  CHECK(one.out == two.out);
  CHECK(lines(one.out).back() == "all checks match");

  // Genus 3 brings in the odd Torelli row, whose stated multiplicities disagree with dim B3.
  const auto r = invoke({"verify", "all", "--max-genus", "3", "--max-n", "4"});
  CHECK(r.code == cli::kExitMismatch);
  std::vector<std::string> failing;
  for (const auto& l : lines(r.out))
    if (l.starts_with("mismatch") || l.starts_with("error")) failing.push_back(l);
  REQUIRE(failing.size() == 1);
  CHECK(failing[0].find("torelli g=3") != std::string::npos);
}

TEST_CASE("sato dump") {
  const auto r = invoke({"sato", "dump", "--genus", "2"});
  CHECK(r.code == cli::kExitOk);
  const auto l = lines(r.out);
  const auto basis = monomial_basis(QuadraticForm(2));
  REQUIRE(l.size() == 4 + 6 + 4);
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] == basis.labels[i] + ": " + basis.functions[i].hex());
  CHECK(l[0].size() == std::string("X1: ").size() + 16);
}

TEST_CASE("certify replays stored certificates") {
  const auto path = temp_file("congrep_cli_cert.json");
  const auto made = invoke({"factors", "aut-congruence", "--n", "4", "--p", "3", "--cert-out", path.string()});
  CHECK(made.code == cli::kExitOk);
  CHECK(invoke({"certify", "aut-congruence", "--n", "4", "--p", "3", "--cert", path.string()}).code == cli::kExitOk);
  // The same certificate does not fit other parameters.
  CHECK(invoke({"certify", "aut-congruence", "--n", "4", "--p", "2", "--cert", path.string()}).code ==
        cli::kExitMismatch);
  CHECK(invoke({"certify", "traceless", "--n", "4", "--p", "3", "--cert", path.string()}).code == cli::kExitMismatch);

  auto bundle = nlohmann::json::parse(std::ifstream(path));
  bundle["certificates"][1]["dim"] = 14;
  std::ofstream(path) << bundle.dump();
  CHECK(invoke({"certify", "aut-congruence", "--n", "4", "--p", "3", "--cert", path.string()}).code ==
        cli::kExitMismatch);
  std::filesystem::remove(path);
  CHECK(invoke({"certify", "aut-congruence", "--n", "4", "--p", "3", "--cert", path.string()}).code ==
        cli::kExitUsage);
}
