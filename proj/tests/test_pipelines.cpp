#include <algorithm>
#include <map>

#include "congrep/functors.hpp"
#include "congrep/meataxe.hpp"
#include "congrep/pipelines.hpp"
#include "doctest.h"

using namespace congrep;

namespace {

using Multiset = std::map<std::string, std::size_t>;

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Chop each piece separately and name factors against the symplectic catalog.
Multiset chop_union(const std::vector<Representation>& pieces, int genus) {
  const auto catalog = symplectic_catalog(genus);
  Multiset out;
  for (const auto& piece : pieces)
    for (const auto& f : chop(piece, 99).factors) ++out[identify_factor(f, catalog)];
  return out;
}

void check_invariants(const FactorReport& r) {
  std::size_t total = 0;
  for (const auto& f : r.factors) total += f.dimension * f.multiplicity;
  CHECK(total == r.source_dimension);
  CHECK(std::is_sorted(r.factors.begin(), r.factors.end(), [](const FactorRow& a, const FactorRow& b) {
    return std::tie(a.dimension, a.label) < std::tie(b.dimension, b.label);
  }));
}

std::size_t dim_of(const FactorReport& r, const std::string& label) {
  for (const auto& f : r.factors)
    if (f.label == label) return f.dimension;
  return 0;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (auto f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("nonsense").has_value());
}

TEST_CASE("mod-level2: tables, dimensions and refinement") {
  for (int g = 2; g <= 5; ++g) {
    const auto r = factors_mod_level2(g);
    check_invariants(r);
    CHECK(r.source_dimension == binom(2 * g, 1) + binom(2 * g, 2) + binom(2 * g, 3));
    CHECK(r.verified == (g == 2 ? Verification::no_expectation : Verification::match));

    // Oracle dimensions from ranks of the contraction maps.
    const SymplecticSpace s{g, 2};
    const auto n2 = binom(2 * g, 2), n3 = binom(2 * g, 3);
    const auto kd2 = n2 - rank(contraction_matrix(s, 2));
    CHECK(dim_of(r, "H1") == 2 * static_cast<std::size_t>(g));
    CHECK(dim_of(r, g % 2 ? "ker d2" : "ker d2/<omega>") == kd2 - (g % 2 ? 0 : 1));
    if (g >= 3) {
      const auto kd3 = n3 - rank(contraction_matrix(s, 3));
      CHECK(dim_of(r, g % 2 ? "ker d3/Im eps" : "ker d3") == kd3 - (g % 2 ? rank(epsilon_matrix(s)) : 0));
    }

    // Jordan-Hoelder against the filtration quotients H1, Lambda^2, Lambda^3.
    if (g >= 3) {
      const auto v = tautological_module(s);
      CHECK(chop_union({v.rep, exterior_power(v, 2).rep, exterior_power(v, 3).rep}, g) == r.label_multiplicities());
    }
  }
}

TEST_CASE("mod-level2 genus 3 and 4 rows") {
  const auto r3 = factors_mod_level2(3);
  CHECK(r3.label_multiplicities() == Multiset{{"H1", 3}, {"ker d3/Im eps", 1}, {"F", 1}, {"ker d2", 1}});
  CHECK(dim_of(r3, "ker d3/Im eps") == 8);
  CHECK(dim_of(r3, "ker d2") == 14);
  const auto r4 = factors_mod_level2(4);
  CHECK(r4.weight_multiplicities() == Multiset{{"L(w1)", 2}, {"L(0)", 2}, {"L(w2)", 1}, {"L(w3)", 1}});
}

TEST_CASE("torelli coinvariants against the B3 filtration") {
  for (int g = 3; g <= 5; ++g) {
    const auto r = factors_torelli_coinvariants(g);
    check_invariants(r);
    CHECK(r.source_dimension == 1 + binom(2 * g, 1) + binom(2 * g, 2) + binom(2 * g, 3));
    const auto v = tautological_module(SymplecticSpace{g, 2});
    CHECK(chop_union({exterior_power(v, 0).rep, v.rep, exterior_power(v, 2).rep, exterior_power(v, 3).rep}, g) ==
          r.label_multiplicities());
  }
  CHECK(factors_torelli_coinvariants(4).verified == Verification::match);
  // Odd genus: Lambda^3 contributes two copies of H1, so the computed count exceeds the stated table.
  const auto r3 = factors_torelli_coinvariants(3);
  CHECK(r3.label_multiplicities() == Multiset{{"F", 2}, {"H1", 3}, {"ker d2", 1}, {"ker d3/Im eps", 1}});
  CHECK(r3.verified == Verification::mismatch);
}

TEST_CASE("sp-level2 is level-2 minus Lambda^3") {
  for (int g = 3; g <= 5; ++g) {
    const auto r = factors_sp_level2(g);
    check_invariants(r);
    CHECK(r.verified == Verification::match);
    CHECK(r.source_dimension == binom(2 * g, 1) + binom(2 * g, 2));
    auto expected = factors_mod_level2(g).label_multiplicities();
    for (const auto& [label, m] : chop_union({exterior_power(tautological_module(SymplecticSpace{g, 2}), 3).rep}, g))
      if ((expected[label] -= m) == 0) expected.erase(label);
    CHECK(r.label_multiplicities() == expected);
  }
}

TEST_CASE("surface variants") {
  for (int g = 3; g <= 4; ++g) {
    auto punctured = factors_surface_variants(g, false);
    auto level = factors_mod_level2(g);
    CHECK(punctured.family == Family::punctured);
    punctured.family = level.family;
    CHECK(punctured == level);

    const auto closed = factors_surface_variants(g, true);
    check_invariants(closed);
    CHECK(closed.verified == Verification::no_expectation);
    CHECK(closed.source_dimension + 2 * static_cast<std::size_t>(g) == level.source_dimension);
    auto expected = level.label_multiplicities();
    expected["H1"] -= 1;
    CHECK(closed.label_multiplicities() == expected);
  }
}

TEST_CASE("aut congruence: union of the two constituents") {
  const std::vector<std::pair<int, std::uint32_t>> cases{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
  for (const auto& [n, p] : cases) {
    const auto r = factors_aut_congruence(n, p);
    check_invariants(r);
    CHECK(r.verified == Verification::match);
    const auto a = run_pipeline(Family::aut_coinvariants, {.n = n, .p = p}).report;
    const auto b = run_pipeline(Family::traceless, {.n = n, .p = p}).report;
    CHECK(a.verified == Verification::match);
    CHECK(b.verified == Verification::match);
    auto sum = a.label_multiplicities();
    for (const auto& [label, m] : b.label_multiplicities()) sum[label] += m;
    CHECK(r.label_multiplicities() == sum);
    // dim V* (x) Lambda^2 V + dim sl_n.
    CHECK(r.source_dimension == static_cast<std::size_t>(n) * binom(n, 2) + static_cast<std::size_t>(n * n - 1));
  }
  const auto r43 = factors_aut_congruence(4, 3);
  CHECK(r43.label_multiplicities() == Multiset{{"L(w1)", 2}, {"L(w2+w(n-1))", 1}, {"L(w1+w(n-1))", 1}});
  CHECK(dim_of(r43, "L(w2+w(n-1))") == 4 * 6 - 4 - 4);
  const auto r33 = factors_aut_congruence(3, 3);
  CHECK(r33.label_multiplicities().count("L(0)") == 1);
}

TEST_CASE("reports: JSON round trip and determinism") {
  for (const auto& r : {factors_mod_level2(3), factors_aut_congruence(4, 2), factors_torelli_coinvariants(3)}) {
    const auto text = report_to_json(r).dump();
    CHECK(report_from_json(nlohmann::json::parse(text)) == r);
  }
  CHECK(report_to_json(factors_sp_level2(4, 17)).dump() == report_to_json(factors_sp_level2(4, 17)).dump());
  const auto j = report_to_json(factors_mod_level2(4));
  CHECK(j.at("params").at("genus") == 4);
  CHECK(j.at("verified") == "match");
  CHECK(j.at("seed") == kDefaultSeed);
}

TEST_CASE("certificates from the pipeline replay") {
  const auto result = run_pipeline(Family::aut_congruence, {.n = 3, .p = 3});
  const auto modules = source_modules(Family::aut_congruence, {.n = 3, .p = 3});
  REQUIRE(result.certificates.size() == modules.size());
  for (std::size_t i = 0; i < modules.size(); ++i) CHECK(verify_certificate(modules[i], result.certificates[i]));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(factors_mod_level2(1), std::invalid_argument);
  CHECK_THROWS_AS(factors_torelli_coinvariants(2), std::invalid_argument);
  CHECK_THROWS_AS(factors_aut_congruence(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(factors_aut_congruence(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(periodicity_check(Family::mod_level2, {{.genus = 3}, {.genus = 4}}), std::invalid_argument);
}

TEST_CASE("periodicity") {
  CHECK(periodicity_check(Family::mod_level2, {{.genus = 3}, {.genus = 5}}).periodic);
  CHECK(periodicity_check(Family::sp_level2, {{.genus = 3}, {.genus = 5}}).periodic);
  CHECK(periodicity_check(Family::aut_congruence, {{.n = 4, .p = 3}, {.n = 7, .p = 3}}).periodic);
  CHECK(periodicity_check(Family::aut_congruence, {{.n = 3, .p = 2}, {.n = 5, .p = 2}}).periodic);
  // Across parity the level-2 maps differ.
  CHECK(factors_mod_level2(4).weight_multiplicities() != factors_mod_level2(5).weight_multiplicities());
}
