#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congrep/groups.hpp"
#include "congrep/meataxe.hpp"
#include "json.hpp"

namespace congrep {

inline constexpr std::uint64_t kDefaultSeed = 0x5A70;

enum class Family {
  mod_level2,
  torelli,
  sp_level2,
  punctured,
  closed,
  aut_congruence,
  aut_coinvariants,
  traceless,
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
const std::vector<Family>& all_families();
/// Families parametrized by (n, p) rather than by a genus.
bool is_linear_family(Family f);

struct FamilyParams {
  int genus{0};
  int n{0};
  std::uint32_t p{2};
  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

std::string describe(Family f, const FamilyParams& params);

struct FactorRow {
  std::string label;
  std::size_t dimension{0};
  std::size_t multiplicity{0};
  std::string weight;
  friend bool operator==(const FactorRow&, const FactorRow&) = default;
};

enum class Verification { match, mismatch, no_expectation };
std::string verification_name(Verification v);

struct FactorReport {
  Family family{Family::mod_level2};
  FamilyParams params;
  std::size_t source_dimension{0};
  /// Sorted by (dimension, label).
  std::vector<FactorRow> factors;
  Verification verified{Verification::no_expectation};
  std::uint64_t seed{kDefaultSeed};

  std::map<std::string, std::size_t> label_multiplicities() const;
  std::map<std::string, std::size_t> weight_multiplicities() const;
  friend bool operator==(const FactorReport&, const FactorReport&) = default;
};

nlohmann::json report_to_json(const FactorReport& r);
FactorReport report_from_json(const nlohmann::json& j);

struct ExpectedRow {
  std::string label;
  std::size_t multiplicity;
};

struct Expectation {
  std::string source;
  std::vector<ExpectedRow> rows;
};

/// Expected composition factors, when the family has a stated table at these parameters.
std::optional<Expectation> expected_table(Family f, const FamilyParams& params);

/// Reference irreducibles labelled for identification.
std::vector<CatalogEntry> symplectic_catalog(int genus);
std::vector<CatalogEntry> linear_catalog(int n, std::uint32_t p);

/// Modules whose composition factors make up the family's answer (two for aut-congruence).
std::vector<Representation> source_modules(Family f, const FamilyParams& params);

struct PipelineResult {
  FactorReport report;
  std::vector<ChopNode> certificates;
};

/// Throws std::invalid_argument for parameters outside the family's range.
PipelineResult run_pipeline(Family f, const FamilyParams& params, std::uint64_t seed = kDefaultSeed);

FactorReport factors_mod_level2(int genus, std::uint64_t seed = kDefaultSeed);
FactorReport factors_torelli_coinvariants(int genus, std::uint64_t seed = kDefaultSeed);
FactorReport factors_sp_level2(int genus, std::uint64_t seed = kDefaultSeed);
FactorReport factors_surface_variants(int genus, bool closed, std::uint64_t seed = kDefaultSeed);
FactorReport factors_aut_congruence(int n, std::uint32_t p, std::uint64_t seed = kDefaultSeed);

struct PeriodicityResult {
  bool periodic{false};
  /// Compared multiplicity map per parameter set: weight labels for symplectic families, catalog labels otherwise.
  std::vector<std::map<std::string, std::size_t>> maps;
};

PeriodicityResult periodicity_check(Family f, const std::vector<FamilyParams>& range,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace congrep
