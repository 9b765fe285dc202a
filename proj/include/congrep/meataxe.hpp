#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"
#include "congrep/ffpoly.hpp"
#include "congrep/groups.hpp"
#include "json.hpp"

namespace congrep {

/// Smallest invariant subspace containing the rows of seeds.
Subspace spin(const Representation& rep, const FFMatrix& seeds);

struct WordTerm {
  std::uint32_t coeff{1};
  std::vector<std::size_t> word;
  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Linear combination of words in the generators.
struct AlgebraElement {
  std::vector<WordTerm> terms;

  FFMatrix evaluate(const Representation& rep) const;
  /// 3 to 6 words of length at most 4 with nonzero coefficients.
  static AlgebraElement random(std::size_t generators, std::uint32_t p, std::mt19937_64& rng);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Replayable record of one chop step.
struct ChopNode {
  enum class Kind { split, irreducible };
  /// Irreducibility evidence: "dimension-one", "exhaustive", "norton", "norton-exhaustive".
  /// Split evidence: "spin", "dual-spin", "exhaustive".
  Kind kind{Kind::irreducible};
  std::string method;
  std::size_t dim{0};
  AlgebraElement element;
  FFPoly factor;
  std::size_t nullity{0};
  FFMatrix vector;
  FFMatrix dual_vector;
  std::size_t sub_dim{0};
  std::vector<ChopNode> children;

  friend bool operator==(const ChopNode&, const ChopNode&) = default;
};

struct ChopOptions {
  std::size_t max_rounds{500};
  int max_factor_degree{12};
  /// Rounds without a clean Norton witness before exhaustive kernel search is allowed.
  std::size_t exhaustive_after{25};
  std::size_t exhaustive_kernel_dim{12};
};

struct CompositionSeries {
  /// Factors bottom-up: submodule factors before quotient factors.
  std::vector<Representation> factors;
  ChopNode certificate;

  std::vector<std::size_t> dimensions() const;
};

CompositionSeries chop(const Representation& rep, std::uint64_t seed, const ChopOptions& options = {});

/// Replays every spin and kernel computation recorded in the certificate.
bool verify_certificate(const Representation& rep, const ChopNode& certificate);

nlohmann::json certificate_to_json(const ChopNode& node);
ChopNode certificate_from_json(const nlohmann::json& j, std::uint32_t p);

/// Isomorphism test for irreducible modules over the same generators (standard-basis method).
bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed);

/// Intertwiner Phi with a.gen Phi = Phi b.gen for all generators, if the modules are isomorphic.
std::optional<FFMatrix> find_isomorphism(const Representation& a, const Representation& b, std::uint64_t seed);

struct CatalogEntry {
  std::string label;
  std::string weight;
  Representation rep;
};

/// Label of the catalog entry isomorphic to factor, or "unidentified".
/// Candidates are filtered by dimension; the isomorphism test confirms every match.
std::string identify_factor(const Representation& factor, const std::vector<CatalogEntry>& catalog,
                            std::uint64_t seed = 0x5A70);

}  // namespace congrep
