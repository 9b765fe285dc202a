#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"
#include "congrep/functors.hpp"

namespace congrep {

/// Torus weight. Type C: coordinates in L_1..L_g. Type A: coordinates in L_1..L_n modulo (1,...,1),
/// stored with last coordinate 0.
class Weight {
 public:
  Weight() = default;
  Weight(WeightSystem system, std::vector<int> coords);

  WeightSystem system() const noexcept { return system_; }
  const std::vector<int>& coords() const noexcept { return coords_; }
  int rank() const noexcept { return static_cast<int>(coords_.size()); }

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  void canonicalize();
  WeightSystem system_{WeightSystem::none};
  std::vector<int> coords_;
};

/// Coefficients of the fundamental weights.
struct DominantLabel {
  std::vector<int> coeffs;

  bool is_dominant() const;
  bool is_restricted(int p) const;
  /// "L(0)", "L(w1)", "L(w2+w3)"; a coefficient c contributes its term c times.
  std::string render() const;
  friend bool operator==(const DominantLabel&, const DominantLabel&) = default;
};

/// omega_i expressed in L coordinates, 1-based.
Weight fundamental_weight(WeightSystem system, int rank, int i);

/// Sum of fundamental weights with the given coefficients.
Weight weight_of(WeightSystem system, int rank, const DominantLabel& label);

DominantLabel to_dominant_label(const Weight& w);

/// Coordinates of mu - lambda in simple roots, if it lies in the root lattice.
std::optional<std::vector<int>> simple_root_coordinates(const Weight& difference);

/// lambda <= mu: mu - lambda is a nonnegative integer combination of positive roots.
bool dominates(const Weight& mu, const Weight& lambda);

/// Weight of basis vector index, from its combinatorial label.
Weight basis_weight(const LabeledModule& module, std::size_t index);

std::map<Weight, std::size_t> weight_multiset(const LabeledModule& module);

/// Highest weight among the supports of the rref rows of the subspace; rows must be weight-homogeneous.
/// Throws std::domain_error for inhomogeneous rows or when no unique maximum exists.
DominantLabel highest_weight(const LabeledModule& module, const Subspace& subspace);

}  // namespace congrep
