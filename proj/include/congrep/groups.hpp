#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"

namespace congrep {

/// H_1 of a genus-g surface with basis X_1..X_{2g} = a_1, b_1, ..., a_g, b_g and X_{2i-1}.X_{2i} = 1.
struct SymplecticSpace {
  int genus{1};
  std::uint32_t p{2};

  std::size_t dimension() const { return 2 * static_cast<std::size_t>(genus); }
  FFMatrix gram() const;
  std::uint32_t pairing(const FFMatrix& u, const FFMatrix& v) const;
  /// "a1", "b1", ... for index 0, 1, ...
  static std::string basis_name(std::size_t index);
};

/// Matrix group given by named generators acting on row vectors: v -> v G.
class Representation {
 public:
  Representation() = default;
  Representation(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  void add_generator(std::string name, FFMatrix matrix);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const FFMatrix& generator(std::size_t i) const { return gens_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<FFMatrix>& generators() const noexcept { return gens_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Every generator square and invertible.
  bool is_valid() const;
  /// Inverse-transpose generators.
  Representation dual() const;
  /// Transposed generators; same invariant subspaces as the dual.
  Representation transposed() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::uint32_t p_{2};
  std::size_t dim_{0};
  std::vector<std::string> names_;
  std::vector<FFMatrix> gens_;
};

Representation trivial_representation(std::uint32_t p, const std::vector<std::string>& names);

/// Transvection w -> w + (w.u) u.
FFMatrix transvection(const SymplecticSpace& space, const FFMatrix& u);

/// Transvection, rotation, factor mix and the g-1 adjacent factor swaps.
Representation burkhardt_generators(const SymplecticSpace& space);

bool is_symplectic(const SymplecticSpace& space, const FFMatrix& g);

/// Elementary matrices E_ij(1), i != j, as row-vector actions: e_j -> e_j + e_i.
Representation sl_generators(int n, std::uint32_t p);

/// Size of the orbit of the row vector v under the group generated by rep.
std::size_t orbit_size(const Representation& rep, const FFMatrix& v);

/// Product of generators named by index, applied left to right.
FFMatrix word_matrix(const Representation& rep, const std::vector<std::size_t>& word);

}  // namespace congrep
