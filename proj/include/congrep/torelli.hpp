#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"
#include "congrep/functors.hpp"
#include "congrep/sato.hpp"

namespace congrep {

/// Squarefree monomial in the variables x_1..x_2g: bit i stands for x_{i+1}.
using BoolMonomial = std::uint16_t;

/// Element of the Boolean polynomial ring F_2[x_1..x_2g]/(x_i^2 - x_i).
class BoolPoly {
 public:
  explicit BoolPoly(int genus) : g_(genus) {}
  static BoolPoly one(int genus);
  static BoolPoly variable(int genus, int i);

  int genus() const noexcept { return g_; }
  const std::set<BoolMonomial>& terms() const noexcept { return terms_; }
  int degree() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  void toggle(BoolMonomial m);

  BoolPoly& operator+=(const BoolPoly& o);
  friend BoolPoly operator+(BoolPoly a, const BoolPoly& b) { return a += b; }
  friend BoolPoly operator*(const BoolPoly& a, const BoolPoly& b);
  friend bool operator==(const BoolPoly&, const BoolPoly&) = default;

  std::string to_string() const;

 private:
  int g_;
  std::set<BoolMonomial> terms_;
};

/// Basis of B^3: 1, then monomials of degree 1, 2, 3, each lexicographic.
std::vector<BoolMonomial> b3_basis(int genus);

std::string b3_label(BoolMonomial m);

/// Normal form of the class bar(c): expanded by bar(x + y) = bar(x) + bar(y) + x.y.
BoolPoly b3_class(int genus, HomologyClass c);

/// Normal form of the product of bar(c) over the factors; the empty product is 1.
/// Throws std::logic_error if the result leaves degree 3.
BoolPoly b3_reduce(int genus, const std::vector<HomologyClass>& factors);

/// Coordinates of a degree <= 3 element in b3_basis.
FFMatrix b3_coordinates(const BoolPoly& f);

/// B^3 with the Burkhardt generators acting by substitution.
LabeledModule b3_representation(int genus);

/// K (constants) inside L (degree <= 1) inside Q (degree <= 2) inside B^3.
struct B3Filtration {
  Subspace k;
  Subspace l;
  Subspace q;
};

B3Filtration b3_filtration(int genus);

}  // namespace congrep
