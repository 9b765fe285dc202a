#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"
#include "congrep/functors.hpp"
#include "congrep/z8.hpp"

namespace congrep {

/// Element of H_1(surface; F_2) as a bit mask: bit i is the coefficient of X_{i+1}.
using HomologyClass = std::uint32_t;

constexpr HomologyClass basis_class(int i) { return HomologyClass{1} << i; }

/// Mod 2 intersection number; X_{2i-1}.X_{2i} = 1.
int intersection(HomologyClass x, HomologyClass y);

std::string class_name(HomologyClass c);

/// Quadratic refinement of the intersection form, fixed by its values on the basis.
class QuadraticForm {
 public:
  explicit QuadraticForm(int genus, HomologyClass basis_values = 0);

  int genus() const noexcept { return g_; }
  HomologyClass basis_values() const noexcept { return values_; }
  /// Extended by q(x + y) = q(x) + q(y) + x.y.
  int operator()(HomologyClass c) const;

 private:
  int g_;
  HomologyClass values_;
};

/// Function H_1(F_2) -> Z/8, indexed by the mask of the argument.
class Z8Function {
 public:
  explicit Z8Function(int genus);
  static Z8Function constant(int genus, std::uint8_t c);

  int genus() const noexcept { return g_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint8_t operator()(HomologyClass y) const { return values_[y]; }
  std::uint8_t& operator[](HomologyClass y) { return values_[y]; }
  const Z8Vector& values() const noexcept { return values_; }

  Z8Function& operator+=(const Z8Function& o);
  Z8Function& operator-=(const Z8Function& o);
  Z8Function& operator*=(const Z8Function& o);
  Z8Function& operator*=(int s);
  friend Z8Function operator+(Z8Function a, const Z8Function& b) { return a += b; }
  friend Z8Function operator-(Z8Function a, const Z8Function& b) { return a -= b; }
  friend Z8Function operator*(Z8Function a, const Z8Function& b) { return a *= b; }
  friend Z8Function operator*(Z8Function a, int s) { return a *= s; }
  friend Z8Function operator*(int s, Z8Function a) { return a *= s; }
  friend bool operator==(const Z8Function&, const Z8Function&) = default;

  bool is_zero() const;
  /// One hex digit per value, arguments in increasing mask order.
  std::string hex() const;

 private:
  int g_;
  Z8Vector values_;
};

/// y -> z.y in {0, 1}.
Z8Function i_function(int genus, HomologyClass z);

/// (-1)^q(c) i_c.
Z8Function cbar(const QuadraticForm& q, HomologyClass c);

/// Dehn twist power t_c^(2 * half_exponent) on a nonseparating curve of class c.
struct TwistTerm {
  HomologyClass cls;
  int half_exponent;
};
using TwistWord = std::vector<TwistTerm>;

/// Sum of half_exponent * cbar(cls) over the word.
Z8Function beta_eval(const QuadraticForm& q, const TwistWord& word);

/// Bounding pair map of the chain c1, c2, c3 with c3 = c1 + d1.
TwistWord bounding_pair_word(HomologyClass c1, HomologyClass c2, HomologyClass d1);
/// Twist on the boundary of a neighbourhood of two curves with c1.c2 = 1.
TwistWord separating_twist_word(HomologyClass c1, HomologyClass c2);
/// Chain classes c_1, ..., c_2g of the standard chain on a genus g surface.
std::vector<HomologyClass> standard_chain(int genus);
/// Boundary twist of a once-bordered genus g surface, through the chain relation.
TwistWord boundary_twist_word(int genus);
/// Sum over i < g of bounding pair maps around the i-th handle and the puncture handle.
TwistWord push_word(int genus);

/// Index sets of the W basis: singletons, pairs, triples, each lexicographic.
std::vector<std::vector<int>> w_basis_subsets(int genus);

/// 2^(|S|-1) times the product of cbar(X_s), s in S.
Z8Function monomial_function(const QuadraticForm& q, const std::vector<int>& subset);

/// "X1", "2X1X2", "4X1X2X3".
std::string monomial_label(const std::vector<int>& subset);

struct MonomialBasis {
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> labels;
  std::vector<Z8Function> functions;
};

MonomialBasis monomial_basis(const QuadraticForm& q);

struct SatoBasisReport {
  /// Orders 8, 4, 2 of the candidates multiply to the order of their span.
  bool independent{false};
  /// Every cbar(c) lies in the span (checked when requested).
  bool spans_image{false};
  /// Exponents (a, b, c) of (Z/8)^a + (Z/4)^b + (Z/2)^c.
  std::array<std::size_t, 3> exponents{};
};

/// Independence test for candidates of degrees 1, 2, 3 (order 8, 4, 2).
SatoBasisReport check_candidate_basis(const std::vector<Z8Function>& candidates, const std::vector<int>& degrees);

SatoBasisReport verify_sato_basis(const QuadraticForm& q, bool check_image = true);

/// W (x) F_2 as a module over the symplectic group, with Burkhardt generators.
LabeledModule w_mod2_representation(const QuadraticForm& q);

/// Coordinates in W (x) F_2 of functions lying in W; one row per function.
/// Throws std::domain_error when a function lies outside W.
FFMatrix w_coordinates(const QuadraticForm& q, const std::vector<Z8Function>& functions);

/// Span of the basis vectors of degree at least min_degree: the filtration Z (3) inside Q (2) inside W (1).
Subspace w_degree_span(int genus, int min_degree);

enum class SubgroupKind { torelli, johnson_kernel, boundary_twist, push, level };

/// Submodule of W (x) F_2 spanned by the group orbit of the images of the subgroup's generators.
/// For level, level_half is k in Mod[2k].
Subspace subgroup_image(const QuadraticForm& q, SubgroupKind kind, int level_half = 1);

}  // namespace congrep
