#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "congrep/fflinalg.hpp"
#include "congrep/groups.hpp"

namespace congrep {

/// Combinatorial name of a basis vector: a wedge/tensor of tautological basis vectors and their duals.
struct BasisLabel {
  std::vector<int> primal;
  std::vector<int> dual;
  std::string name;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Root system used to read weights off labels: C_g for Sp_2g, A_{n-1} for SL_n.
enum class WeightSystem { none, symplectic, linear };

struct LabeledModule {
  Representation rep;
  std::vector<BasisLabel> labels;
  WeightSystem system{WeightSystem::none};
  int rank{0};

  std::size_t dim() const { return rep.dim(); }
};

/// A subspace that is not invariant under some generator.
class NonInvariantSubspace : public std::runtime_error {
 public:
  NonInvariantSubspace(const std::string& generator, std::size_t row)
      : std::runtime_error("subspace not invariant under " + generator + " (basis row " + std::to_string(row) + ")"),
        generator_(generator),
        row_(row) {}
  const std::string& generator() const noexcept { return generator_; }
  std::size_t row() const noexcept { return row_; }

 private:
  std::string generator_;
  std::size_t row_;
};

LabeledModule tautological_module(const SymplecticSpace& space);
LabeledModule tautological_module(int n, std::uint32_t p);

LabeledModule exterior_power(const LabeledModule& base, int k);
LabeledModule dual(const LabeledModule& m);
LabeledModule tensor(const LabeledModule& a, const LabeledModule& b);

/// delta_k : Lambda^k -> Lambda^(k-2), stored source x target.
FFMatrix contraction_matrix(const SymplecticSpace& space, int k);
/// omega = sum of a_i ^ b_i as a 1 x C(2g,2) row.
FFMatrix omega_vector(const SymplecticSpace& space);
/// epsilon : V -> Lambda^3, v -> omega ^ v.
FFMatrix epsilon_matrix(const SymplecticSpace& space);

/// xi : V* (x) V -> F, evaluation.
FFMatrix xi_matrix(int n, std::uint32_t p);
/// Psi : V* (x) V -> gl_n, e_a* (x) e_b -> E_ba, is bijective and equivariant for conjugation.
bool psi_check(int n, std::uint32_t p);
/// kappa : V* (x) Lambda^2 V -> V, f (x) v^w -> f(v) w - f(w) v.
FFMatrix kappa_matrix(int n, std::uint32_t p);
/// tau : V -> V* (x) Lambda^2 V, e_k -> sum_i e_i* (x) e_k ^ e_i.
FFMatrix tau_matrix(int n, std::uint32_t p);
/// V* (x) Lambda^2 V with the labels kappa and tau refer to.
LabeledModule johnson_target(int n, std::uint32_t p);
/// gl_n under conjugation, basis E_rs in row-major order.
LabeledModule matrix_module(int n, std::uint32_t p);
/// Traceless matrices under conjugation, basis E_ij (i != j) and E_ii - E_nn, lexicographic in (i,j).
LabeledModule traceless_module(int n, std::uint32_t p);
/// Coordinates of the identity matrix in traceless_module; requires p | n.
FFMatrix traceless_identity(int n, std::uint32_t p);

struct SubQuotient {
  Representation sub;
  Representation quotient;
};

/// Action on s (in its rref coordinates) and on the quotient (non-pivot coordinates).
SubQuotient sub_quotient(const Representation& m, const Subspace& s);
/// Action on upper / lower, lower contained in upper.
Representation section(const Representation& m, const Subspace& upper, const Subspace& lower);
/// Image of a subspace of the ambient module in the coordinates of the invariant subspace s.
Subspace restrict_to(const Subspace& s, const Subspace& inner);

bool is_equivariant(const Representation& source, const Representation& target, const FFMatrix& map);

}  // namespace congrep
