#include <map>

#include "congrep/functors.hpp"
#include "congrep/weights.hpp"
#include "doctest.h"

using namespace congrep;

namespace {

Weight c_weight(std::vector<int> c) { return Weight(WeightSystem::symplectic, std::move(c)); }

Subspace whole(const LabeledModule& m) { return Subspace::span(FFMatrix::identity(m.rep.prime(), m.dim())); }

}  // namespace

TEST_CASE("basis weights") {
  const auto v = tautological_module(SymplecticSpace{3, 2});
  const auto l2 = exterior_power(v, 2), l3 = exterior_power(v, 3);
  // a1^a2 is the pair (0, 2).
  CHECK(l2.labels[1].name == "a1^a2");
  CHECK(to_dominant_label(basis_weight(l2, 1)) == DominantLabel{{0, 1, 0}});
  CHECK(basis_weight(l2, 1) == fundamental_weight(WeightSystem::symplectic, 3, 2));
  CHECK(basis_weight(v, 1) == c_weight({-1, 0, 0}));
  std::size_t a123 = 0;
  while (l3.labels[a123].name != "a1^a2^a3") ++a123;
  CHECK(basis_weight(l3, a123) == fundamental_weight(WeightSystem::symplectic, 3, 3));
  CHECK(basis_weight(v, 1).to_string() == "-L1");
}

TEST_CASE("weights of the exterior square") {
  for (int g = 1; g <= 5; ++g) {
    const auto l2 = exterior_power(tautological_module(SymplecticSpace{g, 2}), 2);
    // Oracle: {+-L_i +- L_j : i < j} each once, 0 with multiplicity g.
    std::map<Weight, std::size_t> expected;
    expected[c_weight(std::vector<int>(static_cast<std::size_t>(g), 0))] = static_cast<std::size_t>(g);
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j)
        for (int si : {-1, 1})
          for (int sj : {-1, 1}) {
            std::vector<int> c(static_cast<std::size_t>(g), 0);
            c[static_cast<std::size_t>(i)] = si;
            c[static_cast<std::size_t>(j)] = sj;
            ++expected[c_weight(c)];
          }
    CHECK(weight_multiset(l2) == expected);
  }
}

TEST_CASE("highest weights of the symplectic modules") {
  const SymplecticSpace s3{3, 2}, s4{4, 2};
  const auto l2 = exterior_power(tautological_module(s3), 2);
  CHECK(highest_weight(l2, Subspace::span(left_kernel(contraction_matrix(s3, 2)))).render() == "L(w2)");
  const auto l3 = exterior_power(tautological_module(s4), 3);
  CHECK(highest_weight(l3, Subspace::span(left_kernel(contraction_matrix(s4, 3)))).render() == "L(w3)");
  CHECK(highest_weight(tautological_module(s4), whole(tautological_module(s4))).render() == "L(w1)");
  const auto l0 = exterior_power(tautological_module(s4), 0);
  CHECK(highest_weight(l0, whole(l0)).render() == "L(0)");
}

TEST_CASE("highest weights of the linear modules") {
  const auto t = traceless_module(3, 2);
  CHECK(highest_weight(t, whole(t)) == DominantLabel{{1, 1}});
  CHECK(highest_weight(t, whole(t)).render() == "L(w1+w2)");
  for (int n = 3; n <= 6; ++n) {
    const auto v = tautological_module(n, 3);
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      const auto lk = exterior_power(v, k);
      DominantLabel expected{std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
      expected.coeffs[static_cast<std::size_t>(k - 1)] = 1;
      CHECK(highest_weight(lk, whole(lk)) == expected);
    }
    const auto jt = johnson_target(n, 3);
    DominantLabel top{std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    top.coeffs[1] += 1;
    top.coeffs[static_cast<std::size_t>(n - 2)] += 1;
    CHECK(highest_weight(jt, whole(jt)) == top);
  }
  CHECK(DominantLabel{{0, 2}}.render() == "L(w2+w2)");
  CHECK(DominantLabel{{0, 2}}.is_restricted(3));
  CHECK_FALSE(DominantLabel{{0, 2}}.is_restricted(2));
}

TEST_CASE("inhomogeneous rows are rejected") {
  const auto v = tautological_module(SymplecticSpace{2, 2});
  FFMatrix row(2, 1, 4);
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  CHECK_THROWS_AS(highest_weight(v, Subspace::span(row)), std::domain_error);
}

TEST_CASE("root order is a partial order on occurring weights") {
  for (int g = 2; g <= 4; ++g) {
    const auto v = tautological_module(SymplecticSpace{g, 2});
    std::vector<Weight> ws;
    for (int k = 0; k <= 3; ++k)
      for (const auto& [w, m] : weight_multiset(exterior_power(v, k))) ws.push_back(w);
    for (const auto& a : ws) {
      CHECK(dominates(a, a));
      for (const auto& b : ws) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        for (const auto& c : ws)
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
  const auto jt = johnson_target(4, 3);
  std::vector<Weight> ws;
  for (const auto& [w, m] : weight_multiset(jt)) ws.push_back(w);
  for (const auto& a : ws)
    for (const auto& b : ws)
      if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
}
