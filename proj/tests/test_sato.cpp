#include <random>

#include "congrep/combinatorics.hpp"
#include "congrep/functors.hpp"
#include "congrep/meataxe.hpp"
#include "congrep/sato.hpp"
#include "doctest.h"

using namespace congrep;

namespace {

HomologyClass apply(const FFMatrix& g, HomologyClass c) {
  HomologyClass out = 0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (c >> r & 1U)
      for (std::size_t col = 0; col < g.cols(); ++col)
        if (g(r, col)) out ^= basis_class(static_cast<int>(col));
  return out;
}

// Intersection from the definition: sum over handles of a_i(x) b_i(y) + b_i(x) a_i(y).
int naive_intersection(HomologyClass x, HomologyClass y, int g) {
  int s = 0;
  for (int i = 0; i < g; ++i)
    s += static_cast<int>((x >> (2 * i) & 1U) * (y >> (2 * i + 1) & 1U) + (x >> (2 * i + 1) & 1U) * (y >> (2 * i) & 1U));
  return s & 1;
}

int sign(int parity) { return parity ? -1 : 1; }

std::vector<std::pair<HomologyClass, HomologyClass>> class_pairs(int g, std::mt19937_64& rng) {
  const HomologyClass top = HomologyClass{1} << (2 * g);
  std::vector<std::pair<HomologyClass, HomologyClass>> out;
  if (g <= 2) {
    for (HomologyClass a = 1; a < top; ++a)
      for (HomologyClass b = 1; b < top; ++b) out.emplace_back(a, b);
  } else {
    for (int i = 0; i < 1000; ++i)
      out.emplace_back(static_cast<HomologyClass>(1 + rng() % (top - 1)), static_cast<HomologyClass>(1 + rng() % (top - 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("intersection and quadratic forms") {
  for (int g = 1; g <= 3; ++g) {
    const HomologyClass top = HomologyClass{1} << (2 * g);
    const QuadraticForm q0(g), q1(g, 0b101 & (top - 1));
    for (HomologyClass x = 0; x < top; ++x)
      for (HomologyClass y = 0; y < top; ++y) {
        CHECK(intersection(x, y) == naive_intersection(x, y, g));
        for (const auto* q : {&q0, &q1}) CHECK((*q)(x ^ y) == (((*q)(x) + (*q)(y) + intersection(x, y)) & 1));
      }
  }
  CHECK(class_name(0b101) == "X1+X3");
}

TEST_CASE("indicator identity and sign relations") {
  std::mt19937_64 rng(5);
  for (int g = 1; g <= 4; ++g) {
    const QuadraticForm forms[] = {QuadraticForm(g), QuadraticForm(g, 0b11), QuadraticForm(g, 0b1001 & ((1U << (2 * g)) - 1))};
    for (const auto& [a, b] : class_pairs(g, rng)) {
      const auto ia = i_function(g, a), ib = i_function(g, b);
      CHECK(ia + ib - 2 * ia * ib == i_function(g, a ^ b));
      for (const auto& q : forms) {
        const auto ca = cbar(q, a), cb = cbar(q, b);
        CHECK(ca * ca == ca * sign(q(a)));
        if (a == b) continue;
        const auto rhs = (ca * sign(q(b)) + cb * sign(q(a)) - 2 * ca * cb) * sign(intersection(a, b));
        CHECK(cbar(q, a ^ b) == rhs);
      }
    }
  }
}

TEST_CASE("monomial basis") {
  const QuadraticForm q(3);
  const auto b = monomial_basis(q);
  CHECK(b.functions.size() == 41);
  CHECK(b.labels[0] == "X1");
  CHECK(b.labels[6] == "2X1X2");
  CHECK(b.labels[21] == "4X1X2X3");
  const auto f = monomial_function(q, {0, 1});
  CHECK(f(basis_class(0) | basis_class(1)) == 2);
  CHECK(f(basis_class(0)) == 0);
}

TEST_CASE("monomials form a basis of W") {
  for (int g = 2; g <= 4; ++g)
    for (HomologyClass values : {0U, 0b110U}) {
      const QuadraticForm q(g, values);
      const auto r = verify_sato_basis(q);
      CHECK(r.independent);
      CHECK(r.spans_image);
      CHECK(r.exponents[0] == static_cast<std::size_t>(2 * g));
      CHECK(r.exponents[1] == binomial(2 * g, 2));
      CHECK(r.exponents[2] == binomial(2 * g, 3));
    }
  const QuadraticForm q(2);
  const auto b = monomial_basis(q);
  std::vector<int> degrees;
  for (const auto& s : b.subsets) degrees.push_back(static_cast<int>(s.size()));
  auto wrong = b.functions;
  // Dropping the factor 2 from a degree-two monomial breaks the order count.
  wrong[4] = cbar(q, basis_class(0)) * cbar(q, basis_class(1));
  CHECK_FALSE(check_candidate_basis(wrong, degrees).independent);
  auto cands = b.functions;
  cands.push_back(cands[0]);
  degrees.push_back(1);
  CHECK_FALSE(check_candidate_basis(cands, degrees).independent);
}

TEST_CASE("W coordinates are faithful") {
  for (int g = 1; g <= 4; ++g) {
    const QuadraticForm q(g);
    const auto b = monomial_basis(q);
    CHECK(w_coordinates(q, b.functions) == FFMatrix::identity(2, b.functions.size()));
  }
  CHECK_THROWS_AS(w_coordinates(QuadraticForm(2), {Z8Function::constant(2, 1)}), std::domain_error);
}

TEST_CASE("symplectic action on W mod 2 matches the action on classes") {
  for (int g = 1; g <= 3; ++g) {
    const QuadraticForm q(g, g >= 2 ? 0b0110U : 0U);
    const auto w = w_mod2_representation(q);
    CHECK(w.dim() == static_cast<std::size_t>(2 * g) + binomial(2 * g, 2) + binomial(2 * g, 3));
    CHECK(w.rep.is_valid());
    const auto sp = burkhardt_generators(SymplecticSpace{g, 2});
    const HomologyClass top = HomologyClass{1} << (2 * g);
    std::vector<Z8Function> classes;
    for (HomologyClass c = 1; c < top; ++c) classes.push_back(cbar(q, c));
    const auto coords = w_coordinates(q, classes);
    for (std::size_t gi = 0; gi < sp.size(); ++gi) {
      std::vector<Z8Function> moved;
      for (HomologyClass c = 1; c < top; ++c) moved.push_back(cbar(q, apply(sp.generator(gi), c)));
      CHECK(coords * w.rep.generator(gi) == w_coordinates(q, moved));
      // Products of moved classes, to pin down the rows of degree 2 and 3.
      const auto subsets = w_basis_subsets(g);
      std::vector<Z8Function> images;
      for (const auto& s : subsets) {
        auto f = Z8Function::constant(g, static_cast<std::uint8_t>(1U << (s.size() - 1)));
        for (int i : s) f *= cbar(q, apply(sp.generator(gi), basis_class(i)));
        images.push_back(f);
      }
      CHECK(w_coordinates(q, images) == w.rep.generator(gi));
    }
  }
}

TEST_CASE("filtration of W mod 2") {
  for (int g = 2; g <= 4; ++g) {
    const QuadraticForm q(g);
    const auto w = w_mod2_representation(q);
    const auto z = w_degree_span(g, 3), qq = w_degree_span(g, 2);
    CHECK(z.dim() == binomial(2 * g, 3));
    CHECK(qq.dim() == binomial(2 * g, 2) + binomial(2 * g, 3));
    const auto v = tautological_module(SymplecticSpace{g, 2});
    const auto top = section(w.rep, Subspace::span(FFMatrix::identity(2, w.dim())), qq);
    const auto mid = section(w.rep, qq, z);
    const auto bottom = sub_quotient(w.rep, z).sub;
    CHECK(top == v.rep);
    CHECK(mid == exterior_power(v, 2).rep);
    CHECK(bottom == exterior_power(v, 3).rep);
  }
  CHECK(w_mod2_representation(QuadraticForm(2)).dim() == 14);
}

TEST_CASE("twist words") {
  const auto x = [](int i) { return basis_class(i - 1); };
  for (int g = 2; g <= 4; ++g)
    for (HomologyClass values : {0U, 0b1011U}) {
      const QuadraticForm q(g, values);
      const auto bp = beta_eval(q, bounding_pair_word(x(1), x(2), x(3)));
      const auto expected = 4 * cbar(q, x(1)) * cbar(q, x(2)) * cbar(q, x(3));
      CHECK(w_coordinates(q, {bp}) == w_coordinates(q, {expected}));
      const auto sep = beta_eval(q, separating_twist_word(x(1), x(2)));
      CHECK(sep == 2 * cbar(q, x(1)) + 2 * cbar(q, x(1) ^ x(2)) + 2 * cbar(q, x(2)));
      CHECK(w_coordinates(q, {sep}).is_zero());
      CHECK(w_coordinates(q, {beta_eval(q, boundary_twist_word(g))}).is_zero());
    }
  for (int g = 1; g <= 5; ++g) {
    const auto chain = standard_chain(g);
    REQUIRE(chain.size() == static_cast<std::size_t>(2 * g));
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) CHECK(intersection(chain[i], chain[j]) == (j == i + 1 ? 1 : 0));
  }
  CHECK_THROWS_AS(bounding_pair_word(x(1), x(3), x(2)), std::invalid_argument);
}

TEST_CASE("images of subgroups") {
  CHECK_THROWS_AS(subgroup_image(QuadraticForm(2), SubgroupKind::torelli), std::invalid_argument);
  for (int g = 3; g <= 4; ++g) {
    const QuadraticForm q(g);
    const auto w = w_mod2_representation(q);
    const auto z = w_degree_span(g, 3);
    CHECK(subgroup_image(q, SubgroupKind::torelli) == z);
    CHECK(subgroup_image(q, SubgroupKind::johnson_kernel).dim() == 0);
    CHECK(subgroup_image(q, SubgroupKind::boundary_twist).dim() == 0);
    const auto push = subgroup_image(q, SubgroupKind::push);
    CHECK(push.dim() == static_cast<std::size_t>(2 * g));
    CHECK(z.contains(push));
    CHECK(isomorphic(sub_quotient(w.rep, push).sub, tautological_module(SymplecticSpace{g, 2}).rep, 1));
    CHECK(subgroup_image(q, SubgroupKind::level, 1).dim() == w.dim());
    CHECK(subgroup_image(q, SubgroupKind::level, 2) == z);
    CHECK(subgroup_image(q, SubgroupKind::level, 3).dim() == w.dim());
  }
}
