#include <algorithm>
#include <random>

#include "congrep/functors.hpp"
#include "congrep/meataxe.hpp"
#include "congrep/sato.hpp"
#include "congrep/torelli.hpp"
#include "doctest.h"

using namespace congrep;

namespace {

// Closure by repeated joins, independent of the semi-echelon spin.
Subspace closure(const Representation& rep, const FFMatrix& seed) {
  Subspace s = Subspace::span(seed);
  while (true) {
    Subspace next = s;
    for (const auto& g : rep.generators())
      if (s.dim()) next = next.join(Subspace::span(s.basis() * g));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

// Irreducible iff every nonzero vector generates the whole module.
bool brute_irreducible(const Representation& rep) {
  const auto n = rep.dim();
  REQUIRE(rep.prime() == 2);
  REQUIRE(n <= 16);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    FFMatrix v(2, 1, n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) v.set(0, i, 1);
    if (closure(rep, v).dim() != n) return false;
  }
  return true;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Representation conjugate(const Representation& rep, const FFMatrix& t) {
  const auto ti = inverse(t);
  Representation out(rep.prime(), rep.dim());
  for (std::size_t i = 0; i < rep.size(); ++i) out.add_generator(rep.name(i), ti * rep.generator(i) * t);
  return out;
}

FFMatrix random_invertible(std::uint32_t p, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    FFMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::uint32_t>(rng() % p));
    if (rank(m) == n) return m;
  }
}

}  // namespace

TEST_CASE("spin agrees with closure") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2U, 3U}) {
    const auto l2 = exterior_power(tautological_module(SymplecticSpace{3, p}), 2);
    for (int trial = 0; trial < 20; ++trial) {
      FFMatrix seed(p, 1 + trial % 2, l2.dim());
      for (std::size_t r = 0; r < seed.rows(); ++r)
        for (std::size_t c = 0; c < l2.dim(); ++c)
          if (rng() % 4 == 0) seed.set(r, c, static_cast<std::uint32_t>(rng() % p));
      CHECK(spin(l2.rep, seed) == closure(l2.rep, seed));
    }
    CHECK(spin(l2.rep, omega_vector(SymplecticSpace{3, p})).dim() == 1);
  }
  const auto empty = spin(tautological_module(SymplecticSpace{2, 2}).rep, FFMatrix(2, 0, 4));
  CHECK(empty.dim() == 0);
}

TEST_CASE("chop: factors are irreducible and dimensions add up") {
  const auto v2 = tautological_module(SymplecticSpace{2, 2});
  const std::vector<LabeledModule> modules{exterior_power(v2, 2), tensor(v2, v2), exterior_power(v2, 0),
                                           exterior_power(tautological_module(SymplecticSpace{3, 2}), 2),
                                           tautological_module(SymplecticSpace{3, 2})};
  for (const auto& m : modules) {
    const auto cs = chop(m.rep, 0x5A70);
    std::size_t total = 0;
    for (const auto& f : cs.factors) {
      total += f.dim();
      CHECK(brute_irreducible(f));
    }
    CHECK(total == m.dim());
    CHECK(verify_certificate(m.rep, cs.certificate));
  }
  CHECK(sorted(chop(exterior_power(v2, 2).rep, 1).dimensions()) == std::vector<std::size_t>{1, 1, 4});
  CHECK(sorted(chop(exterior_power(tautological_module(SymplecticSpace{3, 2}), 2).rep, 1).dimensions()) ==
        std::vector<std::size_t>{1, 14});
}

TEST_CASE("chop over F_3 and for SL") {
  const auto v = tautological_module(SymplecticSpace{2, 3});
  const auto l2 = exterior_power(v, 2);
  const auto cs = chop(l2.rep, 3);
  CHECK(sorted(cs.dimensions()) == std::vector<std::size_t>{1, 5});
  CHECK(verify_certificate(l2.rep, cs.certificate));

  // gl_3 over F_3: scalars inside traceless, so 1, 7, 1.
  const auto gl = matrix_module(3, 3);
  const auto cg = chop(gl.rep, 5);
  CHECK(sorted(cg.dimensions()) == std::vector<std::size_t>{1, 1, 7});
  CHECK(verify_certificate(gl.rep, cg.certificate));
}

TEST_CASE("chop is deterministic in the seed") {
  const auto m = exterior_power(tautological_module(SymplecticSpace{3, 2}), 3);
  const auto a = chop(m.rep, 42);
  const auto b = chop(m.rep, 42);
  CHECK(a.certificate == b.certificate);
  CHECK(a.dimensions() == b.dimensions());
  CHECK(sorted(a.dimensions()) == std::vector<std::size_t>{6, 6, 8});
}

TEST_CASE("certificates: replay, tampering and JSON") {
  const auto m = exterior_power(tautological_module(SymplecticSpace{2, 2}), 2);
  const auto cs = chop(m.rep, 9);
  REQUIRE(verify_certificate(m.rep, cs.certificate));
  const auto j = certificate_to_json(cs.certificate);
  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()), 2);
  CHECK(back == cs.certificate);
  CHECK(verify_certificate(m.rep, back));

  auto bad = cs.certificate;
  bad.sub_dim += 1;
  CHECK_FALSE(verify_certificate(m.rep, bad));

  // Claiming a reducible module irreducible with the top-level evidence.
  auto lie = cs.certificate;
  lie.kind = ChopNode::Kind::irreducible;
  lie.children.clear();
  CHECK_FALSE(verify_certificate(m.rep, lie));

  // A certificate for a different module fails.
  const auto other = tensor(tautological_module(SymplecticSpace{1, 2}), tautological_module(SymplecticSpace{1, 2}));
  CHECK_FALSE(verify_certificate(other.rep, cs.certificate));
}

TEST_CASE("isomorphism test") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2U, 3U}) {
    const auto v = tautological_module(SymplecticSpace{3, p});
    const auto t = random_invertible(p, v.dim(), rng);
    const auto w = conjugate(v.rep, t);
    const auto phi = find_isomorphism(v.rep, w, 1);
    REQUIRE(phi.has_value());
    for (std::size_t i = 0; i < v.rep.size(); ++i) CHECK(v.rep.generator(i) * *phi == *phi * w.generator(i));
    // The symplectic form identifies V with its dual.
    CHECK(isomorphic(v.rep, v.rep.dual(), 2));
  }
  // For SL_3 the dual is a different module.
  const auto s = tautological_module(3, 2);
  CHECK_FALSE(isomorphic(s.rep, s.rep.dual(), 3));
  const auto l2 = exterior_power(s, 2);
  CHECK(isomorphic(l2.rep, s.rep.dual(), 3));
}

TEST_CASE("identify_factor") {
  const auto s = tautological_module(4, 2);
  std::vector<CatalogEntry> catalog{{"V", "w1", s.rep}, {"V*", "w3", s.rep.dual()}, {"L2", "w2", exterior_power(s, 2).rep}};
  CHECK(identify_factor(s.rep, catalog) == "V");
  CHECK(identify_factor(exterior_power(s, 3).rep, catalog) == "V*");
  CHECK(identify_factor(exterior_power(s, 2).rep, catalog) == "L2");
  CHECK(identify_factor(exterior_power(s, 0).rep, catalog) == "unidentified");
}

TEST_CASE("spin examples") {
  const SymplecticSpace s3{3, 2};
  const auto l2 = exterior_power(tautological_module(s3), 2);
  const auto ker2 = Subspace::span(left_kernel(contraction_matrix(s3, 2)));
  const auto sub = sub_quotient(l2.rep, ker2).sub;
  // X1^X3 is the pair (0, 2), index 1 in the lexicographic basis.
  const auto x13 = restrict_to(ker2, Subspace::span(FFMatrix::unit_vector(2, l2.dim(), 1)));
  CHECK(spin(sub, x13.basis()).dim() == 14);
  const SymplecticSpace s4{4, 2};
  const auto l24 = exterior_power(tautological_module(s4), 2);
  const auto w = spin(l24.rep, omega_vector(s4));
  CHECK(w.dim() == 1);
  for (const auto& g : l24.rep.generators()) CHECK(w.contains(Subspace::span(w.basis() * g)));
}

TEST_CASE("W mod 2: factors, seed independence, refinement") {
  for (int g = 3; g <= 4; ++g) {
    const auto w = w_mod2_representation(QuadraticForm(g));
    const auto reference = sorted(chop(w.rep, 0x5A70).dimensions());
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
      const auto cs = chop(w.rep, seed);
      CHECK(sorted(cs.dimensions()) == reference);
    }
    if (g == 4) CHECK(reference == std::vector<std::size_t>{1, 1, 8, 8, 26, 48});

    // Jordan-Hoelder: chopping the filtration quotients gives the same multiset.
    const auto z = w_degree_span(g, 3), q = w_degree_span(g, 2);
    std::vector<std::size_t> pieces;
    for (const auto& part : {sub_quotient(w.rep, z).sub, section(w.rep, q, z),
                             section(w.rep, Subspace::span(FFMatrix::identity(2, w.dim())), q)})
      for (auto d : chop(part, 7).dimensions()) pieces.push_back(d);
    CHECK(sorted(pieces) == reference);
  }
}

TEST_CASE("B3: refinement consistency") {
  const auto b = b3_representation(3);
  const auto f = b3_filtration(3);
  const auto whole = sorted(chop(b.rep, 11).dimensions());
  std::vector<std::size_t> pieces;
  for (const auto& part : {sub_quotient(b.rep, f.k).sub, section(b.rep, f.l, f.k), section(b.rep, f.q, f.l),
                           section(b.rep, Subspace::span(FFMatrix::identity(2, b.dim())), f.q)})
    for (auto d : chop(part, 13).dimensions()) pieces.push_back(d);
  CHECK(sorted(pieces) == whole);
}
