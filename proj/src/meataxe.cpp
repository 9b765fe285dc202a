#include "congrep/meataxe.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "congrep/functors.hpp"

namespace congrep {

namespace {

// Semi-echelon basis: each row has a unit at its pivot and every later row vanishes there.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t n) : rows_(p, 0, n), p_(p) {}

  // Reduces v in place; true when v was independent (and is now stored).
  bool insert(FFMatrix& v) {
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      if (const auto c = v(0, pivots_[i])) v.add_scaled_row(0, rows_, i, (p_ - c) % p_);
    const auto lead = v.leading_column(0);
    if (lead == v.cols()) return false;
    v.scale_row(0, inverse_mod(v(0, lead), p_));
    rows_.append_rows(v);
    pivots_.push_back(lead);
    return true;
  }

  std::size_t size() const { return pivots_.size(); }
  const FFMatrix& rows() const { return rows_; }

 private:
  FFMatrix rows_;
  std::vector<std::size_t> pivots_;
  std::uint32_t p_;
};

// Spin that also records how each basis vector was produced: (parent, generator), parent npos for seeds.
struct StandardBasis {
  FFMatrix vectors;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

StandardBasis standard_basis(const Representation& rep, const FFMatrix& seed) {
  const auto p = rep.prime();
  const auto n = rep.dim();
  Echelon ech(p, n);
  StandardBasis out{FFMatrix(p, 0, n), {}};
  for (std::size_t r = 0; r < seed.rows(); ++r) {
    FFMatrix v = seed.row(r);
    FFMatrix raw = v;
    if (ech.insert(v)) {
      out.vectors.append_rows(raw);
      out.steps.emplace_back(static_cast<std::size_t>(-1), 0);
    }
  }
  for (std::size_t i = 0; i < out.vectors.rows() && out.vectors.rows() < n; ++i) {
    const FFMatrix base = out.vectors.row(i);
    for (std::size_t gi = 0; gi < rep.size() && out.vectors.rows() < n; ++gi) {
      FFMatrix w = base * rep.generator(gi);
      FFMatrix raw = w;
      if (ech.insert(w)) {
        out.vectors.append_rows(raw);
        out.steps.emplace_back(i, gi);
      }
    }
  }
  return out;
}

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

// All nonzero vectors of the row space of basis, one per line through the origin.
template <class F>
bool for_each_projective(const FFMatrix& basis, F&& visit) {
  const auto p = basis.prime();
  const std::size_t k = basis.rows();
  std::vector<std::uint32_t> c(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      FFMatrix v(p, 1, basis.cols());
      for (std::size_t i = 0; i < k; ++i)
        if (c[i]) v.add_scaled_row(0, basis, i, c[i]);
      if (!visit(v)) return false;
      bool carried = true;
      for (std::size_t pos = k; pos > lead + 1;) {
        --pos;
        if (++c[pos] < p) {
          carried = false;
          break;
        }
        c[pos] = 0;
      }
      if (carried) break;
    }
  }
  return true;
}

std::uint64_t projective_count(std::uint32_t p, std::size_t k) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) total += power, power *= p;
  return total;
}

bool spins_full(const Representation& rep, const FFMatrix& v) { return spin(rep, v).dim() == rep.dim(); }

Subspace annihilator(const Subspace& u) {
  const auto p = u.prime();
  if (u.dim() == 0) return Subspace::span(FFMatrix::identity(p, u.ambient()));
  return Subspace::span(kernel_basis(u.basis()));
}

bool is_irreducible_poly(const FFPoly& f) {
  if (f.degree() < 1) return false;
  const auto fs = factor_squarefree(f);
  return fs.size() == 1 && fs[0].multiplicity == 1 && fs[0].factor == f.monic();
}

struct Chopper {
  const ChopOptions& options;
  std::mt19937_64 rng;
  std::vector<Representation> factors;

  ChopNode split_node(const Representation& rep, ChopNode node, const Subspace& sub) {
    node.kind = ChopNode::Kind::split;
    node.sub_dim = sub.dim();
    const auto sq = sub_quotient(rep, sub);
    node.children.push_back(run(sq.sub));
    node.children.push_back(run(sq.quotient));
    return node;
  }

  ChopNode run(const Representation& rep) {
    const auto n = rep.dim();
    const auto p = rep.prime();
    ChopNode node;
    node.dim = n;
    node.factor = FFPoly(p);
    if (n == 0) throw std::invalid_argument("chop: zero module");
    if (n == 1) {
      node.method = "dimension-one";
      factors.push_back(rep);
      return node;
    }
    if (n <= 2) {
      Subspace found;
      const bool all_full = for_each_projective(FFMatrix::identity(p, n), [&](const FFMatrix& v) {
        auto s = spin(rep, v);
        if (s.dim() < n) {
          found = std::move(s);
          node.vector = v;
          return false;
        }
        return true;
      });
      node.method = "exhaustive";
      if (all_full) {
        factors.push_back(rep);
        return node;
      }
      return split_node(rep, std::move(node), found);
    }

    const auto transposed = rep.transposed();
    for (std::size_t round = 0; round < options.max_rounds; ++round) {
      const bool allow_exhaustive = round >= options.exhaustive_after;
      const auto element = AlgebraElement::random(rep.size(), p, rng);
      const auto z = element.evaluate(rep);
      const auto factorization = factor_squarefree(char_poly(z), rng());
      for (const auto& pf : factorization) {
        const auto& f = pf.factor;
        if (f.degree() > options.max_factor_degree) continue;
        const auto nz = evaluate(f, z);
        const auto kernel = left_kernel(nz);
        const auto dual_kernel = kernel_basis(nz);
        const std::size_t k = kernel.rows();
        node.element = element;
        node.factor = f;
        node.nullity = k;

        const FFMatrix v = kernel.row(0);
        auto s = spin(rep, v);
        if (s.dim() < n) {
          node.method = "spin";
          node.vector = v;
          return split_node(rep, std::move(node), s);
        }
        const FFMatrix u = dual_kernel.row(0);
        const auto t = spin(transposed, u);
        if (t.dim() < n) {
          node.method = "dual-spin";
          node.dual_vector = u;
          return split_node(rep, std::move(node), annihilator(t));
        }
        if (static_cast<int>(k) == f.degree()) {
          node.method = "norton";
          node.vector = v;
          node.dual_vector = u;
          factors.push_back(rep);
          return node;
        }
        if (!allow_exhaustive || k > options.exhaustive_kernel_dim) continue;
        if (projective_count(p, k) * n > 400000) continue;

        Subspace found;
        bool dual_side = false;
        FFMatrix witness;
        bool full = for_each_projective(kernel, [&](const FFMatrix& w) {
          auto sw = spin(rep, w);
          if (sw.dim() < n) {
            found = std::move(sw);
            witness = w;
            return false;
          }
          return true;
        });
        if (full)
          full = for_each_projective(dual_kernel, [&](const FFMatrix& w) {
            auto sw = spin(transposed, w);
            if (sw.dim() < n) {
              found = annihilator(sw);
              witness = w;
              dual_side = true;
              return false;
            }
            return true;
          });
        if (!full) {
          node.method = dual_side ? "dual-spin" : "spin";
          (dual_side ? node.dual_vector : node.vector) = witness;
          return split_node(rep, std::move(node), found);
        }
        node.method = "norton-exhaustive";
        node.vector = v;
        node.dual_vector = u;
        factors.push_back(rep);
        return node;
      }
    }
    throw std::runtime_error("chop: no decision after " + std::to_string(options.max_rounds) + " rounds in dimension " +
                             std::to_string(n));
  }
};

bool kernel_contains(const FFMatrix& nz, const FFMatrix& v) { return (v * nz).is_zero(); }

bool verify_node(const Representation& rep, const ChopNode& node) {
  const auto n = rep.dim();
  const auto p = rep.prime();
  if (node.dim != n || n == 0) return false;
  const bool irreducible = node.kind == ChopNode::Kind::irreducible;
  if (irreducible && (node.sub_dim != 0 || !node.children.empty())) return false;

  if (node.method == "dimension-one") return irreducible && n == 1;

  if (node.method == "exhaustive") {
    if (irreducible)
      return for_each_projective(FFMatrix::identity(p, n), [&](const FFMatrix& v) { return spins_full(rep, v); });
    if (node.vector.cols() != n || node.vector.is_zero()) return false;
    const auto s = spin(rep, node.vector);
    if (s.dim() == n || s.dim() != node.sub_dim || node.children.size() != 2) return false;
    const auto sq = sub_quotient(rep, s);
    return verify_node(sq.sub, node.children[0]) && verify_node(sq.quotient, node.children[1]);
  }

  if (node.element.terms.empty() || !is_irreducible_poly(node.factor)) return false;
  for (const auto& t : node.element.terms)
    for (auto w : t.word)
      if (w >= rep.size()) return false;
  const auto z = node.element.evaluate(rep);
  const auto nz = evaluate(node.factor, z);

  if (!irreducible) {
    if (node.children.size() != 2) return false;
    Subspace sub;
    if (node.method == "spin") {
      if (node.vector.cols() != n || node.vector.is_zero() || !kernel_contains(nz, node.vector)) return false;
      sub = spin(rep, node.vector);
    } else if (node.method == "dual-spin") {
      const auto& u = node.dual_vector;
      if (u.cols() != n || u.is_zero() || !(nz * u.transpose()).is_zero()) return false;
      sub = annihilator(spin(rep.transposed(), u));
    } else {
      return false;
    }
    if (sub.dim() == 0 || sub.dim() == n || sub.dim() != node.sub_dim) return false;
    const auto sq = sub_quotient(rep, sub);
    return verify_node(sq.sub, node.children[0]) && verify_node(sq.quotient, node.children[1]);
  }

  const auto kernel = left_kernel(nz);
  if (kernel.rows() != node.nullity || kernel.rows() == 0) return false;
  const auto& v = node.vector;
  const auto& u = node.dual_vector;
  if (v.cols() != n || u.cols() != n || v.is_zero() || u.is_zero()) return false;
  if (!kernel_contains(nz, v) || !(nz * u.transpose()).is_zero()) return false;
  const auto transposed = rep.transposed();
  if (node.method == "norton") {
    if (static_cast<int>(node.nullity) != node.factor.degree()) return false;
    return spins_full(rep, v) && spins_full(transposed, u);
  }
  if (node.method == "norton-exhaustive") {
    return for_each_projective(kernel, [&](const FFMatrix& w) { return spins_full(rep, w); }) &&
           for_each_projective(kernel_basis(nz), [&](const FFMatrix& w) { return spins_full(transposed, w); });
  }
  return false;
}

nlohmann::json row_to_json(const FFMatrix& v) {
  if (v.rows() == 0) return nullptr;
  return v.row_entries(0);
}

FFMatrix row_from_json(const nlohmann::json& j, std::uint32_t p) {
  if (j.is_null()) return {};
  return FFMatrix::row_vector(p, j.get<std::vector<std::uint32_t>>());
}

}  // namespace

Subspace spin(const Representation& rep, const FFMatrix& seeds) {
  if (seeds.cols() != rep.dim()) throw std::invalid_argument("spin: seed length does not match the module");
  const auto sb = standard_basis(rep, seeds);
  return Subspace::span(sb.vectors.rows() ? sb.vectors : FFMatrix(rep.prime(), 0, rep.dim()));
}

FFMatrix AlgebraElement::evaluate(const Representation& rep) const {
  const auto p = rep.prime();
  FFMatrix sum(p, rep.dim(), rep.dim());
  for (const auto& t : terms) sum += word_matrix(rep, t.word) * (t.coeff % p);
  return sum;
}

AlgebraElement AlgebraElement::random(std::size_t generators, std::uint32_t p, std::mt19937_64& rng) {
  if (generators == 0) throw std::invalid_argument("random element needs at least one generator");
  AlgebraElement e;
  const auto count = uniform(rng, 3, 6);
  for (std::uint32_t i = 0; i < count; ++i) {
    WordTerm t;
    t.coeff = uniform(rng, 1, p - 1);
    const auto len = uniform(rng, 1, 4);
    for (std::uint32_t j = 0; j < len; ++j)
      t.word.push_back(uniform(rng, 0, static_cast<std::uint32_t>(generators - 1)));
    e.terms.push_back(std::move(t));
  }
  return e;
}

std::vector<std::size_t> CompositionSeries::dimensions() const {
  std::vector<std::size_t> d;
  for (const auto& f : factors) d.push_back(f.dim());
  return d;
}

CompositionSeries chop(const Representation& rep, std::uint64_t seed, const ChopOptions& options) {
  Chopper c{options, std::mt19937_64(seed), {}};
  auto cert = c.run(rep);
  return {std::move(c.factors), std::move(cert)};
}

bool verify_certificate(const Representation& rep, const ChopNode& certificate) {
  try {
    return verify_node(rep, certificate);
  } catch (const std::exception&) {
    return false;
  }
}

nlohmann::json certificate_to_json(const ChopNode& node) {
  nlohmann::json j;
  j["kind"] = node.kind == ChopNode::Kind::split ? "split" : "irreducible";
  j["method"] = node.method;
  j["dim"] = node.dim;
  auto& terms = j["element"] = nlohmann::json::array();
  for (const auto& t : node.element.terms) terms.push_back({{"coeff", t.coeff}, {"word", t.word}});
  j["factor"] = node.factor.coeffs();
  j["nullity"] = node.nullity;
  j["vector"] = row_to_json(node.vector);
  j["dual_vector"] = row_to_json(node.dual_vector);
  j["sub_dim"] = node.sub_dim;
  auto& children = j["children"] = nlohmann::json::array();
  for (const auto& c : node.children) children.push_back(certificate_to_json(c));
  return j;
}

ChopNode certificate_from_json(const nlohmann::json& j, std::uint32_t p) {
  ChopNode node;
  node.kind = j.at("kind").get<std::string>() == "split" ? ChopNode::Kind::split : ChopNode::Kind::irreducible;
  node.method = j.at("method").get<std::string>();
  node.dim = j.at("dim").get<std::size_t>();
  for (const auto& t : j.at("element"))
    node.element.terms.push_back({t.at("coeff").get<std::uint32_t>(), t.at("word").get<std::vector<std::size_t>>()});
  node.factor = FFPoly(p, j.at("factor").get<std::vector<std::uint32_t>>());
  node.nullity = j.at("nullity").get<std::size_t>();
  node.vector = row_from_json(j.at("vector"), p);
  node.dual_vector = row_from_json(j.at("dual_vector"), p);
  node.sub_dim = j.at("sub_dim").get<std::size_t>();
  for (const auto& c : j.at("children")) node.children.push_back(certificate_from_json(c, p));
  return node;
}

std::optional<FFMatrix> find_isomorphism(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.prime() != b.prime() || a.dim() != b.dim() || a.size() != b.size()) return std::nullopt;
  const auto p = a.prime();
  const auto n = a.dim();
  if (n == 0) return FFMatrix(p, 0, 0);
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 400; ++round) {
    const auto element = AlgebraElement::random(a.size(), p, rng);
    const auto za = element.evaluate(a);
    const auto zb = element.evaluate(b);
    const auto cp = char_poly(za);
    if (cp != char_poly(zb)) return std::nullopt;
    for (const auto& pf : factor_squarefree(cp, rng())) {
      if (pf.factor.degree() > 12) continue;
      const auto ka = left_kernel(evaluate(pf.factor, za));
      if (static_cast<int>(ka.rows()) != pf.factor.degree()) continue;
      const auto kb = left_kernel(evaluate(pf.factor, zb));
      if (kb.rows() != ka.rows()) return std::nullopt;
      if (projective_count(p, kb.rows()) > 4096) continue;

      const auto sa = standard_basis(a, ka.row(0));
      if (sa.vectors.rows() != n) throw std::invalid_argument("isomorphism test needs irreducible modules");
      const auto sa_inv = inverse(sa.vectors);
      std::optional<FFMatrix> result;
      for_each_projective(kb, [&](const FFMatrix& w) {
        // Replay the spin words of a from w inside b.
        FFMatrix c(p, n, n);
        for (std::size_t i = 0; i < n; ++i) {
          const auto [parent, gen] = sa.steps[i];
          if (parent == static_cast<std::size_t>(-1))
            c.set_row(i, w);
          else
            c.set_row(i, c.row(parent) * b.generator(gen));
        }
        if (rank(c) != n) return true;
        const auto phi = sa_inv * c;
        bool ok = true;
        for (std::size_t gi = 0; gi < a.size() && ok; ++gi) ok = a.generator(gi) * phi == phi * b.generator(gi);
        if (ok) result = phi;
        return !ok;
      });
      return result;
    }
  }
  throw std::runtime_error("isomorphism test: no element with a simple kernel found");
}

bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
  return find_isomorphism(a, b, seed).has_value();
}

std::string identify_factor(const Representation& factor, const std::vector<CatalogEntry>& catalog,
                            std::uint64_t seed) {
  for (const auto& entry : catalog) {
    if (entry.rep.dim() != factor.dim() || entry.rep.prime() != factor.prime() || entry.rep.size() != factor.size())
      continue;
    if (isomorphic(entry.rep, factor, seed)) return entry.label;
  }
  return "unidentified";
}

}  // namespace congrep
