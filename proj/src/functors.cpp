#include "congrep/functors.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "congrep/combinatorics.hpp"

namespace congrep {

namespace {

using SparseRow = std::vector<std::pair<int, std::uint32_t>>;

std::vector<SparseRow> sparse_rows(const FFMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (const auto v = m(r, c)) rows[r].emplace_back(static_cast<int>(c), v);
  return rows;
}

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

std::string joined_name(const std::vector<BasisLabel>& labels, const std::vector<int>& subset, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += sep;
    out += labels[static_cast<std::size_t>(subset[i])].name;
  }
  return out;
}

// Column-convention matrix A of a tautological generator and its inverse, as plain arrays.
struct Conjugator {
  std::vector<std::uint32_t> a, ainv;
  std::size_t n;
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  std::uint32_t inv(std::size_t r, std::size_t c) const { return ainv[r * n + c]; }
};

Conjugator conjugator(const FFMatrix& g) {
  const std::size_t n = g.rows();
  const FFMatrix inv = inverse(g);
  Conjugator c{std::vector<std::uint32_t>(n * n), std::vector<std::uint32_t>(n * n), n};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      c.a[r * n + s] = g(s, r);
      c.ainv[r * n + s] = inv(s, r);
    }
  return c;
}

// A E_rs A^{-1} as a dense n x n array.
std::vector<std::uint32_t> conjugate_unit(const Conjugator& c, std::size_t r, std::size_t s, std::uint32_t p) {
  const std::size_t n = c.n;
  std::vector<std::uint32_t> out(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) out[u * n + v] = (c.at(u, r) * c.inv(s, v)) % p;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> traceless_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j || i + 1 < n) pos.emplace_back(i, j);
  return pos;
}

}  // namespace

LabeledModule tautological_module(const SymplecticSpace& space) {
  LabeledModule m{burkhardt_generators(space), {}, WeightSystem::symplectic, space.genus};
  for (std::size_t i = 0; i < space.dimension(); ++i)
    m.labels.push_back({{static_cast<int>(i)}, {}, SymplecticSpace::basis_name(i)});
  return m;
}

LabeledModule tautological_module(int n, std::uint32_t p) {
  LabeledModule m{sl_generators(n, p), {}, WeightSystem::linear, n};
  for (int i = 0; i < n; ++i) m.labels.push_back({{i}, {}, "e" + std::to_string(i + 1)});
  return m;
}

LabeledModule exterior_power(const LabeledModule& base, int k) {
  const int n = static_cast<int>(base.dim());
  if (k < 0 || k > n) throw std::invalid_argument("exterior_power: degree out of range");
  if (n > 64) throw std::invalid_argument("exterior_power: base dimension above 64");
  const std::uint32_t p = base.rep.prime();
  const auto subsets = k_subsets(n, k);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subset_mask(subsets[i]), i);

  LabeledModule out{Representation(p, subsets.size()), {}, base.system, base.rank};
  for (const auto& s : subsets) {
    BasisLabel l;
    for (int i : s) {
      l.primal = merged(l.primal, base.labels[static_cast<std::size_t>(i)].primal);
      l.dual = merged(l.dual, base.labels[static_cast<std::size_t>(i)].dual);
    }
    l.name = k == 0 ? "1" : joined_name(base.labels, s, "^");
    out.labels.push_back(std::move(l));
  }

  for (std::size_t gi = 0; gi < base.rep.size(); ++gi) {
    const auto rows = sparse_rows(base.rep.generator(gi));
    FFMatrix m(p, subsets.size(), subsets.size());
    std::vector<int> chosen(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < subsets.size(); ++r) {
      const auto& s = subsets[r];
      std::vector<std::uint32_t> acc(subsets.size(), 0);
      // Expand the wedge of the images of the basis vectors in s.
      auto expand = [&](auto&& self, std::size_t pos, std::uint32_t coef, std::uint64_t used) -> void {
        if (pos == s.size()) {
          std::vector<int> idx = chosen;
          const int sign = sort_sign(idx);
          const std::size_t t = index.at(subset_mask(idx));
          acc[t] = (acc[t] + (sign > 0 ? coef : p - coef)) % p;
          return;
        }
        for (const auto& [c, v] : rows[static_cast<std::size_t>(s[pos])]) {
          const std::uint64_t bit = std::uint64_t{1} << c;
          if (used & bit) continue;
          chosen[pos] = c;
          self(self, pos + 1, (coef * v) % p, used | bit);
        }
      };
      expand(expand, 0, 1, 0);
      for (std::size_t t = 0; t < acc.size(); ++t)
        if (acc[t]) m.set(r, t, acc[t]);
    }
    out.rep.add_generator(base.rep.name(gi), std::move(m));
  }
  return out;
}

LabeledModule dual(const LabeledModule& m) {
  LabeledModule out{m.rep.dual(), {}, m.system, m.rank};
  for (const auto& l : m.labels) out.labels.push_back({l.dual, l.primal, l.name + "*"});
  return out;
}

LabeledModule tensor(const LabeledModule& a, const LabeledModule& b) {
  if (a.rep.prime() != b.rep.prime() || a.rep.names() != b.rep.names())
    throw std::invalid_argument("tensor: factors are not modules for the same generators");
  const std::uint32_t p = a.rep.prime();
  const std::size_t da = a.dim(), db = b.dim();
  LabeledModule out{Representation(p, da * db), {}, a.system == WeightSystem::none ? b.system : a.system,
                    std::max(a.rank, b.rank)};
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels)
      out.labels.push_back({merged(la.primal, lb.primal), merged(la.dual, lb.dual),
                            a.dim() == 1 && la.name == "1" ? lb.name : la.name + "(x)" + lb.name});
  for (std::size_t gi = 0; gi < a.rep.size(); ++gi) {
    const auto ra = sparse_rows(a.rep.generator(gi));
    const auto rb = sparse_rows(b.rep.generator(gi));
    FFMatrix m(p, da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j)
        for (const auto& [k, x] : ra[i])
          for (const auto& [l, y] : rb[j])
            m.set(i * db + j, static_cast<std::size_t>(k) * db + static_cast<std::size_t>(l), (x * y) % p);
    out.rep.add_generator(a.rep.name(gi), std::move(m));
  }
  return out;
}

FFMatrix contraction_matrix(const SymplecticSpace& space, int k) {
  const int n = static_cast<int>(space.dimension());
  if (k < 2 || k > n) throw std::invalid_argument("contraction_matrix: degree out of range");
  const auto src = k_subsets(n, k);
  const auto tgt = k_subsets(n, k - 2);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(subset_mask(tgt[i]), i);
  FFMatrix d(space.p, src.size(), tgt.size());
  for (std::size_t r = 0; r < src.size(); ++r) {
    const std::uint64_t mask = subset_mask(src[r]);
    for (int b = 0; b < space.genus; ++b) {
      const std::uint64_t block = std::uint64_t{3} << (2 * b);
      if ((mask & block) == block) d.set(r, index.at(mask & ~block), 1);
    }
  }
  return d;
}

FFMatrix omega_vector(const SymplecticSpace& space) {
  const auto pairs = k_subsets(static_cast<int>(space.dimension()), 2);
  FFMatrix w(space.p, 1, pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i][0] % 2 == 0 && pairs[i][1] == pairs[i][0] + 1) w.set(0, i, 1);
  return w;
}

FFMatrix epsilon_matrix(const SymplecticSpace& space) {
  const int n = static_cast<int>(space.dimension());
  const auto triples = k_subsets(n, 3);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < triples.size(); ++i) index.emplace(subset_mask(triples[i]), i);
  FFMatrix e(space.p, static_cast<std::size_t>(n), triples.size());
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < space.genus; ++b) {
      if (j / 2 == b) continue;
      // a_b ^ b_b ^ X_j sorts with an even permutation.
      const std::uint64_t mask = (std::uint64_t{3} << (2 * b)) | (std::uint64_t{1} << j);
      e.set(static_cast<std::size_t>(j), index.at(mask), 1);
    }
  return e;
}

FFMatrix xi_matrix(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  FFMatrix x(p, dim * dim, 1);
  for (std::size_t i = 0; i < dim; ++i) x.set(i * dim + i, 0, 1);
  return x;
}

LabeledModule matrix_module(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto taut = sl_generators(n, p);
  LabeledModule out{Representation(p, dim * dim), {}, WeightSystem::linear, n};
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t s = 0; s < dim; ++s)
      out.labels.push_back({{static_cast<int>(r)}, {static_cast<int>(s)},
                            "E" + std::to_string(r + 1) + "," + std::to_string(s + 1)});
  for (std::size_t gi = 0; gi < taut.size(); ++gi) {
    const auto c = conjugator(taut.generator(gi));
    FFMatrix m(p, dim * dim, dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s) {
        const auto img = conjugate_unit(c, r, s, p);
        for (std::size_t t = 0; t < img.size(); ++t)
          if (img[t]) m.set(r * dim + s, t, img[t]);
      }
    out.rep.add_generator(taut.name(gi), std::move(m));
  }
  return out;
}

bool psi_check(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto v = tautological_module(n, p);
  const auto src = tensor(dual(v), v);
  const auto tgt = matrix_module(n, p);
  FFMatrix psi(p, dim * dim, dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) psi.set(a * dim + b, b * dim + a, 1);
  return rank(psi) == dim * dim && is_equivariant(src.rep, tgt.rep, psi);
}

LabeledModule johnson_target(int n, std::uint32_t p) {
  const auto v = tautological_module(n, p);
  return tensor(dual(v), exterior_power(v, 2));
}

FFMatrix kappa_matrix(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto pairs = k_subsets(n, 2);
  FFMatrix k(p, dim * pairs.size(), dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto j = static_cast<std::size_t>(pairs[t][0]);
      const auto l = static_cast<std::size_t>(pairs[t][1]);
      const std::size_t row = i * pairs.size() + t;
      if (i == j) k.set(row, l, 1);
      if (i == l) k.set(row, j, p - 1);
    }
  return k;
}

FFMatrix tau_matrix(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto pairs = k_subsets(n, 2);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t t = 0; t < pairs.size(); ++t) index.emplace(subset_mask(pairs[t]), t);
  FFMatrix tau(p, dim, dim * pairs.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::size_t col = static_cast<std::size_t>(i) * pairs.size() + index.at(subset_mask({k, i}));
      tau.set(static_cast<std::size_t>(k), col, k < i ? 1 : p - 1);
    }
  return tau;
}

LabeledModule traceless_module(int n, std::uint32_t p) {
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto pos = traceless_positions(dim);
  std::vector<std::vector<std::size_t>> index(dim, std::vector<std::size_t>(dim, pos.size()));
  for (std::size_t t = 0; t < pos.size(); ++t) index[pos[t].first][pos[t].second] = t;
  const auto taut = sl_generators(n, p);
  LabeledModule out{Representation(p, pos.size()), {}, WeightSystem::linear, n};
  for (const auto& [i, j] : pos) {
    std::string name = "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
    if (i == j) name += "-E" + std::to_string(n) + "," + std::to_string(n);
    out.labels.push_back({{static_cast<int>(i)}, {static_cast<int>(j)}, std::move(name)});
  }
  for (std::size_t gi = 0; gi < taut.size(); ++gi) {
    const auto c = conjugator(taut.generator(gi));
    FFMatrix m(p, pos.size(), pos.size());
    for (std::size_t t = 0; t < pos.size(); ++t) {
      const auto [i, j] = pos[t];
      auto img = conjugate_unit(c, i, j, p);
      if (i == j) {
        const auto last = conjugate_unit(c, dim - 1, dim - 1, p);
        for (std::size_t x = 0; x < img.size(); ++x) img[x] = (img[x] + p - last[x]) % p;
      }
      for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
          if (u == v && u + 1 == dim) continue;
          if (const auto val = img[u * dim + v]) m.set(t, index[u][v], val);
        }
    }
    out.rep.add_generator(taut.name(gi), std::move(m));
  }
  return out;
}

FFMatrix traceless_identity(int n, std::uint32_t p) {
  if (static_cast<std::uint32_t>(n) % p != 0) throw std::invalid_argument("traceless_identity: p must divide n");
  const std::size_t dim = static_cast<std::size_t>(n);
  const auto pos = traceless_positions(dim);
  FFMatrix id(p, 1, pos.size());
  for (std::size_t t = 0; t < pos.size(); ++t)
    if (pos[t].first == pos[t].second) id.set(0, t, 1);
  return id;
}

SubQuotient sub_quotient(const Representation& m, const Subspace& s) {
  if (s.ambient() != m.dim() || s.prime() != m.prime())
    throw std::invalid_argument("sub_quotient: subspace does not live in the module");
  const std::uint32_t p = m.prime();
  const std::size_t d = s.dim(), n = m.dim();
  std::vector<bool> pivot(n, false);
  for (auto c : s.pivots()) pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) complement.push_back(c);

  SubQuotient out{Representation(p, d), Representation(p, n - d)};
  for (std::size_t gi = 0; gi < m.size(); ++gi) {
    const FFMatrix& g = m.generator(gi);
    const FFMatrix imgs = s.basis() * g;
    FFMatrix sub(p, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const FFMatrix rest = s.reduce(imgs, i);
      if (!rest.is_zero()) throw NonInvariantSubspace(m.name(gi), i);
      for (std::size_t j = 0; j < d; ++j)
        if (const auto v = imgs(i, s.pivots()[j])) sub.set(i, j, v);
    }
    FFMatrix quo(p, n - d, n - d);
    for (std::size_t a = 0; a < complement.size(); ++a) {
      const FFMatrix w = s.reduce(g, complement[a]);
      for (std::size_t b = 0; b < complement.size(); ++b)
        if (const auto v = w(0, complement[b])) quo.set(a, b, v);
    }
    out.sub.add_generator(m.name(gi), std::move(sub));
    out.quotient.add_generator(m.name(gi), std::move(quo));
  }
  return out;
}

Subspace restrict_to(const Subspace& s, const Subspace& inner) {
  FFMatrix rows(s.prime(), inner.dim(), s.dim());
  for (std::size_t i = 0; i < inner.dim(); ++i) rows.set_row(i, s.coordinates(inner.basis(), i));
  return Subspace::span(rows);
}

Representation section(const Representation& m, const Subspace& upper, const Subspace& lower) {
  if (!upper.contains(lower)) throw std::invalid_argument("section: lower subspace not contained in upper");
  const auto sub = sub_quotient(m, upper).sub;
  return sub_quotient(sub, restrict_to(upper, lower)).quotient;
}

bool is_equivariant(const Representation& source, const Representation& target, const FFMatrix& map) {
  if (source.size() != target.size() || map.rows() != source.dim() || map.cols() != target.dim()) return false;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!(source.generator(i) * map == map * target.generator(i))) return false;
  return true;
}

}  // namespace congrep
