#include "congrep/sato.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "congrep/combinatorics.hpp"
#include "congrep/groups.hpp"
#include "congrep/meataxe.hpp"

namespace congrep {

namespace {

constexpr HomologyClass kAMask = 0x55555555U;

void check_genus(int g) {
  if (g < 1 || g > 8) throw std::invalid_argument("genus must lie in [1, 8]");
}

std::uint8_t mod8(int v) { return static_cast<std::uint8_t>(((v % 8) + 8) % 8); }

HomologyClass row_mask(const FFMatrix& m, std::size_t r) {
  HomologyClass out = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(r, c)) out |= basis_class(static_cast<int>(c));
  return out;
}

std::vector<int> support(HomologyClass c) {
  std::vector<int> out;
  for (int i = 0; c; ++i, c >>= 1U)
    if (c & 1U) out.push_back(i);
  return out;
}

}  // namespace

int intersection(HomologyClass x, HomologyClass y) {
  const auto ab = (x & kAMask) & ((y >> 1U) & kAMask);
  const auto ba = ((x >> 1U) & kAMask) & (y & kAMask);
  return (std::popcount(ab) + std::popcount(ba)) & 1;
}

std::string class_name(HomologyClass c) {
  if (c == 0) return "0";
  std::string out;
  for (int i : support(c)) out += (out.empty() ? "X" : "+X") + std::to_string(i + 1);
  return out;
}

QuadraticForm::QuadraticForm(int genus, HomologyClass basis_values) : g_(genus), values_(basis_values) {
  check_genus(genus);
  if (basis_values >> (2 * genus)) throw std::invalid_argument("quadratic form values outside the basis");
}

int QuadraticForm::operator()(HomologyClass c) const {
  const auto pairs = (c & kAMask) & ((c >> 1U) & kAMask);
  return (std::popcount(c & values_) + std::popcount(pairs)) & 1;
}

Z8Function::Z8Function(int genus) : g_(genus) {
  check_genus(genus);
  values_.assign(std::size_t{1} << (2 * genus), 0);
}

Z8Function Z8Function::constant(int genus, std::uint8_t c) {
  Z8Function f(genus);
  for (auto& v : f.values_) v = c & 7U;
  return f;
}

Z8Function& Z8Function::operator+=(const Z8Function& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = (values_[i] + o.values_[i]) & 7U;
  return *this;
}

Z8Function& Z8Function::operator-=(const Z8Function& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = (values_[i] + 8 - o.values_[i]) & 7U;
  return *this;
}

Z8Function& Z8Function::operator*=(const Z8Function& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = (values_[i] * o.values_[i]) & 7U;
  return *this;
}

Z8Function& Z8Function::operator*=(int s) {
  const auto m = mod8(s);
  for (auto& v : values_) v = (v * m) & 7U;
  return *this;
}

bool Z8Function::is_zero() const {
  for (auto v : values_)
    if (v) return false;
  return true;
}

std::string Z8Function::hex() const {
  std::string out;
  out.reserve(values_.size());
  for (auto v : values_) out.push_back(static_cast<char>('0' + v));
  return out;
}

Z8Function i_function(int genus, HomologyClass z) {
  Z8Function f(genus);
  for (HomologyClass y = 0; y < f.size(); ++y) f[y] = static_cast<std::uint8_t>(intersection(z, y));
  return f;
}

Z8Function cbar(const QuadraticForm& q, HomologyClass c) {
  auto f = i_function(q.genus(), c);
  if (q(c)) f *= -1;
  return f;
}

Z8Function beta_eval(const QuadraticForm& q, const TwistWord& word) {
  Z8Function sum(q.genus());
  for (const auto& t : word) sum += cbar(q, t.cls) * t.half_exponent;
  return sum;
}

TwistWord bounding_pair_word(HomologyClass c1, HomologyClass c2, HomologyClass d1) {
  const HomologyClass c3 = c1 ^ d1;
  if (intersection(c1, c2) != 1 || intersection(c2, c3) != 1 || intersection(c1, c3) != 0)
    throw std::invalid_argument("bounding pair: classes do not form a chain");
  return {{c1, 1}, {c1 ^ c2, 1}, {c1 ^ c2 ^ c3, 1}, {c2, 1}, {c2 ^ c3, 1}, {c3, 1}, {d1, -1}};
}

TwistWord separating_twist_word(HomologyClass c1, HomologyClass c2) {
  if (intersection(c1, c2) != 1) throw std::invalid_argument("separating twist: classes must meet once");
  return {{c1, 1}, {c1 ^ c2, 1}, {c1, 1}, {c1 ^ c2, 1}, {c2, 2}};
}

std::vector<HomologyClass> standard_chain(int genus) {
  check_genus(genus);
  std::vector<HomologyClass> chain{basis_class(1)};
  for (int i = 0; i < genus; ++i) {
    chain.push_back(basis_class(2 * i));
    if (i + 1 < genus) chain.push_back(basis_class(2 * i + 1) | basis_class(2 * i + 3));
  }
  return chain;
}

TwistWord boundary_twist_word(int genus) {
  const auto chain = standard_chain(genus);
  const std::size_t k = chain.size();
  // f in chain coordinates: c1 -> c1 + c2, c_i -> c_{i+1}, c_k -> c2 + ... + c_k.
  auto apply = [&](std::uint32_t coords) {
    std::uint32_t out = 0;
    if (coords & 1U) out ^= 0b11U;
    for (std::size_t i = 1; i + 1 < k; ++i)
      if (coords >> i & 1U) out ^= 1U << (i + 1);
    if (coords >> (k - 1) & 1U) out ^= ((1U << k) - 1) & ~1U;
    return out;
  };
  auto to_class = [&](std::uint32_t coords) {
    HomologyClass c = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (coords >> i & 1U) c ^= chain[i];
    return c;
  };
  TwistWord word;
  std::uint32_t coords = 1;
  for (std::size_t j = 0; j < 2 * k; ++j) {
    word.push_back({to_class(coords), 1});
    coords = apply(coords);
  }
  HomologyClass d1 = 0;
  for (int i = 0; i < genus; ++i) d1 |= basis_class(2 * i);
  word.push_back({d1, 2});
  return word;
}

TwistWord push_word(int genus) {
  if (genus < 2) throw std::invalid_argument("push needs genus at least 2");
  TwistWord word;
  const auto a = basis_class(2 * genus - 2);
  for (int i = 0; i + 1 < genus; ++i) {
    const auto part = bounding_pair_word(basis_class(2 * i), basis_class(2 * i + 1), a);
    word.insert(word.end(), part.begin(), part.end());
  }
  return word;
}

std::vector<std::vector<int>> w_basis_subsets(int genus) {
  check_genus(genus);
  std::vector<std::vector<int>> out;
  for (int d = 1; d <= 3; ++d)
    for (auto& s : k_subsets(2 * genus, d)) out.push_back(std::move(s));
  return out;
}

Z8Function monomial_function(const QuadraticForm& q, const std::vector<int>& subset) {
  if (subset.empty() || subset.size() > 3) throw std::invalid_argument("monomial degree must be 1, 2 or 3");
  auto f = Z8Function::constant(q.genus(), static_cast<std::uint8_t>(1U << (subset.size() - 1)));
  for (int s : subset) f *= cbar(q, basis_class(s));
  return f;
}

std::string monomial_label(const std::vector<int>& subset) {
  std::string out = subset.size() == 1 ? "" : std::to_string(1U << (subset.size() - 1));
  for (int s : subset) out += "X" + std::to_string(s + 1);
  return out;
}

MonomialBasis monomial_basis(const QuadraticForm& q) {
  MonomialBasis b;
  b.subsets = w_basis_subsets(q.genus());
  for (const auto& s : b.subsets) {
    b.labels.push_back(monomial_label(s));
    b.functions.push_back(monomial_function(q, s));
  }
  return b;
}

SatoBasisReport check_candidate_basis(const std::vector<Z8Function>& candidates, const std::vector<int>& degrees) {
  if (candidates.size() != degrees.size()) throw std::invalid_argument("one degree per candidate");
  std::vector<Z8Vector> span;
  std::size_t expected_bits = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (degrees[i] < 1 || degrees[i] > 3) throw std::invalid_argument("candidate degree must be 1, 2 or 3");
    span.push_back(candidates[i].values());
    expected_bits += static_cast<std::size_t>(4 - degrees[i]);
  }
  const auto s = z8_span_structure(span);
  SatoBasisReport r;
  r.exponents = {s.order8, s.order4, s.order2};
  r.independent = 3 * s.order8 + 2 * s.order4 + s.order2 == expected_bits;
  return r;
}

SatoBasisReport verify_sato_basis(const QuadraticForm& q, bool check_image) {
  const auto b = monomial_basis(q);
  std::vector<int> degrees;
  for (const auto& s : b.subsets) degrees.push_back(static_cast<int>(s.size()));
  auto report = check_candidate_basis(b.functions, degrees);
  if (check_image) {
    std::vector<Z8Vector> span, targets;
    for (const auto& f : b.functions) span.push_back(f.values());
    for (HomologyClass c = 1; c < (HomologyClass{1} << (2 * q.genus())); ++c) targets.push_back(cbar(q, c).values());
    report.spans_image = true;
    for (const auto& m : z8_solve_many(span, targets)) report.spans_image = report.spans_image && m.member;
  }
  return report;
}

LabeledModule w_mod2_representation(const QuadraticForm& q) {
  const int g = q.genus();
  const auto subsets = w_basis_subsets(g);
  const std::size_t n = subsets.size();
  auto index_of = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    const std::size_t n1 = static_cast<std::size_t>(2 * g);
    const std::size_t n2 = binomial(2 * g, 2);
    std::size_t offset = s.size() == 1 ? 0 : s.size() == 2 ? n1 : n1 + n2;
    for (std::size_t i = offset;; ++i)
      if (subsets[i] == s) return i;
  };

  LabeledModule out;
  out.rep = Representation(2, n);
  out.system = WeightSystem::symplectic;
  out.rank = g;
  for (const auto& s : subsets) out.labels.push_back({s, {}, monomial_label(s)});

  const auto sp = burkhardt_generators(SymplecticSpace{g, 2});
  for (std::size_t gi = 0; gi < sp.size(); ++gi) {
    std::vector<std::vector<int>> images;
    for (std::size_t r = 0; r < sp.generator(gi).rows(); ++r) images.push_back(support(row_mask(sp.generator(gi), r)));
    FFMatrix m(2, n, n);
    auto toggle = [&](std::size_t row, std::vector<int> s) {
      const auto c = index_of(std::move(s));
      m.set(row, c, m(row, c) ^ 1U);
    };
    for (std::size_t row = 0; row < n; ++row) {
      const auto& s = subsets[row];
      const auto& a = images[static_cast<std::size_t>(s[0])];
      if (s.size() == 1) {
        for (std::size_t i = 0; i < a.size(); ++i) {
          toggle(row, {a[i]});
          for (std::size_t j = i + 1; j < a.size(); ++j) {
            toggle(row, {a[i], a[j]});
            for (std::size_t k = j + 1; k < a.size(); ++k) toggle(row, {a[i], a[j], a[k]});
          }
        }
      } else if (s.size() == 2) {
        const auto& b = images[static_cast<std::size_t>(s[1])];
        for (int i : a)
          for (int k : b)
            if (i != k) toggle(row, {i, k});
        for (int i : a)
          for (std::size_t x = 0; x < b.size(); ++x)
            for (std::size_t y = x + 1; y < b.size(); ++y)
              if (i != b[x] && i != b[y]) toggle(row, {i, b[x], b[y]});
        for (std::size_t x = 0; x < a.size(); ++x)
          for (std::size_t y = x + 1; y < a.size(); ++y)
            for (int l : b)
              if (l != a[x] && l != a[y]) toggle(row, {a[x], a[y], l});
      } else {
        const auto& b = images[static_cast<std::size_t>(s[1])];
        const auto& c = images[static_cast<std::size_t>(s[2])];
        for (int i : a)
          for (int k : b)
            for (int l : c)
              if (i != k && k != l && i != l) toggle(row, {i, k, l});
      }
    }
    out.rep.add_generator(sp.name(gi), std::move(m));
  }
  return out;
}

FFMatrix w_coordinates(const QuadraticForm& q, const std::vector<Z8Function>& functions) {
  const auto b = monomial_basis(q);
  std::vector<Z8Vector> span, targets;
  for (const auto& f : b.functions) span.push_back(f.values());
  for (const auto& f : functions) {
    if (f.genus() != q.genus()) throw std::invalid_argument("genus mismatch");
    targets.push_back(f.values());
  }
  const auto sols = z8_solve_many(span, targets);
  FFMatrix out(2, functions.size(), span.size());
  for (std::size_t r = 0; r < sols.size(); ++r) {
    if (!sols[r].member) throw std::domain_error("function does not lie in W");
    for (std::size_t c = 0; c < span.size(); ++c)
      if (sols[r].coefficients[c] & 1U) out.set(r, c, 1);
  }
  return out;
}

Subspace w_degree_span(int genus, int min_degree) {
  const auto subsets = w_basis_subsets(genus);
  FFMatrix rows(2, 0, subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (static_cast<int>(subsets[i].size()) >= min_degree) rows.append_rows(FFMatrix::unit_vector(2, subsets.size(), i));
  return Subspace::span(rows);
}

Subspace subgroup_image(const QuadraticForm& q, SubgroupKind kind, int level_half) {
  const int g = q.genus();
  if (g < 3) throw std::invalid_argument("subgroup images need genus at least 3");
  const auto x = [](int i) { return basis_class(i - 1); };
  std::vector<Z8Function> seeds;
  switch (kind) {
    case SubgroupKind::torelli:
      seeds.push_back(beta_eval(q, bounding_pair_word(x(1), x(2), x(3))));
      break;
    case SubgroupKind::johnson_kernel:
      seeds.push_back(beta_eval(q, separating_twist_word(x(1), x(2))));
      break;
    case SubgroupKind::boundary_twist:
      seeds.push_back(beta_eval(q, boundary_twist_word(g)));
      break;
    case SubgroupKind::push:
      seeds.push_back(beta_eval(q, push_word(g)));
      break;
    case SubgroupKind::level:
      if (level_half < 1) throw std::invalid_argument("level must be positive");
      seeds.push_back(beta_eval(q, bounding_pair_word(x(1), x(2), x(3))));
      seeds.push_back(beta_eval(q, {{x(1), level_half}}));
      break;
  }
  const auto w = w_mod2_representation(q);
  return spin(w.rep, w_coordinates(q, seeds));
}

}  // namespace congrep
