#include "congrep/torelli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "congrep/combinatorics.hpp"
#include "congrep/groups.hpp"

namespace congrep {

namespace {

void check_genus(int g) {
  if (g < 1 || g > 8) throw std::invalid_argument("genus must lie in [1, 8]");
}

std::size_t b3_dimension(int g) {
  const auto n = static_cast<std::size_t>(2 * g);
  return 1 + n + binomial(n, 2) + binomial(n, 3);
}

std::vector<std::size_t> b3_index_table(int g) {
  const auto basis = b3_basis(g);
  std::vector<std::size_t> table(std::size_t{1} << (2 * g), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) table[basis[i]] = i;
  return table;
}

}  // namespace

BoolPoly BoolPoly::one(int genus) {
  BoolPoly p(genus);
  p.terms_.insert(0);
  return p;
}

BoolPoly BoolPoly::variable(int genus, int i) {
  BoolPoly p(genus);
  p.terms_.insert(static_cast<BoolMonomial>(1U << i));
  return p;
}

int BoolPoly::degree() const {
  int d = -1;
  for (auto m : terms_) d = std::max(d, std::popcount(static_cast<unsigned>(m)));
  return d;
}

void BoolPoly::toggle(BoolMonomial m) {
  if (!terms_.erase(m)) terms_.insert(m);
}

BoolPoly& BoolPoly::operator+=(const BoolPoly& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (auto m : o.terms_) toggle(m);
  return *this;
}

BoolPoly operator*(const BoolPoly& a, const BoolPoly& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("genus mismatch");
  BoolPoly out(a.g_);
  for (auto x : a.terms_)
    for (auto y : b.terms_) out.toggle(static_cast<BoolMonomial>(x | y));
  return out;
}

std::string BoolPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<BoolMonomial> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](BoolMonomial x, BoolMonomial y) {
    const int dx = std::popcount(static_cast<unsigned>(x)), dy = std::popcount(static_cast<unsigned>(y));
    if (dx != dy) return dx < dy;
    for (int i = 0; i < 16; ++i)
      if ((x >> i & 1) != (y >> i & 1)) return (x >> i & 1) != 0;
    return false;
  });
  std::string out;
  for (auto m : sorted) out += (out.empty() ? "" : " + ") + b3_label(m);
  return out;
}

std::vector<BoolMonomial> b3_basis(int genus) {
  check_genus(genus);
  std::vector<BoolMonomial> out{0};
  for (int d = 1; d <= 3; ++d)
    for (const auto& s : k_subsets(2 * genus, d)) out.push_back(static_cast<BoolMonomial>(subset_mask(s)));
  return out;
}

std::string b3_label(BoolMonomial m) {
  if (m == 0) return "1";
  std::string out;
  for (int i = 0; i < 16; ++i)
    if (m >> i & 1) out += "X" + std::to_string(i + 1);
  return out;
}

BoolPoly b3_class(int genus, HomologyClass c) {
  check_genus(genus);
  if (c == 0) throw std::invalid_argument("zero class");
  BoolPoly out(genus);
  HomologyClass partial = 0;
  for (int i = 0; i < 2 * genus; ++i) {
    if (!(c >> i & 1U)) continue;
    out += BoolPoly::variable(genus, i);
    if (partial && intersection(partial, basis_class(i))) out += BoolPoly::one(genus);
    partial |= basis_class(i);
  }
  return out;
}

BoolPoly b3_reduce(int genus, const std::vector<HomologyClass>& factors) {
  auto out = BoolPoly::one(genus);
  for (auto c : factors) out = out * b3_class(genus, c);
  if (out.degree() > 3) throw std::logic_error("b3_reduce: product of degree above 3");
  return out;
}

FFMatrix b3_coordinates(const BoolPoly& f) {
  const int g = f.genus();
  const auto table = b3_index_table(g);
  FFMatrix row(2, 1, b3_dimension(g));
  for (auto m : f.terms()) {
    if (m >= table.size() || table[m] == row.cols()) throw std::logic_error("monomial of degree above 3");
    row.set(0, table[m], 1);
  }
  return row;
}

LabeledModule b3_representation(int genus) {
  const auto basis = b3_basis(genus);
  const auto n = basis.size();
  LabeledModule out;
  out.rep = Representation(2, n);
  out.system = WeightSystem::symplectic;
  out.rank = genus;
  for (auto m : basis) {
    std::vector<int> primal;
    for (int i = 0; i < 16; ++i)
      if (m >> i & 1) primal.push_back(i);
    out.labels.push_back({primal, {}, b3_label(m)});
  }
  const auto sp = burkhardt_generators(SymplecticSpace{genus, 2});
  for (std::size_t gi = 0; gi < sp.size(); ++gi) {
    const auto& g = sp.generator(gi);
    std::vector<BoolPoly> images;
    for (std::size_t r = 0; r < g.rows(); ++r) {
      HomologyClass c = 0;
      for (std::size_t col = 0; col < g.cols(); ++col)
        if (g(r, col)) c |= basis_class(static_cast<int>(col));
      images.push_back(b3_class(genus, c));
    }
    FFMatrix m(2, n, n);
    for (std::size_t row = 0; row < n; ++row) {
      auto img = BoolPoly::one(genus);
      for (int i = 0; i < 2 * genus; ++i)
        if (basis[row] >> i & 1) img = img * images[static_cast<std::size_t>(i)];
      m.set_row(row, b3_coordinates(img));
    }
    out.rep.add_generator(sp.name(gi), std::move(m));
  }
  return out;
}

B3Filtration b3_filtration(int genus) {
  const auto basis = b3_basis(genus);
  auto upto = [&](int degree) {
    FFMatrix rows(2, 0, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (std::popcount(static_cast<unsigned>(basis[i])) <= degree)
        rows.append_rows(FFMatrix::unit_vector(2, basis.size(), i));
    return Subspace::span(rows);
  };
  return {upto(0), upto(1), upto(2)};
}

}  // namespace congrep
