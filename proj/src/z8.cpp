#include "congrep/z8.hpp"

#include <stdexcept>

namespace congrep {

namespace {

int valuation(std::uint8_t a) {
  a &= 7U;
  if (a == 0) return 3;
  int v = 0;
  while (!(a & 1U)) {
    a >>= 1U;
    ++v;
  }
  return v;
}

// Odd residues are their own inverses mod 8.
std::uint8_t odd_inverse(std::uint8_t u) { return u & 7U; }

struct Diagonalization {
  std::size_t rank{0};
  std::vector<int> pivot_valuation;
  std::vector<std::uint8_t> pivot_unit;
  std::vector<std::vector<std::uint8_t>> col_ops;  // k x k, tracks V with U A V = D
  std::vector<std::vector<std::uint8_t>> rhs;      // rows of U [v_1 ... v_r]
};

// Smith-style elimination on A (columns = spanning vectors) with augmented right-hand side.
Diagonalization diagonalize(std::span<const Z8Vector> span, std::span<const Z8Vector> targets) {
  const std::size_t k = span.size();
  const std::size_t m = k ? span.front().size() : (targets.empty() ? 0 : targets.front().size());
  const bool v = !targets.empty();
  std::vector<std::vector<std::uint8_t>> a(m, std::vector<std::uint8_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    if (span[j].size() != m) throw std::invalid_argument("z8: vectors of different lengths");
    for (std::size_t i = 0; i < m; ++i) a[i][j] = span[j][i] & 7U;
  }
  Diagonalization d;
  d.col_ops.assign(k, std::vector<std::uint8_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) d.col_ops[j][j] = 1;
  d.rhs.assign(m, std::vector<std::uint8_t>(targets.size(), 0));
  for (std::size_t c = 0; c < targets.size(); ++c) {
    if (targets[c].size() != m) throw std::invalid_argument("z8: target length mismatch");
    for (std::size_t i = 0; i < m; ++i) d.rhs[i][c] = targets[c][i] & 7U;
  }
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    int best = 3;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < m && best > 0; ++i)
      for (std::size_t j = t; j < k; ++j) {
        const int val = valuation(a[i][j]);
        if (val < best) {
          best = val;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    if (best == 3) break;
    std::swap(a[t], a[bi]);
    if (v) std::swap(d.rhs[t], d.rhs[bi]);
    if (bj != t) {
      for (auto& row : a) std::swap(row[t], row[bj]);
      for (auto& row : d.col_ops) std::swap(row[t], row[bj]);
    }
    const std::uint8_t unit = static_cast<std::uint8_t>(a[t][t] >> best);
    const std::uint8_t uinv = odd_inverse(unit);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == t || a[i][t] == 0) continue;
      const std::uint8_t f = static_cast<std::uint8_t>(((a[i][t] >> best) * uinv) & 7U);
      for (std::size_t j = t; j < k; ++j) a[i][j] = static_cast<std::uint8_t>((a[i][j] + 8 * 8 - f * a[t][j]) & 7U);
      if (v)
        for (std::size_t c = 0; c < targets.size(); ++c)
          d.rhs[i][c] = static_cast<std::uint8_t>((d.rhs[i][c] + 8 * 8 - f * d.rhs[t][c]) & 7U);
    }
    for (std::size_t j = t + 1; j < k; ++j) {
      if (a[t][j] == 0) continue;
      const std::uint8_t f = static_cast<std::uint8_t>(((a[t][j] >> best) * uinv) & 7U);
      a[t][j] = 0;
      for (auto& row : d.col_ops) row[j] = static_cast<std::uint8_t>((row[j] + 8 * 8 - f * row[t]) & 7U);
    }
    d.pivot_valuation.push_back(best);
    d.pivot_unit.push_back(unit);
    ++d.rank;
  }
  return d;
}

}  // namespace

std::vector<Z8Membership> z8_solve_many(std::span<const Z8Vector> span, std::span<const Z8Vector> targets) {
  const auto d = diagonalize(span, targets);
  const std::size_t k = span.size();
  std::vector<Z8Membership> out;
  out.reserve(targets.size());
  for (std::size_t c = 0; c < targets.size(); ++c) {
    std::vector<std::uint8_t> y(k, 0);
    bool member = true;
    for (std::size_t t = 0; t < d.rhs.size() && member; ++t) {
      const auto r = d.rhs[t][c];
      if (t < d.rank) {
        const int e = d.pivot_valuation[t];
        if (valuation(r) < e) member = false;
        else y[t] = static_cast<std::uint8_t>(((r >> e) * odd_inverse(d.pivot_unit[t])) & 7U);
      } else if (r != 0) {
        member = false;
      }
    }
    if (!member) {
      out.push_back({false, {}});
      continue;
    }
    Z8Membership m{true, std::vector<std::uint8_t>(k, 0)};
    for (std::size_t i = 0; i < k; ++i) {
      unsigned acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc += unsigned{d.col_ops[i][t]} * y[t];
      m.coefficients[i] = static_cast<std::uint8_t>(acc & 7U);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Z8Membership z8_solve_membership(std::span<const Z8Vector> span, const Z8Vector& v) {
  return z8_solve_many(span, std::span<const Z8Vector>(&v, 1)).front();
}

Z8SpanStructure z8_span_structure(std::span<const Z8Vector> span) {
  const auto d = diagonalize(span, {});
  Z8SpanStructure s;
  for (int e : d.pivot_valuation) {
    if (e == 0) ++s.order8;
    else if (e == 1) ++s.order4;
    else ++s.order2;
  }
  return s;
}

}  // namespace congrep
