#include "congrep/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace congrep {

namespace {

void require_same_field(const FFPoly& a, const FFPoly& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("FFPoly: field mismatch");
}

FFPoly pth_root(const FFPoly& f) {
  const std::uint32_t p = f.prime();
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FFPoly(p, std::move(c));
}

// Yun-style squarefree decomposition in characteristic p; input monic.
void squarefree_parts(const FFPoly& f, std::size_t scale, std::vector<std::pair<FFPoly, std::size_t>>& out) {
  const std::uint32_t p = f.prime();
  if (f.degree() <= 0) return;
  const FFPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), scale * p, out);
    return;
  }
  FFPoly c = gcd(f, df);
  FFPoly w = f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    FFPoly y = gcd(w, c);
    FFPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), scale * p, out);
}

FFPoly random_poly(std::uint32_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = coef(rng);
  return FFPoly(p, std::move(c));
}

// Cantor-Zassenhaus splitting of a squarefree product of degree-d irreducibles.
void equal_degree(const FFPoly& f, int d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint32_t p = f.prime();
  for (;;) {
    FFPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() <= 0) continue;
    FFPoly probe(p);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      FFPoly t = a % f;
      probe = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        probe += t;
      }
    } else {
      // Norm-like power a^((p^d - 1)/2) computed as (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      FFPoly t = a % f;
      FFPoly prod = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, f);
        prod = (prod * t) % f;
      }
      probe = powmod(prod, (p - 1) / 2, f) - FFPoly::constant(p, 1);
    }
    FFPoly g = gcd(probe, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

FFPoly::FFPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FFPoly FFPoly::monomial(std::uint32_t p, std::size_t degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return FFPoly(p, std::move(c));
}

void FFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::monic() const {
  if (is_zero()) return *this;
  return *this * inverse_mod(lead(), p_);
}

FFPoly FFPoly::derivative() const {
  std::vector<std::uint32_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(static_cast<std::uint32_t>((c_[i] * (i % p_)) % p_));
  return FFPoly(p_, std::move(d));
}

std::uint32_t FFPoly::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * (x % p_) + *it) % p_;
  return acc;
}

FFPoly& FFPoly::operator+=(const FFPoly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FFPoly(a.p_);
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
  }
  std::vector<std::uint32_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint32_t>(acc[i] % a.p_);
  return FFPoly(a.p_, std::move(c));
}

FFPoly operator*(FFPoly a, std::uint32_t s) {
  for (auto& x : a.c_) x = (x * (s % a.p_)) % a.p_;
  a.trim();
  return a;
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("FFPoly: division by zero polynomial");
  const std::uint32_t p = a.prime();
  if (a.degree() < b.degree()) return {FFPoly(p), a};
  std::vector<std::uint32_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<std::uint32_t> q(r.size() - db, 0);
  const std::uint32_t inv = inverse_mod(b.lead(), p);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint32_t t = (r[k] * inv) % p;
    if (!t) continue;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + (p - t) * bc[j]) % p;
  }
  r.resize(db);
  return {FFPoly(p, std::move(q)), FFPoly(p, std::move(r))};
}

FFPoly operator/(const FFPoly& a, const FFPoly& b) { return divmod(a, b).first; }
FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divmod(a, b).second; }

bool operator<(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FFPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FFPoly gcd(FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    FFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly powmod(FFPoly base, std::uint64_t exponent, const FFPoly& modulus) {
  FFPoly result = FFPoly::constant(modulus.prime(), 1) % modulus;
  base = base % modulus;
  while (exponent) {
    if (exponent & 1U) result = (result * base) % modulus;
    exponent >>= 1U;
    if (exponent) base = (base * base) % modulus;
  }
  return result;
}

std::vector<PolyFactor> factor_squarefree(const FFPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factor_squarefree: zero polynomial");
  const std::uint32_t p = f.prime();
  std::vector<std::pair<FFPoly, std::size_t>> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::uint32_t>, std::pair<FFPoly, std::size_t>> acc;
  for (const auto& [part, mult] : parts) {
    // Distinct-degree split.
    FFPoly rest = part;
    FFPoly h = FFPoly::x(p);
    for (int d = 1; rest.degree() > 0; ++d) {
      if (2 * d > rest.degree()) {
        acc[rest.coeffs()].first = rest;
        acc[rest.coeffs()].second += mult;
        break;
      }
      h = powmod(h, p, rest);
      FFPoly g = gcd(h - FFPoly::x(p), rest);
      if (g.degree() > 0) {
        std::vector<FFPoly> pieces;
        equal_degree(g, d, rng, pieces);
        for (auto& q : pieces) {
          auto& slot = acc[q.coeffs()];
          slot.first = q;
          slot.second += mult;
        }
        rest = rest / g;
        h = h % rest;
      }
    }
  }
  std::vector<PolyFactor> out;
  for (auto& [key, val] : acc) out.push_back({val.first, val.second});
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
  return out;
}

FFPoly char_poly(const FFMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = m.rows();
  const std::uint32_t p = m.prime();
  std::vector<std::uint32_t> h(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h[r * n + c] = m(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return h[r * n + c]; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const std::uint32_t inv = inverse_mod(at(j + 1, j), p);
    for (std::size_t k = j + 2; k < n; ++k) {
      const std::uint32_t f = (at(k, j) * inv) % p;
      if (!f) continue;
      for (std::size_t c = 0; c < n; ++c) at(k, c) = (at(k, c) + (p - f) * at(j + 1, c)) % p;
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = (at(r, j + 1) + f * at(r, k)) % p;
    }
  }

  // Characteristic polynomials of leading principal blocks.
  std::vector<FFPoly> q;
  q.reserve(n + 1);
  q.push_back(FFPoly::constant(p, 1));
  const FFPoly x = FFPoly::x(p);
  for (std::size_t mdim = 1; mdim <= n; ++mdim) {
    const std::size_t k = mdim - 1;
    FFPoly next = (x - FFPoly::constant(p, at(k, k))) * q[k];
    std::uint32_t prod = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      prod = (prod * at(k - i + 1, k - i)) % p;
      if (!prod) break;
      const std::uint32_t coef = (at(k - i, k) * prod) % p;
      if (coef) next -= q[k - i] * coef;
    }
    q.push_back(std::move(next));
  }
  return q[n];
}

FFMatrix evaluate(const FFPoly& f, const FFMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("evaluate: matrix not square");
  const std::uint32_t p = m.prime();
  const FFMatrix id = FFMatrix::identity(p, m.rows()).with_storage(m.storage());
  FFMatrix acc(p, m.rows(), m.cols(), m.storage());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    if (const auto c = f.coeffs()[i]) acc += id * c;
  }
  return acc;
}

}  // namespace congrep
