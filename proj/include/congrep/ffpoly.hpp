#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "congrep/fflinalg.hpp"

namespace congrep {

/// Polynomial over F_p, coefficients low to high; the zero polynomial has no coefficients.
class FFPoly {
 public:
  explicit FFPoly(std::uint32_t p = 2) : p_(p) {}
  FFPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FFPoly x(std::uint32_t p) { return FFPoly(p, {0, 1}); }
  static FFPoly constant(std::uint32_t p, std::uint32_t c) { return FFPoly(p, {c}); }
  static FFPoly monomial(std::uint32_t p, std::size_t degree, std::uint32_t coeff = 1);

  std::uint32_t prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  FFPoly monic() const;
  FFPoly derivative() const;
  std::uint32_t eval(std::uint32_t x) const;

  FFPoly& operator+=(const FFPoly& o);
  FFPoly& operator-=(const FFPoly& o);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(FFPoly a, std::uint32_t s);
  friend FFPoly operator/(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator%(const FFPoly& a, const FFPoly& b);
  friend bool operator==(const FFPoly&, const FFPoly&) = default;
  /// Degree first, then coefficients from the top.
  friend bool operator<(const FFPoly& a, const FFPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly gcd(FFPoly a, FFPoly b);
FFPoly powmod(FFPoly base, std::uint64_t exponent, const FFPoly& modulus);

struct PolyFactor {
  FFPoly factor;
  std::size_t multiplicity;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). The leading coefficient is dropped.
std::vector<PolyFactor> factor_squarefree(const FFPoly& f, std::uint64_t seed = 0x5A70);

FFPoly char_poly(const FFMatrix& m);
/// f(m) by Horner's rule.
FFMatrix evaluate(const FFPoly& f, const FFMatrix& m);

}  // namespace congrep
