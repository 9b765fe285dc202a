#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace congrep {

/// Vector over Z/8, entries in [0,7].
using Z8Vector = std::vector<std::uint8_t>;

struct Z8Membership {
  bool member{false};
  /// Coefficients c with sum c_i * span_i = v when member.
  std::vector<std::uint8_t> coefficients;
};

/// Cyclic structure of a submodule of (Z/8)^m: counts of summands Z/8, 2Z/8 and 4Z/8.
struct Z8SpanStructure {
  std::size_t order8{0};
  std::size_t order4{0};
  std::size_t order2{0};
  friend bool operator==(const Z8SpanStructure&, const Z8SpanStructure&) = default;
};

Z8Membership z8_solve_membership(std::span<const Z8Vector> span, const Z8Vector& v);
/// Membership for several targets sharing one elimination of the span.
std::vector<Z8Membership> z8_solve_many(std::span<const Z8Vector> span, std::span<const Z8Vector> targets);
Z8SpanStructure z8_span_structure(std::span<const Z8Vector> span);

}  // namespace congrep
