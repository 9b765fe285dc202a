#include "congrep/combinatorics.hpp"

#include <utility>

namespace congrep {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t subset_mask(const std::vector<int>& subset) {
  std::uint64_t m = 0;
  for (int i : subset) m |= std::uint64_t{1} << i;
  return m;
}

int sort_sign(std::vector<int>& values) {
  int sign = 1;
  for (std::size_t i = 1; i < values.size(); ++i)
    for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
      if (values[j - 1] == values[j]) return 0;
      std::swap(values[j - 1], values[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace congrep
