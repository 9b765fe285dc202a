#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace congrep {

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} as sorted index lists, lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Bitmask of an index list.
std::uint64_t subset_mask(const std::vector<int>& subset);

/// Sign (+1/-1) of the permutation sorting distinct values, 0 when a value repeats.
int sort_sign(std::vector<int>& values);

}  // namespace congrep
