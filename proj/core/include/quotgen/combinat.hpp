#pragma once

#include <vector>

namespace quotgen {

// All s-element subsets of {1, ..., n}, each ascending, in lexicographic
// order.
std::vector<std::vector<int>> subsets_of_size(int n, int s);

// All k-tuples of nonnegative integers with the given sum, in lexicographic
// order (graded enumeration happens by calling this per total).
std::vector<std::vector<int>> compositions_of(int total, int k);

}  // namespace quotgen
