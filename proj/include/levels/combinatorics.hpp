#pragma once

#include <functional>
#include <vector>

namespace levels::detail {

// Calls visit on every ascending k-subset of {lo, ..., hi}, in lexicographic order.
inline void for_each_subset(int lo, int hi, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > hi - lo + 1) return;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) chosen[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    visit(chosen);
    int pos = k - 1;
    while (pos >= 0 && chosen[static_cast<std::size_t>(pos)] == hi - (k - 1 - pos)) --pos;
    if (pos < 0) return;
    ++chosen[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) chosen[static_cast<std::size_t>(i)] = chosen[static_cast<std::size_t>(i - 1)] + 1;
  }
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace levels::detail
