#include "quotgen/combinat.hpp"

namespace quotgen {

std::vector<std::vector<int>> subsets_of_size(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (s - static_cast<int>(cur.size())) + 1; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  if (s >= 0 && s <= n) rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> compositions_of(int total, int k) {
  std::vector<std::vector<int>> out;
  if (total < 0 || k < 0) return out;
  if (k == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace quotgen
