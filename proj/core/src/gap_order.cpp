#include "lieidx/gap_order.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"

namespace lieidx {

std::vector<Root> generation_order(const RootSystemInfo& rs) {
  const std::size_t l = rs.rank();
  std::vector<Root> level;
  for (std::size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    level.push_back(r);
  }
  std::vector<Root> order = level;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < l; ++i) {
        Root up = beta;
        ++up[i];
        if (rs.is_root(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    order.insert(order.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return order;
}

std::string external_basis_label(const RootSystemInfo& rs, std::size_t k) {
  const std::size_t P = rs.num_positive();
  if (k == 0 || k > rs.algebra_dim()) throw InputError("external basis number out of range");
  if (k > 2 * P) return "h" + std::to_string(k - 2 * P);
  const auto order = generation_order(rs);
  const Root& r = order[(k - 1) % P];
  const std::size_t internal = *rs.positive_index(r) + 1;
  return (k <= P ? "x" : "y") + std::to_string(internal);
}

}  // namespace lieidx
