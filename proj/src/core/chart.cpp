#include "chart.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace dk {

Chart Chart::make(std::vector<std::string> names) {
  if (names.empty()) fail(ErrorCode::BadParams, "chart needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorCode::BadParams, "empty variable name");
    if (!seen.insert(n).second) fail(ErrorCode::BadParams, "duplicate variable '" + n + "'");
  }
  return Chart(std::make_shared<const std::vector<std::string>>(std::move(names)));
}

Chart Chart::point() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return Chart(empty);
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  const auto& n = *names_;
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) return std::nullopt;
  return static_cast<std::size_t>(it - n.begin());
}

std::size_t Chart::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) fail(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return *idx;
}

Chart Chart::without(std::span<const std::size_t> removed) const {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) kept.push_back(name(i));
  }
  if (kept.empty()) return point();
  return Chart(std::make_shared<const std::vector<std::string>>(std::move(kept)));
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) fail(ErrorCode::ChartMismatch, "operands live on different charts");
}

}  // namespace dk
