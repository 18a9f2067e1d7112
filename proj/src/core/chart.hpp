#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

/// Ordered list of coordinate names. Cheap to copy; the name list is shared.
class Chart {
 public:
  /// Validates uniqueness and non-emptiness.
  static Chart make(std::vector<std::string> names);
  /// The zero-dimensional chart (a point); only produced by restriction.
  static Chart point();

  std::size_t dimension() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  /// The chart with the listed coordinates removed (order preserved).
  Chart without(std::span<const std::size_t> removed) const;

  bool operator==(const Chart& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

 private:
  explicit Chart(std::shared_ptr<const std::vector<std::string>> names)
      : names_(std::move(names)) {}

  std::shared_ptr<const std::vector<std::string>> names_;
};

void require_same_chart(const Chart& a, const Chart& b);

}  // namespace dk
