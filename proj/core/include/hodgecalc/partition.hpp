#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hodgecalc {

/// Rectangular bound on a Young diagram: at most `rows` parts, each <= `cols`.
struct Box {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition stored as weakly decreasing positive parts.
/// Trailing zeros are stripped on construction.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts, std::optional<Box> box = std::nullopt);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  const std::optional<Box>& box() const noexcept { return box_; }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;  // |lambda|
  bool empty() const noexcept { return parts_.empty(); }
  /// lambda_i with 0-based i; zero past the last part.
  int part(int i) const noexcept;

  bool fits(const Box& b) const noexcept;
  Partition conjugate() const;
  /// Complement inside the box, rotated by 180 degrees.
  Partition complement(const Box& b) const;

  std::string to_string() const;

  // Ordering ignores the box annotation.
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  std::optional<Box> box_;
};

/// All partitions inside a rows x cols box, ordered by size and then
/// reverse-lexicographically within each size. There are C(rows+cols, rows).
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace hodgecalc
