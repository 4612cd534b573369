#include "hodgecalc/partition.hpp"

#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hodgecalc {

Partition::Partition(std::vector<int> parts, std::optional<Box> box)
    : parts_(std::move(parts)), box_(box) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  if (box_ && !fits(*box_)) {
    throw InvalidArgument("partition " + to_string() + " does not fit its box");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::fits(const Box& b) const noexcept {
  return length() <= b.rows && (parts_.empty() || parts_.front() <= b.cols);
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.resize(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

Partition Partition::complement(const Box& b) const {
  if (!fits(b)) throw InvalidArgument("complement: partition does not fit the box");
  std::vector<int> out(static_cast<std::size_t>(b.rows));
  for (int i = 0; i < b.rows; ++i) out[static_cast<std::size_t>(i)] = b.cols - part(b.rows - 1 - i);
  return Partition(std::move(out), b);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("partitions_in_box: negative dimension");
  const Box box{rows, cols};
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first over weakly decreasing sequences bounded by the box.
  std::function<void(int)> rec = [&](int max_part) {
    out.emplace_back(cur, box);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = max_part; p >= 1; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

}  // namespace hodgecalc
