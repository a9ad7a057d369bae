#include "stripless/partition.hpp"

#include <stdexcept>

namespace stripless {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition parts must be nonnegative");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const {
  if (i < 0) throw std::out_of_range("negative part index");
  return i < num_parts() ? parts_[static_cast<size_t>(i)] : 0;
}

int Partition::size() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.num_parts() > num_parts()) return false;
  for (int i = 0; i < inner.num_parts(); ++i) {
    if (inner.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++conj[static_cast<size_t>(c)];
  }
  return Partition(std::move(conj));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = 0; i < p.num_parts(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

GrassmannianContext::GrassmannianContext(int rank_, int ambient_)
    : rank(rank_), ambient(ambient_) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (ambient <= rank) {
    throw std::invalid_argument("ambient dimension must exceed the rank");
  }
}

bool GrassmannianContext::fits(const Partition& p) const {
  return p.num_parts() <= rank && p.part(0) <= width();
}

Partition complement_in_rectangle(const Partition& p, int rows, int width) {
  if (rows < 0 || width < 0) {
    throw std::invalid_argument("rectangle dimensions must be nonnegative");
  }
  if (p.num_parts() > rows || p.part(0) > width) {
    throw std::domain_error("partition does not fit the rectangle");
  }
  std::vector<int> out;
  out.reserve(static_cast<size_t>(rows));
  for (int i = rows - 1; i >= 0; --i) out.push_back(width - p.part(i));
  return Partition(std::move(out));
}

Partition complement(const Partition& lambda, const GrassmannianContext& ctx) {
  return complement_in_rectangle(lambda, ctx.rank, ctx.width());
}

Partition bf_complement(const Partition& lambda, const GrassmannianContext& ctx) {
  return complement_in_rectangle(lambda, ctx.rank - 1, ctx.width() - 1);
}

void for_each_partition_in_rectangle(
    int rows, int width, const std::function<void(const Partition&)>& fn) {
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int maxv) -> void {
    fn(Partition(acc));
    if (row == rows) return;
    for (int v = 1; v <= maxv; ++v) {
      acc.push_back(v);
      self(self, row + 1, v);
      acc.pop_back();
    }
  };
  rec(rec, 0, width < 0 ? 0 : width);
}

void for_each_partition_in_rectangle_of_size(
    int rows, int width, int size,
    const std::function<void(const Partition&)>& fn) {
  if (size < 0) return;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int maxv, int remaining) -> void {
    if (remaining == 0) {
      fn(Partition(acc));
      return;
    }
    if (row == rows || maxv == 0) return;
    int hi = maxv < remaining ? maxv : remaining;
    for (int v = hi; v >= 1; --v) {
      if (static_cast<long>(v) * (rows - row) < remaining) break;
      acc.push_back(v);
      self(self, row + 1, v, remaining - v);
      acc.pop_back();
    }
  };
  rec(rec, 0, width < 0 ? 0 : width, size);
}

}  // namespace stripless
