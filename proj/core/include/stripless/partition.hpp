#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace stripless {

/// Integer partition in canonical form: weakly decreasing parts with no
/// trailing zeros. The empty sequence is the zero partition. Ordering is
/// lexicographic on the part vector, which fixes the serialization order
/// everywhere downstream.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  /// 0-based part access; rows past the end read as 0.
  int part(int i) const;

  /// Total number of boxes.
  int size() const;

  bool empty() const { return parts_.empty(); }

  /// Diagram containment: inner fits inside this shape row by row.
  bool contains(const Partition& inner) const;

  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "3,2,1"; the zero partition renders as "0".
std::string to_string(const Partition& p);

/// The pair (r, N) fixing Gr(r, N), hence the bounding rectangle of r rows
/// and N - r columns.
struct GrassmannianContext {
  GrassmannianContext(int rank_, int ambient_);

  int rank;
  int ambient;

  int width() const { return ambient - rank; }

  /// True iff p has at most `rank` parts, each at most `width()`.
  bool fits(const Partition& p) const;

  friend bool operator==(const GrassmannianContext&,
                         const GrassmannianContext&) = default;
};

/// Complement inside an explicit rows x width rectangle; involutive.
Partition complement_in_rectangle(const Partition& p, int rows, int width);

/// Complement inside the full rectangle of ctx.
Partition complement(const Partition& lambda, const GrassmannianContext& ctx);

/// Complement inside the inner (r-1) x (n-r-1) rectangle.
Partition bf_complement(const Partition& lambda, const GrassmannianContext& ctx);

/// Visits every partition with at most `rows` parts of size at most `width`,
/// in lexicographic order starting with the zero partition.
void for_each_partition_in_rectangle(
    int rows, int width, const std::function<void(const Partition&)>& fn);

/// Same, restricted to partitions of the given total size.
void for_each_partition_in_rectangle_of_size(
    int rows, int width, int size,
    const std::function<void(const Partition&)>& fn);

}  // namespace stripless
