#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "gencat/partition.hpp"

namespace gencat {

/// An arrow n -> m of the category of equivalence relations between finite
/// ordinals. Positions 0..n-1 are source occurrences, n..n+m-1 target
/// occurrences; the relation is stored as its canonical partition.
class GenArrow {
 public:
  GenArrow() = default;
  GenArrow(std::size_t source, std::size_t target, Partition partition);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  std::size_t domain_size() const { return source_ + target_; }
  const Partition& partition() const { return partition_; }
  const std::vector<Block>& blocks() const { return partition_.blocks(); }

  bool is_source_position(Position x) const { return x < source_; }

  friend bool operator==(const GenArrow&, const GenArrow&) = default;
  friend auto operator<=>(const GenArrow&, const GenArrow&) = default;

 private:
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  Partition partition_;
};

/// The canonical arrow n -> m with the given blocks; unlisted positions
/// become singletons. Throws ArrowError on out-of-range or duplicate positions.
GenArrow make_arrow(std::size_t n, std::size_t m, std::vector<Block> blocks);

/// Identity n -> n: position i is related to i + n.
GenArrow identity(std::size_t n);

/// Transitive closure of two arrows glued along their shared middle ordinal.
/// The domain has three segments: source [0, n), middle [n, n+m) and
/// end [n+m, n+m+k).
struct WorkRelation {
  std::size_t source = 0;
  std::size_t middle = 0;
  std::size_t end = 0;
  Partition closure;

  bool is_outer(Position x) const { return x < source || x >= source + middle; }
};

struct CompositionResult {
  GenArrow arrow;
  /// Closure blocks lying wholly inside the middle segment.
  std::size_t circles = 0;

  friend bool operator==(const CompositionResult&, const CompositionResult&) = default;
};

/// Closure of r1 together with r2 shifted past r1's source. Requires
/// r1.target() == r2.source(); throws ArrowError otherwise.
WorkRelation glue(const GenArrow& r2, const GenArrow& r1);

/// Restriction of the closure to the outer segments, with end positions
/// renumbered down by the middle width.
GenArrow restrict_to_outer(const WorkRelation& work);

/// r2 * r1 : n -> k for r1 : n -> m and r2 : m -> k, with the circle count.
CompositionResult compose(const GenArrow& r2, const GenArrow& r1);

/// The arrow m -> n obtained by swapping the roles of source and target.
GenArrow transpose(const GenArrow& r);

/// Every arrow n -> m (Bell(n+m) of them), in canonical order of partitions.
std::vector<GenArrow> all_arrows(std::size_t n, std::size_t m);

}  // namespace gencat
