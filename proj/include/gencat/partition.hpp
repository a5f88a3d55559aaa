#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gencat {

using Position = std::size_t;
using Block = std::vector<Position>;

/// Raised when a partition, arrow or relation is built from malformed data.
class ArrowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A partition of {0, ..., size-1}, always held in canonical form: every
/// block is sorted ascending and blocks are ordered by their least element.
/// Two partitions compare equal exactly when they are the same set partition.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(std::size_t size);

  /// Builds a partition from a list of disjoint blocks. Positions that are
  /// not listed become singleton blocks. Throws ArrowError on an
  /// out-of-range or repeated position, or an empty block.
  static Partition from_blocks(std::size_t size, std::vector<Block> blocks);

  /// Positions carrying equal labels share a block. Labels are arbitrary.
  static Partition from_labels(std::span<const std::size_t> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Index of the block containing x (blocks are numbered in canonical order).
  std::size_t block_of(Position x) const { return labels_.at(x); }
  const std::vector<std::size_t>& labels() const { return labels_; }

  bool related(Position x, Position y) const { return block_of(x) == block_of(y); }

  /// True when every block has exactly two elements.
  bool is_perfect_matching() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> labels_;
};

/// Union-find over {0, ..., size-1} with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size);

  std::size_t find(std::size_t x);
  void unite(std::size_t x, std::size_t y);
  void unite_block(std::span<const Position> block);

  Partition to_partition();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_size_;
};

/// Every set partition of {0, ..., size-1}, in restricted-growth-string order.
/// There are Bell(size) of them.
std::vector<Partition> all_partitions(std::size_t size);

/// Every perfect matching of {0, ..., size-1}; empty when size is odd.
/// Built by pairing the least unmatched point with each remaining point.
std::vector<Partition> all_perfect_matchings(std::size_t size);

}  // namespace gencat
