#include "gencat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gencat {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

}  // namespace

Partition Partition::discrete(std::size_t size) {
  std::vector<std::size_t> labels(size);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::from_blocks(std::size_t size, std::vector<Block> blocks) {
  std::vector<std::size_t> labels(size, kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw ArrowError("empty block in partition");
    }
    for (Position x : blocks[b]) {
      if (x >= size) {
        throw ArrowError("position " + std::to_string(x) + " out of range for domain of size " +
                         std::to_string(size));
      }
      if (labels[x] != kUnassigned) {
        throw ArrowError("position " + std::to_string(x) + " appears more than once");
      }
      labels[x] = b;
    }
  }
  std::size_t next = blocks.size();
  for (auto& l : labels) {
    if (l == kUnassigned) {
      l = next++;
    }
  }
  return from_labels(labels);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.labels_.assign(labels.size(), kUnassigned);
  // Scanning positions in ascending order numbers blocks by least element
  // and fills each block in sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // raw label -> block index
  for (Position x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == labels[x]; });
    std::size_t block;
    if (it == seen.end()) {
      block = p.blocks_.size();
      seen.emplace_back(labels[x], block);
      p.blocks_.emplace_back();
    } else {
      block = it->second;
    }
    p.blocks_[block].push_back(x);
    p.labels_[x] = block;
  }
  return p;
}

bool Partition::is_perfect_matching() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return b.size() == 2; });
}

DisjointSets::DisjointSets(std::size_t size) : parent_(size), rank_size_(size, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return;
  }
  if (rank_size_[x] < rank_size_[y]) {
    std::swap(x, y);
  }
  parent_[y] = x;
  rank_size_[x] += rank_size_[y];
}

void DisjointSets::unite_block(std::span<const Position> block) {
  for (std::size_t i = 1; i < block.size(); ++i) {
    unite(block[0], block[i]);
  }
}

Partition DisjointSets::to_partition() {
  std::vector<std::size_t> roots(parent_.size());
  for (std::size_t x = 0; x < roots.size(); ++x) {
    roots[x] = find(x);
  }
  return Partition::from_labels(roots);
}

std::vector<Partition> all_partitions(std::size_t size) {
  std::vector<Partition> out;
  if (size == 0) {
    out.push_back(Partition{});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(size, 0);
  std::vector<std::size_t> prefix_max(size, 0);
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = size - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < size; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

namespace {

void extend_matchings(std::vector<std::size_t>& labels, std::size_t next_label,
                      std::vector<Partition>& out) {
  auto first = std::find(labels.begin(), labels.end(), kUnassigned);
  if (first == labels.end()) {
    out.push_back(Partition::from_labels(labels));
    return;
  }
  *first = next_label;
  for (auto it = first + 1; it != labels.end(); ++it) {
    if (*it == kUnassigned) {
      *it = next_label;
      extend_matchings(labels, next_label + 1, out);
      *it = kUnassigned;
    }
  }
  *first = kUnassigned;
}

}  // namespace

std::vector<Partition> all_perfect_matchings(std::size_t size) {
  std::vector<Partition> out;
  if (size % 2 != 0) {
    return out;
  }
  std::vector<std::size_t> labels(size, kUnassigned);
  extend_matchings(labels, 0, out);
  return out;
}

}  // namespace gencat
