#include "gencat/gen_arrow.hpp"

#include <string>
#include <utility>

namespace gencat {

GenArrow::GenArrow(std::size_t source, std::size_t target, Partition partition)
    : source_(source), target_(target), partition_(std::move(partition)) {
  if (partition_.size() != source_ + target_) {
    throw ArrowError("partition covers " + std::to_string(partition_.size()) +
                     " positions, arrow needs " + std::to_string(source_ + target_));
  }
}

GenArrow make_arrow(std::size_t n, std::size_t m, std::vector<Block> blocks) {
  return GenArrow(n, m, Partition::from_blocks(n + m, std::move(blocks)));
}

GenArrow identity(std::size_t n) {
  std::vector<std::size_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i;
    labels[i + n] = i;
  }
  return GenArrow(n, n, Partition::from_labels(labels));
}

WorkRelation glue(const GenArrow& r2, const GenArrow& r1) {
  if (r1.target() != r2.source()) {
    throw ArrowError("cannot compose: first arrow has target " + std::to_string(r1.target()) +
                     " but second arrow has source " + std::to_string(r2.source()));
  }
  const std::size_t n = r1.source();
  const std::size_t m = r1.target();
  const std::size_t k = r2.target();

  DisjointSets sets(n + m + k);
  for (const Block& b : r1.blocks()) {
    sets.unite_block(b);
  }
  for (const Block& b : r2.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) {
      sets.unite(b[0] + n, b[i] + n);
    }
  }
  return WorkRelation{n, m, k, sets.to_partition()};
}

GenArrow restrict_to_outer(const WorkRelation& work) {
  const std::size_t n = work.source;
  const std::size_t m = work.middle;
  std::vector<std::size_t> labels(n + work.end);
  for (Position x = 0; x < labels.size(); ++x) {
    const Position glued = x < n ? x : x + m;
    labels[x] = work.closure.block_of(glued);
  }
  return GenArrow(n, work.end, Partition::from_labels(labels));
}

CompositionResult compose(const GenArrow& r2, const GenArrow& r1) {
  WorkRelation work = glue(r2, r1);
  std::size_t circles = 0;
  for (const Block& b : work.closure.blocks()) {
    // Blocks are sorted, so a block misses both outer segments exactly when
    // its least and greatest members are both in the middle.
    if (!work.is_outer(b.front()) && !work.is_outer(b.back())) {
      ++circles;
    }
  }
  return CompositionResult{restrict_to_outer(work), circles};
}

GenArrow transpose(const GenArrow& r) {
  const std::size_t n = r.source();
  const std::size_t m = r.target();
  std::vector<std::size_t> labels(n + m);
  for (Position x = 0; x < n + m; ++x) {
    const Position image = x < n ? x + m : x - n;
    labels[image] = r.partition().block_of(x);
  }
  return GenArrow(m, n, Partition::from_labels(labels));
}

std::vector<GenArrow> all_arrows(std::size_t n, std::size_t m) {
  std::vector<GenArrow> out;
  for (Partition& p : all_partitions(n + m)) {
    out.emplace_back(n, m, std::move(p));
  }
  return out;
}

}  // namespace gencat
