#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gencat/gen_arrow.hpp"
#include "gencat/matrix.hpp"

namespace gencat {

/// Default ceiling on the number of functions or function pairs any
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Raised when an enumeration would exceed its cap.
class EnumerationCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Checked power; throws EnumerationCapExceeded when base^exponent > cap.
std::uint64_t bounded_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap);

/// A function from the ordinal `arity` into the ordinal `base`, written as
/// its digit sequence. Sequences are identified with their position in
/// lexicographic order.
class PFun {
 public:
  PFun(std::size_t base, std::vector<std::size_t> digits);

  std::size_t base() const { return base_; }
  std::size_t arity() const { return digits_.size(); }
  const std::vector<std::size_t>& digits() const { return digits_; }
  std::size_t operator()(std::size_t x) const { return digits_.at(x); }

  std::uint64_t lex_index() const;
  static PFun from_index(std::size_t base, std::size_t arity, std::uint64_t index);

  friend bool operator==(const PFun&, const PFun&) = default;
  friend auto operator<=>(const PFun&, const PFun&) = default;

 private:
  std::size_t base_;
  std::vector<std::size_t> digits_;
};

/// Concatenation [f1, f2] on n + m; throws ArrowError on differing bases.
PFun join(const PFun& f1, const PFun& f2);

/// The order on the value set: p0 below p1. Values are compared as ordinals,
/// which restricts to the two-point order on {p0, p1}.
struct TwoPointOrder {
  std::size_t p0 = 0;
  std::size_t p1 = 1;

  TwoPointOrder() = default;
  TwoPointOrder(std::size_t low, std::size_t high);

  bool related(std::size_t a, std::size_t b) const { return a <= b; }
};

/// An arbitrary binary relation on {0, ..., size-1}.
class EndoRelation {
 public:
  explicit EndoRelation(std::size_t size) : size_(size), bits_(size * size, 0) {}
  EndoRelation(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static EndoRelation from_partition(const Partition& p);

  std::size_t size() const { return size_; }
  bool contains(std::size_t x, std::size_t y) const { return bits_[x * size_ + y] != 0; }
  void insert(std::size_t x, std::size_t y);

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  /// Adds the diagonal and every reversed pair.
  EndoRelation reflexive_symmetric_closure() const;

  friend bool operator==(const EndoRelation&, const EndoRelation&) = default;

 private:
  std::size_t size_;
  std::vector<char> bits_;
};

/// Functions X -> p that agree on related elements. Sorted lexicographically.
std::vector<PFun> fequal_set(const EndoRelation& r, std::size_t p,
                             std::uint64_t cap = kDefaultEnumerationCap);
std::vector<PFun> fequal_set(const Partition& r, std::size_t p,
                             std::uint64_t cap = kDefaultEnumerationCap);
std::vector<PFun> fequal_set(const GenArrow& r, std::size_t p,
                             std::uint64_t cap = kDefaultEnumerationCap);

/// Functions X -> p mapping related pairs into the order S. Sorted.
std::vector<PFun> forder_set(const EndoRelation& r, std::size_t p, const TwoPointOrder& order = {},
                             std::uint64_t cap = kDefaultEnumerationCap);

/// Characteristic function of the cone over x: y maps to p1 when x r y,
/// to p0 otherwise. Throws ArrowError when x is out of range.
PFun cone_char(const EndoRelation& r, std::size_t x, const TwoPointOrder& order = {});
PFun cone_char(const Partition& r, std::size_t x, const TwoPointOrder& order = {});

struct PropsReport {
  /// r transitive  <=>  every cone characteristic lies in F^S(r).
  bool transitivity_via_cones = false;
  /// r symmetric  =>  F^=(r) = F^S(r).
  bool symmetric_orders_agree = false;
  /// r equivalence  <=>  (x r y  <=>  all of F^=(r) agree at x and y).
  bool equivalence_via_functions = false;

  bool all() const {
    return transitivity_via_cones && symmetric_orders_agree && equivalence_via_functions;
  }
};

/// Evaluates both sides of each characterization literally from the
/// definitions, over all functions X -> p.
PropsReport check_props(const EndoRelation& r, std::size_t p,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// A binary relation between the ordinals src_size and tgt_size.
class RelArrow {
 public:
  RelArrow() = default;
  /// Throws ArrowError on out-of-range pairs; duplicates are merged.
  RelArrow(std::size_t src_size, std::size_t tgt_size,
           std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t src_size() const { return src_size_; }
  std::size_t tgt_size() const { return tgt_size_; }
  /// Sorted lexicographically, without duplicates.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  bool contains(std::size_t r, std::size_t c) const;

  /// 0-1 matrix, rows indexed by source elements.
  IntMatrix to_matrix() const;

  friend bool operator==(const RelArrow&, const RelArrow&) = default;

 private:
  std::size_t src_size_ = 0;
  std::size_t tgt_size_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

RelArrow rel_identity(std::size_t n);

/// s2 o s1; throws ArrowError when s1.tgt_size() != s2.src_size().
RelArrow rel_compose(const RelArrow& s2, const RelArrow& s1);

/// The relation of function pairs (f1 : n -> p, f2 : m -> p), by lexicographic
/// index, whose join is constant on every block of r. Requires p >= 2.
RelArrow fp_arrow(std::size_t p, const GenArrow& r, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gencat
