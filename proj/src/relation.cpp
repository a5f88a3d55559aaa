#include "gencat/relation.hpp"

#include <algorithm>
#include <string>

namespace gencat {

std::uint64_t bounded_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) {
      throw EnumerationCapExceeded(std::to_string(base) + "^" + std::to_string(exponent) +
                                   " exceeds the enumeration cap of " + std::to_string(cap));
    }
    result *= base;
  }
  if (result > cap) {
    throw EnumerationCapExceeded("enumeration of " + std::to_string(result) +
                                 " items exceeds the cap of " + std::to_string(cap));
  }
  return result;
}

namespace {

// Advances digits to the lexicographic successor; false after the last one.
bool next_function(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) {
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

// Calls visit(digits) for every function size -> base, in lexicographic order.
template <class Visit>
void for_each_function(std::size_t size, std::size_t base, std::uint64_t cap, Visit visit) {
  bounded_power(base, size, cap);
  if (base == 0 && size > 0) {
    return;
  }
  std::vector<std::size_t> digits(size, 0);
  do {
    visit(digits);
  } while (next_function(digits, base));
}

}  // namespace

// ---------------------------------------------------------------------------
// PFun

PFun::PFun(std::size_t base, std::vector<std::size_t> digits)
    : base_(base), digits_(std::move(digits)) {
  for (std::size_t d : digits_) {
    if (d >= base_) {
      throw ArrowError("digit " + std::to_string(d) + " out of range for base " +
                       std::to_string(base_));
    }
  }
}

std::uint64_t PFun::lex_index() const {
  std::uint64_t index = 0;
  for (std::size_t d : digits_) {
    index = index * base_ + d;
  }
  return index;
}

PFun PFun::from_index(std::size_t base, std::size_t arity, std::uint64_t index) {
  std::vector<std::size_t> digits(arity);
  for (std::size_t i = arity; i-- > 0;) {
    digits[i] = static_cast<std::size_t>(index % base);
    index /= base;
  }
  if (index != 0) {
    throw ArrowError("index out of range for " + std::to_string(base) + "^" +
                     std::to_string(arity));
  }
  return PFun(base, std::move(digits));
}

PFun join(const PFun& f1, const PFun& f2) {
  if (f1.base() != f2.base()) {
    throw ArrowError("cannot join functions into bases " + std::to_string(f1.base()) + " and " +
                     std::to_string(f2.base()));
  }
  std::vector<std::size_t> digits = f1.digits();
  digits.insert(digits.end(), f2.digits().begin(), f2.digits().end());
  return PFun(f1.base(), std::move(digits));
}

TwoPointOrder::TwoPointOrder(std::size_t low, std::size_t high) : p0(low), p1(high) {
  if (!(low < high)) {
    throw ArrowError("two-point order needs p0 < p1");
  }
}

// ---------------------------------------------------------------------------
// EndoRelation

EndoRelation::EndoRelation(std::size_t size,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : EndoRelation(size) {
  for (auto [x, y] : pairs) {
    insert(x, y);
  }
}

EndoRelation EndoRelation::from_partition(const Partition& p) {
  EndoRelation r(p.size());
  for (const Block& b : p.blocks()) {
    for (Position x : b) {
      for (Position y : b) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

void EndoRelation::insert(std::size_t x, std::size_t y) {
  if (x >= size_ || y >= size_) {
    throw ArrowError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                     ") out of range for relation on " + std::to_string(size_));
  }
  bits_[x * size_ + y] = 1;
}

bool EndoRelation::is_reflexive() const {
  for (std::size_t x = 0; x < size_; ++x) {
    if (!contains(x, x)) return false;
  }
  return true;
}

bool EndoRelation::is_symmetric() const {
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (contains(x, y) && !contains(y, x)) return false;
    }
  }
  return true;
}

bool EndoRelation::is_transitive() const {
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (!contains(x, y)) continue;
      for (std::size_t z = 0; z < size_; ++z) {
        if (contains(y, z) && !contains(x, z)) return false;
      }
    }
  }
  return true;
}

EndoRelation EndoRelation::reflexive_symmetric_closure() const {
  EndoRelation out = *this;
  for (std::size_t x = 0; x < size_; ++x) {
    out.insert(x, x);
    for (std::size_t y = 0; y < size_; ++y) {
      if (contains(x, y)) out.insert(y, x);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Function sets and the characterizations

namespace {

template <class Keep>
std::vector<PFun> functions_where(std::size_t size, std::size_t p, std::uint64_t cap, Keep keep) {
  std::vector<PFun> out;
  for_each_function(size, p, cap, [&](const std::vector<std::size_t>& digits) {
    if (keep(digits)) {
      out.emplace_back(p, digits);
    }
  });
  return out;
}

bool respects_equality(const EndoRelation& r, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (r.contains(x, y) && f[x] != f[y]) return false;
    }
  }
  return true;
}

bool respects_order(const EndoRelation& r, const std::vector<std::size_t>& f,
                    const TwoPointOrder& order) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (r.contains(x, y) && !order.related(f[x], f[y])) return false;
    }
  }
  return true;
}

void require_base(std::size_t p, std::size_t minimum) {
  if (p < minimum) {
    throw ArrowError("base " + std::to_string(p) + " is below the minimum of " +
                     std::to_string(minimum));
  }
}

}  // namespace

std::vector<PFun> fequal_set(const EndoRelation& r, std::size_t p, std::uint64_t cap) {
  require_base(p, 1);
  return functions_where(r.size(), p, cap,
                         [&](const auto& f) { return respects_equality(r, f); });
}

std::vector<PFun> fequal_set(const Partition& r, std::size_t p, std::uint64_t cap) {
  require_base(p, 1);
  // Block-constant functions: one free value per block.
  return functions_where(r.size(), p, cap, [&](const std::vector<std::size_t>& f) {
    for (const Block& b : r.blocks()) {
      for (Position x : b) {
        if (f[x] != f[b.front()]) return false;
      }
    }
    return true;
  });
}

std::vector<PFun> fequal_set(const GenArrow& r, std::size_t p, std::uint64_t cap) {
  return fequal_set(r.partition(), p, cap);
}

std::vector<PFun> forder_set(const EndoRelation& r, std::size_t p, const TwoPointOrder& order,
                             std::uint64_t cap) {
  require_base(p, order.p1 + 1);
  return functions_where(r.size(), p, cap,
                         [&](const auto& f) { return respects_order(r, f, order); });
}

PFun cone_char(const EndoRelation& r, std::size_t x, const TwoPointOrder& order) {
  if (x >= r.size()) {
    throw ArrowError("cone apex " + std::to_string(x) + " out of range for relation on " +
                     std::to_string(r.size()));
  }
  std::vector<std::size_t> digits(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) {
    digits[y] = r.contains(x, y) ? order.p1 : order.p0;
  }
  return PFun(order.p1 + 1, std::move(digits));
}

PFun cone_char(const Partition& r, std::size_t x, const TwoPointOrder& order) {
  return cone_char(EndoRelation::from_partition(r), x, order);
}

PropsReport check_props(const EndoRelation& r, std::size_t p, std::uint64_t cap) {
  require_base(p, 2);
  const TwoPointOrder order;
  const std::vector<PFun> f_equal = fequal_set(r, p, cap);
  const std::vector<PFun> f_order = forder_set(r, p, order, cap);
  PropsReport report;

  bool cones_in_order_set = true;
  for (std::size_t x = 0; x < r.size(); ++x) {
    const PFun cone(p, cone_char(r, x, order).digits());
    if (!std::binary_search(f_order.begin(), f_order.end(), cone)) {
      cones_in_order_set = false;
    }
  }
  report.transitivity_via_cones = r.is_transitive() == cones_in_order_set;

  report.symmetric_orders_agree = !r.is_symmetric() || f_equal == f_order;

  bool separates_exactly = true;
  for (std::size_t x = 0; x < r.size() && separates_exactly; ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      const bool all_agree = std::all_of(f_equal.begin(), f_equal.end(),
                                         [&](const PFun& f) { return f(x) == f(y); });
      if (r.contains(x, y) != all_agree) {
        separates_exactly = false;
        break;
      }
    }
  }
  report.equivalence_via_functions = r.is_equivalence() == separates_exactly;
  return report;
}

// ---------------------------------------------------------------------------
// Rel

RelArrow::RelArrow(std::size_t src_size, std::size_t tgt_size,
                   std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : src_size_(src_size), tgt_size_(tgt_size), pairs_(std::move(pairs)) {
  for (auto [r, c] : pairs_) {
    if (r >= src_size_ || c >= tgt_size_) {
      throw ArrowError("pair (" + std::to_string(r) + "," + std::to_string(c) +
                       ") out of range for relation " + std::to_string(src_size_) + " -> " +
                       std::to_string(tgt_size_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool RelArrow::contains(std::size_t r, std::size_t c) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{r, c});
}

IntMatrix RelArrow::to_matrix() const {
  IntMatrix m(src_size_, tgt_size_);
  for (auto [r, c] : pairs_) {
    m(r, c) = 1;
  }
  return m;
}

RelArrow rel_identity(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(i, i);
  }
  return RelArrow(n, n, std::move(pairs));
}

RelArrow rel_compose(const RelArrow& s2, const RelArrow& s1) {
  if (s1.tgt_size() != s2.src_size()) {
    throw ArrowError("cannot compose relations: " + std::to_string(s1.tgt_size()) +
                     " != " + std::to_string(s2.src_size()));
  }
  // Successor lists of s2, indexed by its source element.
  std::vector<std::vector<std::size_t>> next(s2.src_size());
  for (auto [z, y] : s2.pairs()) {
    next[z].push_back(y);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [x, z] : s1.pairs()) {
    for (std::size_t y : next[z]) {
      out.emplace_back(x, y);
    }
  }
  return RelArrow(s1.src_size(), s2.tgt_size(), std::move(out));
}

RelArrow fp_arrow(std::size_t p, const GenArrow& r, std::uint64_t cap) {
  require_base(p, 2);
  const std::size_t n = r.source();
  const std::size_t m = r.target();
  const std::uint64_t cols = bounded_power(p, m, cap);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for_each_function(n + m, p, cap, [&](const std::vector<std::size_t>& joined) {
    for (const Block& b : r.blocks()) {
      for (Position x : b) {
        if (joined[x] != joined[b.front()]) return;
      }
    }
    // Lexicographic order on n+m digits is row-major order on (f1, f2).
    const std::uint64_t index = PFun(p, joined).lex_index();
    pairs.emplace_back(index / cols, index % cols);
  });
  return RelArrow(bounded_power(p, n, cap), cols, std::move(pairs));
}

}  // namespace gencat
