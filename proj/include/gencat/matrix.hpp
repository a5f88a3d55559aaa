#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gencat {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<std::int64_t>& entries() const { return entries_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Ordinary product a * b; throws ArrowError when a.cols() != b.rows().
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Product over the boolean semiring (1 + 1 = 1); entries are read as
/// nonzero / zero.
IntMatrix boolean_multiply(const IntMatrix& a, const IntMatrix& b);

IntMatrix scale(const IntMatrix& a, std::int64_t factor);

}  // namespace gencat
