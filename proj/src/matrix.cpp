#include "gencat/matrix.hpp"

#include "gencat/partition.hpp"

namespace gencat {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ArrowError("matrix dimensions do not match for product");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMatrix boolean_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ArrowError("matrix dimensions do not match for product");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) = 1;
      }
    }
  }
  return out;
}

IntMatrix scale(const IntMatrix& a, std::int64_t factor) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) * factor;
    }
  }
  return out;
}

}  // namespace gencat
