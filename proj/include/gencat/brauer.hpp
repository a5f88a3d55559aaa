#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencat/gen_arrow.hpp"
#include "gencat/matrix.hpp"
#include "gencat/relation.hpp"

namespace gencat {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "n" or "n/d" with an optional leading minus; d must be nonzero.
Rational parse_rational(std::string_view text);
/// Always "num/den" in lowest terms, e.g. "15/2", "2/1", "-1/3".
std::string format_rational(const Rational& q);

/// An arrow n -> n whose blocks all have exactly two elements.
class BrauerDiagram {
 public:
  /// Throws ArrowError unless the arrow is square with two-element blocks.
  explicit BrauerDiagram(GenArrow arrow);

  static BrauerDiagram identity(std::size_t n);

  std::size_t n() const { return arrow_.source(); }
  const GenArrow& arrow() const { return arrow_; }

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  GenArrow arrow_;
};

struct DiagramProduct {
  BrauerDiagram diagram;
  std::size_t circles = 0;

  friend bool operator==(const DiagramProduct&, const DiagramProduct&) = default;
};

/// The product of r1 then r2: the diagram r2 * r1 and the number of closed
/// loops it discards. Throws ArrowError on differing sizes.
DiagramProduct diagram_mul(const BrauerDiagram& r1, const BrauerDiagram& r2);

/// All (2n-1)!! diagrams on n strands.
std::vector<BrauerDiagram> all_diagrams(std::size_t n);

struct BrauerAlgebraConfig {
  std::size_t n = 0;
  Rational c = 1;  // loop parameter
};

/// Finite rational combination of diagrams on n strands; zero terms are
/// never stored.
class BrauerElement {
 public:
  explicit BrauerElement(std::size_t n) : n_(n) {}

  static BrauerElement basis(const BrauerDiagram& d, const Rational& coeff = 1);
  static BrauerElement unit(std::size_t n) { return basis(BrauerDiagram::identity(n)); }

  std::size_t n() const { return n_; }
  const std::map<BrauerDiagram, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * d; throws ArrowError when d has the wrong size.
  void add(const BrauerDiagram& d, const Rational& coeff);

  friend bool operator==(const BrauerElement&, const BrauerElement&) = default;

 private:
  std::size_t n_;
  std::map<BrauerDiagram, Rational> terms_;
};

/// Bilinear extension of r1 . r2 = c^circles (r2 * r1), with a's diagrams in
/// the r1 slot. Throws ArrowError when a, b and cfg disagree on n.
BrauerElement algebra_mul(const BrauerElement& a, const BrauerElement& b,
                          const BrauerAlgebraConfig& cfg);

/// p^n x p^n matrix; entry (i, j) is the product over blocks {s, t} of
/// delta(a_s, a_t), where a_0..a_{n-1} spell row i and a_n..a_{2n-1} column j
/// in base p. Requires p >= 2 and p^(2n) within the cap.
IntMatrix beta_matrix(std::size_t p, const BrauerDiagram& r,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// The relation whose characteristic matrix is m. Throws ArrowError on any
/// entry other than 0 or 1.
RelArrow beta_as_relation(const IntMatrix& m);

}  // namespace gencat
