#include "gencat/brauer.hpp"

#include <cctype>
#include <string>
#include <utility>

namespace gencat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  using boost::multiprecision::cpp_int;
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ArrowError("malformed rational '" + std::string(text) + "'");
  }
  const cpp_int d{std::string(den)};
  if (d == 0) {
    throw ArrowError("zero denominator in '" + std::string(text) + "'");
  }
  const Rational q(cpp_int{std::string(num)}, d);
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

BrauerDiagram::BrauerDiagram(GenArrow arrow) : arrow_(std::move(arrow)) {
  if (arrow_.source() != arrow_.target()) {
    throw ArrowError("a diagram must have equal source and target, got " +
                     std::to_string(arrow_.source()) + " -> " + std::to_string(arrow_.target()));
  }
  if (!arrow_.partition().is_perfect_matching()) {
    throw ArrowError("every block of a diagram must have exactly two elements");
  }
}

BrauerDiagram BrauerDiagram::identity(std::size_t n) { return BrauerDiagram(gencat::identity(n)); }

DiagramProduct diagram_mul(const BrauerDiagram& r1, const BrauerDiagram& r2) {
  if (r1.n() != r2.n()) {
    throw ArrowError("cannot multiply diagrams on " + std::to_string(r1.n()) + " and " +
                     std::to_string(r2.n()) + " strands");
  }
  CompositionResult result = compose(r2.arrow(), r1.arrow());
  // The constructor rejects anything that is not again a matching.
  return DiagramProduct{BrauerDiagram(std::move(result.arrow)), result.circles};
}

std::vector<BrauerDiagram> all_diagrams(std::size_t n) {
  std::vector<BrauerDiagram> out;
  for (Partition& p : all_perfect_matchings(2 * n)) {
    out.emplace_back(GenArrow(n, n, std::move(p)));
  }
  return out;
}

BrauerElement BrauerElement::basis(const BrauerDiagram& d, const Rational& coeff) {
  BrauerElement e(d.n());
  e.add(d, coeff);
  return e;
}

void BrauerElement::add(const BrauerDiagram& d, const Rational& coeff) {
  if (d.n() != n_) {
    throw ArrowError("diagram on " + std::to_string(d.n()) + " strands added to element on " +
                     std::to_string(n_));
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

BrauerElement algebra_mul(const BrauerElement& a, const BrauerElement& b,
                          const BrauerAlgebraConfig& cfg) {
  if (a.n() != cfg.n || b.n() != cfg.n) {
    throw ArrowError("algebra elements on " + std::to_string(a.n()) + " and " +
                     std::to_string(b.n()) + " strands in B(" + std::to_string(cfg.n) + ", c)");
  }
  BrauerElement out(cfg.n);
  for (const auto& [d1, q1] : a.terms()) {
    for (const auto& [d2, q2] : b.terms()) {
      DiagramProduct prod = diagram_mul(d1, d2);
      Rational factor = q1 * q2;
      for (std::size_t i = 0; i < prod.circles; ++i) {
        factor *= cfg.c;
      }
      out.add(prod.diagram, factor);
    }
  }
  return out;
}

IntMatrix beta_matrix(std::size_t p, const BrauerDiagram& r, std::uint64_t cap) {
  if (p < 2) {
    throw ArrowError("beta needs p >= 2");
  }
  const std::size_t n = r.n();
  bounded_power(p, 2 * n, cap);
  const auto side = static_cast<std::size_t>(bounded_power(p, n, cap));
  IntMatrix m(side, side);
  std::vector<std::size_t> a(2 * n);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      // Base-p digits, most significant first.
      for (std::size_t i = n, rest = row; i-- > 0; rest /= p) a[i] = rest % p;
      for (std::size_t i = n, rest = col; i-- > 0; rest /= p) a[n + i] = rest % p;
      std::int64_t entry = 1;
      for (const Block& b : r.arrow().blocks()) {
        entry *= a[b[0]] == a[b[1]] ? 1 : 0;
      }
      m(row, col) = entry;
    }
  }
  return m;
}

RelArrow beta_as_relation(const IntMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t v = m(i, j);
      if (v != 0 && v != 1) {
        throw ArrowError("entry " + std::to_string(v) + " at (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not 0 or 1");
      }
      if (v == 1) pairs.emplace_back(i, j);
    }
  }
  return RelArrow(m.rows(), m.cols(), std::move(pairs));
}

}  // namespace gencat
