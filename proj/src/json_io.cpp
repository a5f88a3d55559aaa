#include "gencat/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gencat {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ArrowError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t ordinal(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned()) {
    throw ArrowError(std::string("field \"") + name + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Block> blocks_from(const Json& j) {
  if (!j.is_array()) {
    throw ArrowError("\"blocks\" must be an array of arrays");
  }
  std::vector<Block> blocks;
  for (const Json& b : j) {
    if (!b.is_array()) {
      throw ArrowError("\"blocks\" must be an array of arrays");
    }
    Block block;
    for (const Json& x : b) {
      if (!x.is_number_unsigned()) {
        throw ArrowError("block members must be nonnegative integers");
      }
      block.push_back(x.get<Position>());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Json blocks_to(const GenArrow& r) {
  Json blocks = Json::array();
  for (const Block& b : r.blocks()) {
    blocks.push_back(b);
  }
  return blocks;
}

Rational rational_from(const Json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  throw ArrowError("rationals are written as \"num/den\" strings");
}

}  // namespace

Json to_json(const GenArrow& r) {
  Json j;
  j["source"] = r.source();
  j["target"] = r.target();
  j["blocks"] = blocks_to(r);
  return j;
}

Json to_json(const CompositionResult& r) {
  Json j;
  j["arrow"] = to_json(r.arrow);
  j["circles"] = r.circles;
  return j;
}

Json to_json(const RelArrow& r) {
  Json j;
  j["src"] = r.src_size();
  j["tgt"] = r.tgt_size();
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) {
    pairs.push_back({a, b});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const IntMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row.push_back(m(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const BrauerElement& e, const Rational& c) {
  Json j;
  j["n"] = e.n();
  j["c"] = format_rational(c);
  Json terms = Json::array();
  for (const auto& [d, q] : e.terms()) {
    Json t;
    t["blocks"] = blocks_to(d.arrow());
    t["coeff"] = format_rational(q);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

GenArrow arrow_from_json(const Json& j) {
  return make_arrow(ordinal(j, "source"), ordinal(j, "target"), blocks_from(field(j, "blocks")));
}

CompositionResult composition_from_json(const Json& j) {
  return CompositionResult{arrow_from_json(field(j, "arrow")), ordinal(j, "circles")};
}

RelArrow relation_from_json(const Json& j) {
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) {
    throw ArrowError("\"pairs\" must be an array");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      throw ArrowError("each pair must be [row, col] with nonnegative integers");
    }
    out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return RelArrow(ordinal(j, "src"), ordinal(j, "tgt"), std::move(out));
}

IntMatrix matrix_from_json(const Json& j) {
  IntMatrix m(ordinal(j, "rows"), ordinal(j, "cols"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != m.rows()) {
    throw ArrowError("\"entries\" must hold one array per row");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!entries[i].is_array() || entries[i].size() != m.cols()) {
      throw ArrowError("row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!entries[i][k].is_number_integer()) {
        throw ArrowError("matrix entries must be integers");
      }
      m(i, k) = entries[i][k].get<std::int64_t>();
    }
  }
  return m;
}

ElementWithParameter element_from_json(const Json& j) {
  if (j.is_object() && j.contains("source")) {
    return {BrauerElement::basis(BrauerDiagram(arrow_from_json(j))), Rational(1)};
  }
  const std::size_t n = ordinal(j, "n");
  Rational c = j.contains("c") ? rational_from(j.at("c")) : Rational(1);
  BrauerElement e(n);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) {
    throw ArrowError("\"terms\" must be an array");
  }
  for (const Json& t : terms) {
    BrauerDiagram d(make_arrow(n, n, blocks_from(field(t, "blocks"))));
    e.add(d, rational_from(field(t, "coeff")));
  }
  return {std::move(e), std::move(c)};
}

}  // namespace gencat
