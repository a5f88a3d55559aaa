#pragma once

#include "json.hpp"

#include "gencat/brauer.hpp"
#include "gencat/gen_arrow.hpp"
#include "gencat/matrix.hpp"
#include "gencat/relation.hpp"

// Interchange encodings. Readers throw ArrowError on schema violations.
//
//   GenArrow          {"source": n, "target": m, "blocks": [[...], ...]}
//   CompositionResult {"arrow": GenArrow, "circles": l}
//   RelArrow          {"src": P, "tgt": Q, "pairs": [[r, c], ...]}
//   BrauerElement     {"n": n, "c": "num/den", "terms": [{"blocks": [...], "coeff": "num/den"}]}
//   IntMatrix         {"rows": r, "cols": c, "entries": [[...], ...]}
namespace gencat {

using Json = nlohmann::ordered_json;

Json to_json(const GenArrow& r);
Json to_json(const CompositionResult& r);
Json to_json(const RelArrow& r);
Json to_json(const IntMatrix& m);
Json to_json(const BrauerElement& e, const Rational& c);

GenArrow arrow_from_json(const Json& j);
CompositionResult composition_from_json(const Json& j);
RelArrow relation_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

struct ElementWithParameter {
  BrauerElement element;
  Rational c;
};

/// Reads a BrauerElement document, or a bare GenArrow document as the
/// element 1 * diagram with c = 1.
ElementWithParameter element_from_json(const Json& j);

}  // namespace gencat
