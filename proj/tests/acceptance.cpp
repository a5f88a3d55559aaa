// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gencat/brauer.hpp"
#include "gencat/gen_arrow.hpp"
#include "gencat/logic.hpp"
#include "gencat/parse.hpp"
#include "gencat/relation.hpp"
#include "support/generators.hpp"

using namespace gencat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

std::size_t power(std::size_t p, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= p;
  return out;
}

std::string blocks_text(const GenArrow& r) {
  std::string s = "{";
  for (const Block& b : r.blocks()) {
    s += s.size() > 1 ? ",{" : "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s + "}";
}

Verdict worked_example() {
  Verdict v;
  const GenArrow r1 = make_arrow(3, 9, {{0, 3}, {4, 5}, {1, 6}, {7, 8}, {2, 9}, {10, 11}});
  const GenArrow r2 = make_arrow(9, 1, {{0, 1}, {2, 9}, {3, 4}, {5, 6}, {7, 8}});
  const CompositionResult result = compose(r2, r1);
  v.expect(result.arrow == make_arrow(3, 1, {{0, 3}, {1, 2}}), "partition " + blocks_text(result.arrow));
  v.expect(result.circles == 1, "circles = " + std::to_string(result.circles));
  if (v.pass) v.detail = blocks_text(result.arrow) + ", circles = 1";
  return v;
}

Verdict associativity() {
  Verdict v;
  std::size_t exhaustive = 0;
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t l = 0; l <= 2; ++l)
          for (const GenArrow& r1 : all_arrows(n, m))
            for (const GenArrow& r2 : all_arrows(m, k))
              for (const GenArrow& r3 : all_arrows(k, l)) {
                ++exhaustive;
                v.expect(compose(compose(r3, r2).arrow, r1).arrow ==
                             compose(r3, compose(r2, r1).arrow).arrow,
                         "exhaustive triple");
              }
  gen::Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    std::size_t b[4];
    for (auto& x : b) x = gen::uniform(rng, 0, 5);
    const GenArrow r1 = gen::arrow(rng, b[0], b[1]);
    const GenArrow r2 = gen::arrow(rng, b[1], b[2]);
    const GenArrow r3 = gen::arrow(rng, b[2], b[3]);
    v.expect(compose(compose(r3, r2).arrow, r1).arrow == compose(r3, compose(r2, r1).arrow).arrow,
             "random triple");
  }
  if (v.pass) v.detail = std::to_string(exhaustive) + " exhaustive + 1000 random triples";
  return v;
}

Verdict proof_identity() {
  Verdict v;
  auto verdict = [](const char* f, const char* g, Fragment fr) {
    return proof_equal(parse_term(f), parse_term(g), fr);
  };
  v.expect(verdict("pair(pi1(p,p), pi2(p,p))", "id(p /\\ p)", Fragment::conjunctive) ==
               ProofVerdict::equal,
           "pairing the projections");
  v.expect(verdict("pi1(p,p)", "pi2(p,p)", Fragment::conjunctive) == ProofVerdict::not_equal,
           "projections differ");
  const char* equations[][2] = {
      {"comp(trans(x,y,y), meet(id(x=y), refl(y)))", "pi1(x=y, T)"},
      {"comp(trans(x,x,y), meet(refl(x), id(x=y)))", "pi2(T, x=y)"},
      {"comp(sym(y,x), sym(x,y))", "id(x=y)"},
      {"comp(sym(x,x), refl(x))", "refl(x)"},
  };
  for (const auto& e : equations) {
    v.expect(verdict(e[0], e[1], Fragment::equality) == ProofVerdict::equal, e[0]);
  }
  const ArrowTerm lhs = parse_term("comp(pi1(p,q), meet(id(p), copair(id(q), id(q))))");
  const ArrowTerm rhs = parse_term("pi1(p, q \\/ q)");
  v.expect(proof_equal(lhs, rhs, Fragment::conj_disj) == ProofVerdict::not_equal, "mixed verdict");
  const GenArrow gl = generality(lhs, Fragment::conj_disj);
  const GenArrow gr = generality(rhs, Fragment::conj_disj);
  v.expect(gl.blocks() == std::vector<Block>{{0, 3}, {1, 2}}, "mixed lhs " + blocks_text(gl));
  v.expect(gr.blocks() == std::vector<Block>{{0, 3}, {1}, {2}}, "mixed rhs " + blocks_text(gr));
  if (v.pass) v.detail = "8 verdicts; mixed pair " + blocks_text(gl) + " vs " + blocks_text(gr);
  return v;
}

Verdict functor_laws() {
  Verdict v;
  for (std::size_t n = 0; n <= 4; ++n) {
    v.expect(fp_arrow(2, identity(n)) == rel_identity(power(2, n)), "identity " + std::to_string(n));
  }
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k)
        for (const GenArrow& a : all_arrows(n, m))
          for (const GenArrow& b : all_arrows(m, k)) {
            ++pairs;
            v.expect(rel_compose(fp_arrow(2, b), fp_arrow(2, a)) == fp_arrow(2, compose(b, a).arrow),
                     "composition at p = 2");
          }
  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen::uniform(rng, 0, 3), m = gen::uniform(rng, 0, 3),
                      k = gen::uniform(rng, 0, 3);
    const GenArrow a = gen::arrow(rng, n, m), b = gen::arrow(rng, m, k);
    v.expect(rel_compose(fp_arrow(3, b), fp_arrow(3, a)) == fp_arrow(3, compose(b, a).arrow),
             "composition at p = 3");
  }
  if (v.pass) v.detail = std::to_string(pairs) + " composable pairs at p = 2, 100 at p = 3";
  return v;
}

Verdict faithfulness() {
  Verdict v;
  std::size_t arrows = 0, collisions = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; n + m <= 4; ++m) {
      std::set<std::vector<std::pair<std::size_t, std::size_t>>> images;
      for (const GenArrow& r : all_arrows(n, m)) {
        ++arrows;
        if (!images.insert(fp_arrow(2, r).pairs()).second) ++collisions;
      }
    }
  v.expect(collisions == 0, std::to_string(collisions) + " collisions");
  if (v.pass) v.detail = std::to_string(arrows) + " arrows, 0 collisions";
  return v;
}

Verdict function_characterizations() {
  Verdict v;
  std::size_t relations = 0;
  for (std::size_t size = 0; size <= 3; ++size) {
    std::vector<std::pair<std::size_t, std::size_t>> offdiag;
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = x + 1; y < size; ++y) offdiag.emplace_back(x, y);
    for (std::size_t mask = 0; mask < (std::size_t{1} << offdiag.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      for (std::size_t b = 0; b < offdiag.size(); ++b)
        if (mask >> b & 1) chosen.push_back(offdiag[b]);
      ++relations;
      v.expect(check_props(EndoRelation(size, chosen).reflexive_symmetric_closure(), 2).all(),
               "reflexive-symmetric relation");
    }
  }
  for (std::size_t size = 0; size <= 4; ++size) {
    const auto all = all_partitions(size);
    for (const Partition& a : all) {
      ++relations;
      v.expect(check_props(EndoRelation::from_partition(a), 2).all(), "equivalence relation");
      for (const Partition& b : all) {
        v.expect((a == b) == (fequal_set(a, 2) == fequal_set(b, 2)), "function sets determine the relation");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(relations) + " relations, all biconditionals hold";
  return v;
}

Verdict brauer_homomorphism() {
  Verdict v;
  auto check = [&](std::size_t p, const BrauerDiagram& a, const BrauerDiagram& b) {
    const DiagramProduct prod = diagram_mul(a, b);
    const auto factor = static_cast<std::int64_t>(power(p, prod.circles));
    v.expect(multiply(beta_matrix(p, a), beta_matrix(p, b)) ==
                 scale(beta_matrix(p, prod.diagram), factor),
             "p = " + std::to_string(p) + ", n = " + std::to_string(a.n()));
  };
  std::size_t pairs = 0;
  for (std::size_t p : {2, 3})
    for (std::size_t n = 0; n <= 2; ++n)
      for (const BrauerDiagram& a : all_diagrams(n))
        for (const BrauerDiagram& b : all_diagrams(n)) {
          ++pairs;
          check(p, a, b);
        }
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) check(2, gen::diagram(rng, 3), gen::diagram(rng, 3));

  const BrauerDiagram e(make_arrow(2, 2, {{0, 1}, {2, 3}}));
  const DiagramProduct ee = diagram_mul(e, e);
  v.expect(ee.diagram == e && ee.circles == 1, "e.e loop count");
  for (std::size_t p : {2, 3}) {
    v.expect(multiply(beta_matrix(p, e), beta_matrix(p, e)) ==
                 scale(beta_matrix(p, e), static_cast<std::int64_t>(p)),
             "e.e factor at p = " + std::to_string(p));
  }
  if (v.pass) v.detail = std::to_string(pairs) + " exhaustive + 100 random pairs; e.e = p e";
  return v;
}

Verdict brauer_bridges() {
  Verdict v;
  std::size_t diagrams = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const BrauerDiagram& a : all_diagrams(n)) {
      ++diagrams;
      v.expect(beta_as_relation(beta_matrix(2, a)) == fp_arrow(2, a.arrow()), "relation of beta");
      for (const BrauerDiagram& b : all_diagrams(n)) {
        v.expect(boolean_multiply(beta_matrix(2, a), beta_matrix(2, b)) ==
                     fp_arrow(2, diagram_mul(a, b).diagram.arrow()).to_matrix(),
                 "boolean product");
      }
    }
  if (v.pass) v.detail = std::to_string(diagrams) + " diagrams and all same-size pairs";
  return v;
}

Verdict parser_round_trip() {
  Verdict v;
  gen::Rng rng(99);
  std::size_t terms = 0, deepest = 0;
  for (Fragment fr : {Fragment::conjunctive, Fragment::disjunctive, Fragment::conj_disj,
                      Fragment::equality}) {
    gen::TermGenerator g(fr, rng);
    for (int i = 0; i < 250; ++i) {
      const ArrowTerm t = g.any(5);
      type_of(t, fr);
      const std::size_t depth = gen::term_depth(t);
      deepest = std::max(deepest, depth);
      v.expect(depth <= 5, "depth " + std::to_string(depth));
      v.expect(parse_term(to_string(t)) == t, to_string(t));
      ++terms;
    }
  }
  if (v.pass) {
    v.detail = std::to_string(terms) + " well-typed terms, max depth " + std::to_string(deepest);
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"worked 3 -> 9 -> 1 composition", worked_example},
      {"associativity of composition", associativity},
      {"proof-identity verdicts", proof_identity},
      {"F_p preserves identities and composition", functor_laws},
      {"F_2 is faithful for n + m <= 4", faithfulness},
      {"function-set characterizations of relations", function_characterizations},
      {"beta is a homomorphism up to p^circles", brauer_homomorphism},
      {"beta matches F_p; boolean product drops circles", brauer_bridges},
      {"parse(print(t)) = t on generated terms", parser_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
