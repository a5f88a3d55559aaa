#include "doctest.h"

#include "gencat/relation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gencat;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Base-p digits of index, most significant first.
std::vector<std::size_t> digits_of(std::size_t index, std::size_t p, std::size_t arity) {
  std::vector<std::size_t> d(arity);
  for (std::size_t i = arity; i-- > 0; index /= p) d[i] = index % p;
  return d;
}

std::size_t power(std::size_t p, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= p;
  return out;
}

// F_p(r) straight from the definition: pairs of function indices whose
// concatenation agrees on every related pair of positions.
RelArrow fp_oracle(std::size_t p, const GenArrow& r) {
  const std::size_t n = r.source(), m = r.target();
  const oracle::PairSet related = oracle::pairs_of(r);
  Pairs out;
  for (std::size_t i = 0; i < power(p, n); ++i) {
    for (std::size_t j = 0; j < power(p, m); ++j) {
      std::vector<std::size_t> a = digits_of(i, p, n);
      for (std::size_t d : digits_of(j, p, m)) a.push_back(d);
      bool ok = true;
      for (auto [x, y] : related) ok = ok && a[x] == a[y];
      if (ok) out.emplace_back(i, j);
    }
  }
  return RelArrow(power(p, n), power(p, m), out);
}

// Every reflexive, symmetric relation on {0, ..., size-1}.
std::vector<EndoRelation> reflexive_symmetric_relations(std::size_t size) {
  Pairs offdiag;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = x + 1; y < size; ++y) offdiag.emplace_back(x, y);
  std::vector<EndoRelation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << offdiag.size()); ++mask) {
    Pairs chosen;
    for (std::size_t b = 0; b < offdiag.size(); ++b)
      if (mask >> b & 1) chosen.push_back(offdiag[b]);
    out.push_back(EndoRelation(size, chosen).reflexive_symmetric_closure());
  }
  return out;
}

}  // namespace

TEST_CASE("PFun indexing") {
  CHECK(PFun(2, {1, 0, 1}).lex_index() == 5);
  CHECK(PFun(3, {2, 1}).lex_index() == 7);
  CHECK(PFun(2, {}).lex_index() == 0);
  CHECK(PFun::from_index(3, 2, 7) == PFun(3, {2, 1}));
  CHECK_THROWS_AS(PFun(2, {2}), ArrowError);
  for (std::size_t p : {2, 3}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t i = 0; i < power(p, n); ++i) {
        const PFun f = PFun::from_index(p, n, i);
        CHECK(f.digits() == digits_of(i, p, n));
        CHECK(f.lex_index() == i);
      }
    }
  }
}

TEST_CASE("join") {
  CHECK(join(PFun(2, {1, 0}), PFun(2, {1})) == PFun(2, {1, 0, 1}));
  CHECK(join(PFun(2, {}), PFun(2, {0, 1})) == PFun(2, {0, 1}));
  CHECK(join(PFun(3, {0}), PFun(3, {1})) == PFun(3, {0, 1}));
  CHECK_THROWS_AS(join(PFun(2, {0}), PFun(3, {1})), ArrowError);
}

TEST_CASE("fequal_set") {
  CHECK(fequal_set(identity(1), 2) == std::vector<PFun>{PFun(2, {0, 0}), PFun(2, {1, 1})});
  CHECK(fequal_set(Partition::discrete(2), 2).size() == 4);
  CHECK(fequal_set(Partition::discrete(0), 2) == std::vector<PFun>{PFun(2, {})});
  CHECK(fequal_set(Partition::discrete(3), 1).size() == 1);
  // Against a brute-force filter over every labelled partition of 4 points.
  for (const Partition& part : all_partitions(4)) {
    std::vector<PFun> want;
    for (std::size_t i = 0; i < 81; ++i) {
      const auto d = digits_of(i, 3, 4);
      bool ok = true;
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) ok = ok && (!part.related(x, y) || d[x] == d[y]);
      if (ok) want.emplace_back(3, d);
    }
    CHECK(fequal_set(part, 3) == want);
  }
}

TEST_CASE("forder_set respects the two-point order") {
  // 0 r 1 only: f(0) <= f(1).
  const EndoRelation r(2, {{0, 1}});
  CHECK(forder_set(r, 2) == std::vector<PFun>{PFun(2, {0, 0}), PFun(2, {0, 1}), PFun(2, {1, 1})});
}

TEST_CASE("cone_char") {
  CHECK(cone_char(identity(1).partition(), 0) == PFun(2, {1, 1}));
  CHECK(cone_char(Partition::discrete(2), 0) == PFun(2, {1, 0}));
  const Partition sym = make_arrow(2, 2, {{0, 3}, {1, 2}}).partition();
  CHECK(cone_char(sym, 1) == PFun(2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(cone_char(sym, 4), ArrowError);
}

TEST_CASE("check_props") {
  CHECK(check_props(EndoRelation::from_partition(identity(2).partition()), 2).all());

  const EndoRelation chain = EndoRelation(3, {{0, 1}, {1, 2}}).reflexive_symmetric_closure();
  CHECK_FALSE(chain.is_transitive());
  // Both sides of the first biconditional are false: the cone over 0 is not monotone.
  const std::vector<PFun> order_set = forder_set(chain, 2);
  CHECK_FALSE(std::binary_search(order_set.begin(), order_set.end(), cone_char(chain, 0)));
  CHECK(check_props(chain, 2).transitivity_via_cones);

  for (std::size_t size = 0; size <= 3; ++size)
    for (const EndoRelation& r : reflexive_symmetric_relations(size)) {
      CHECK(check_props(r, 2).all());
      CHECK(check_props(r, 3).all());
    }
  for (const Partition& part : all_partitions(4)) {
    const PropsReport report = check_props(EndoRelation::from_partition(part), 2);
    CHECK(report.equivalence_via_functions);
    CHECK(report.all());
  }
  CHECK_THROWS_AS(check_props(chain, 1), ArrowError);
}

TEST_CASE("equivalence relations are determined by their function sets") {
  for (std::size_t size = 0; size <= 4; ++size) {
    const auto all = all_partitions(size);
    for (const Partition& a : all)
      for (const Partition& b : all) CHECK((a == b) == (fequal_set(a, 2) == fequal_set(b, 2)));
  }
}

TEST_CASE("relations") {
  CHECK(rel_identity(2) == RelArrow(2, 2, {{0, 0}, {1, 1}}));
  CHECK(rel_compose(rel_identity(2), RelArrow(1, 2, {{0, 1}})) == RelArrow(1, 2, {{0, 1}}));
  CHECK(rel_compose(RelArrow(1, 1, {{0, 0}}), RelArrow(2, 1, {{0, 0}, {1, 0}})) ==
        RelArrow(2, 1, {{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(rel_compose(rel_identity(2), rel_identity(3)), ArrowError);
  CHECK_THROWS_AS(RelArrow(1, 1, {{0, 1}}), ArrowError);
  CHECK(RelArrow(2, 2, {{1, 0}, {0, 1}, {1, 0}}).pairs() == Pairs{{0, 1}, {1, 0}});
}

TEST_CASE("fp_arrow") {
  CHECK(fp_arrow(2, identity(1)) == rel_identity(2));
  CHECK(fp_arrow(2, make_arrow(2, 1, {{0, 2}})) == RelArrow(4, 2, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}));
  CHECK(fp_arrow(2, make_arrow(1, 1, {})) == RelArrow(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK_THROWS_AS(fp_arrow(1, identity(1)), ArrowError);
  CHECK_THROWS_AS(fp_arrow(2, identity(11)), EnumerationCapExceeded);
  CHECK_THROWS_AS(fp_arrow(2, identity(3), 32), EnumerationCapExceeded);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (const GenArrow& r : all_arrows(n, m)) {
        CHECK(fp_arrow(2, r) == fp_oracle(2, r));
        CHECK(fp_arrow(3, r) == fp_oracle(3, r));
      }
}

TEST_CASE("F_p preserves identities and composition") {
  for (std::size_t p : {2, 3})
    for (std::size_t n = 0; n <= 4; ++n) CHECK(fp_arrow(p, identity(n)) == rel_identity(power(p, n)));

  const GenArrow r1 = make_arrow(3, 9, {{0, 3}, {4, 5}, {1, 6}, {7, 8}, {2, 9}, {10, 11}});
  const GenArrow r2 = make_arrow(9, 1, {{0, 1}, {2, 9}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(rel_compose(fp_arrow(2, r2), fp_arrow(2, r1)) == fp_arrow(2, compose(r2, r1).arrow));

  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k)
        for (const GenArrow& a : all_arrows(n, m))
          for (const GenArrow& b : all_arrows(m, k))
            REQUIRE(rel_compose(fp_arrow(2, b), fp_arrow(2, a)) == fp_arrow(2, compose(b, a).arrow));

  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen::uniform(rng, 0, 3), m = gen::uniform(rng, 0, 3),
                      k = gen::uniform(rng, 0, 3);
    const GenArrow a = gen::arrow(rng, n, m), b = gen::arrow(rng, m, k);
    REQUIRE(rel_compose(fp_arrow(3, b), fp_arrow(3, a)) == fp_arrow(3, compose(b, a).arrow));
  }
}

TEST_CASE("F_2 is faithful on small arrows") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; n + m <= 4; ++m) {
      const auto arrows = all_arrows(n, m);
      std::set<std::vector<std::pair<std::size_t, std::size_t>>> images;
      for (const GenArrow& r : arrows) images.insert(fp_arrow(2, r).pairs());
      CHECK(images.size() == arrows.size());
    }
}
