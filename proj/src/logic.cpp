#include "gencat/logic.hpp"

#include <array>
#include <utility>
#include <vector>

namespace gencat {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ArrowTerm make_term(auto alternative) {
  return ArrowTerm(std::make_shared<const TermNode>(TermNode{std::move(alternative)}));
}

}  // namespace

// ---------------------------------------------------------------------------
// Syntax

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{formula::Var{std::move(name)}}));
}
Formula Formula::top() {
  static const Formula t(std::make_shared<const FormulaNode>(FormulaNode{formula::Top{}}));
  return t;
}
Formula Formula::bot() {
  static const Formula b(std::make_shared<const FormulaNode>(FormulaNode{formula::Bot{}}));
  return b;
}
Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{formula::Conj{std::move(left), std::move(right)}}));
}
Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{formula::Disj{std::move(left), std::move(right)}}));
}
Formula Formula::equation(std::string x, std::string y) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{formula::Equation{std::move(x), std::move(y)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

bool operator==(const ArrowTerm& a, const ArrowTerm& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

ArrowTerm id(Formula a) { return make_term(term::Id{std::move(a)}); }
ArrowTerm proj1(Formula a, Formula b) { return make_term(term::Proj1{std::move(a), std::move(b)}); }
ArrowTerm proj2(Formula a, Formula b) { return make_term(term::Proj2{std::move(a), std::move(b)}); }
ArrowTerm to_top(Formula a) { return make_term(term::ToTop{std::move(a)}); }
ArrowTerm pair(ArrowTerm f, ArrowTerm g) { return make_term(term::Pair{std::move(f), std::move(g)}); }
ArrowTerm comp(ArrowTerm g, ArrowTerm f) { return make_term(term::Comp{std::move(g), std::move(f)}); }
ArrowTerm inj1(Formula a, Formula b) { return make_term(term::Inj1{std::move(a), std::move(b)}); }
ArrowTerm inj2(Formula a, Formula b) { return make_term(term::Inj2{std::move(a), std::move(b)}); }
ArrowTerm from_bot(Formula a) { return make_term(term::FromBot{std::move(a)}); }
ArrowTerm copair(ArrowTerm f, ArrowTerm g) {
  return make_term(term::Copair{std::move(f), std::move(g)});
}
ArrowTerm refl(std::string x) { return make_term(term::Refl{std::move(x)}); }
ArrowTerm sym(std::string x, std::string y) { return make_term(term::Sym{std::move(x), std::move(y)}); }
ArrowTerm trans(std::string x, std::string y, std::string z) {
  return make_term(term::Trans{std::move(x), std::move(y), std::move(z)});
}
ArrowTerm meet(ArrowTerm f, ArrowTerm g) { return make_term(term::Meet{std::move(f), std::move(g)}); }
ArrowTerm join_terms(ArrowTerm f, ArrowTerm g) {
  return make_term(term::JoinT{std::move(f), std::move(g)});
}

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::conjunctive: return "conj";
    case Fragment::disjunctive: return "disj";
    case Fragment::conj_disj: return "conjdisj";
    case Fragment::equality: return "equality";
  }
  return "?";
}

std::optional<Fragment> fragment_from_string(std::string_view name) {
  for (Fragment f : {Fragment::conjunctive, Fragment::disjunctive, Fragment::conj_disj,
                     Fragment::equality}) {
    if (to_string(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_formula(const Formula& a, std::string& out) {
  auto is_conj = [](const Formula& f) {
    return std::holds_alternative<formula::Conj>(f.node().value);
  };
  auto is_disj = [](const Formula& f) {
    return std::holds_alternative<formula::Disj>(f.node().value);
  };
  auto wrapped = [&](const Formula& f, bool parens) {
    if (parens) out += '(';
    print_formula(f, out);
    if (parens) out += ')';
  };
  std::visit(Overloaded{
                 [&](const formula::Var& v) { out += v.name; },
                 [&](const formula::Top&) { out += 'T'; },
                 [&](const formula::Bot&) { out += 'F'; },
                 [&](const formula::Equation& e) { out += e.x + "=" + e.y; },
                 [&](const formula::Conj& c) {
                   wrapped(c.left, is_conj(c.left) || is_disj(c.left));
                   out += " /\\ ";
                   wrapped(c.right, is_disj(c.right));
                 },
                 [&](const formula::Disj& d) {
                   wrapped(d.left, is_disj(d.left));
                   out += " \\/ ";
                   wrapped(d.right, false);
                 },
             },
             a.node().value);
}

void print_term(const ArrowTerm& t, std::string& out) {
  auto call = [&](const char* name, auto&&... args) {
    out += name;
    out += '(';
    bool first = true;
    auto arg = [&](const auto& x) {
      if (!first) out += ", ";
      first = false;
      using X = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<X, Formula>) {
        print_formula(x, out);
      } else if constexpr (std::is_same_v<X, ArrowTerm>) {
        print_term(x, out);
      } else {
        out += x;
      }
    };
    (arg(args), ...);
    out += ')';
  };
  std::visit(Overloaded{
                 [&](const term::Id& x) { call("id", x.a); },
                 [&](const term::Proj1& x) { call("pi1", x.a, x.b); },
                 [&](const term::Proj2& x) { call("pi2", x.a, x.b); },
                 [&](const term::ToTop& x) { call("bang", x.a); },
                 [&](const term::Pair& x) { call("pair", x.f, x.g); },
                 [&](const term::Comp& x) { call("comp", x.g, x.f); },
                 [&](const term::Inj1& x) { call("in1", x.a, x.b); },
                 [&](const term::Inj2& x) { call("in2", x.a, x.b); },
                 [&](const term::FromBot& x) { call("cobang", x.a); },
                 [&](const term::Copair& x) { call("copair", x.f, x.g); },
                 [&](const term::Refl& x) { call("refl", x.x); },
                 [&](const term::Sym& x) { call("sym", x.x, x.y); },
                 [&](const term::Trans& x) { call("trans", x.x, x.y, x.z); },
                 [&](const term::Meet& x) { call("meet", x.f, x.g); },
                 [&](const term::JoinT& x) { call("join", x.f, x.g); },
             },
             t.node().value);
}

}  // namespace

std::string to_string(const Formula& a) {
  std::string out;
  print_formula(a, out);
  return out;
}

std::string to_string(const ArrowTerm& t) {
  std::string out;
  print_term(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Typing

std::size_t occurrences(const Formula& a) {
  return std::visit(Overloaded{
                        [](const formula::Var&) -> std::size_t { return 1; },
                        [](const formula::Top&) -> std::size_t { return 0; },
                        [](const formula::Bot&) -> std::size_t { return 0; },
                        [](const formula::Equation&) -> std::size_t { return 2; },
                        [](const formula::Conj& c) { return occurrences(c.left) + occurrences(c.right); },
                        [](const formula::Disj& d) { return occurrences(d.left) + occurrences(d.right); },
                    },
                    a.node().value);
}

namespace {

struct Features {
  bool conj = false;
  bool disj = false;
  bool top = false;
  bool bot = false;
  bool propvar = false;
  bool equality = false;
};

Features allowed(Fragment f) {
  switch (f) {
    case Fragment::conjunctive: return {.conj = true, .top = true, .propvar = true};
    case Fragment::disjunctive: return {.disj = true, .bot = true, .propvar = true};
    case Fragment::conj_disj: return {.conj = true, .disj = true, .propvar = true};
    case Fragment::equality: return {.conj = true, .top = true, .equality = true};
  }
  return {};
}

[[noreturn]] void reject(const char* what, Fragment f, const ArrowTerm& t) {
  throw TypeError(std::string(what) + " is not permitted in the " + std::string(to_string(f)) +
                      " fragment",
                  to_string(t));
}

void check_formula(const Formula& a, Fragment f, const ArrowTerm& t) {
  const Features ok = allowed(f);
  std::visit(Overloaded{
                 [&](const formula::Var&) {
                   if (!ok.propvar) reject("propositional variable", f, t);
                 },
                 [&](const formula::Top&) {
                   if (!ok.top) reject("T", f, t);
                 },
                 [&](const formula::Bot&) {
                   if (!ok.bot) reject("F", f, t);
                 },
                 [&](const formula::Equation&) {
                   if (!ok.equality) reject("equation", f, t);
                 },
                 [&](const formula::Conj& c) {
                   if (!ok.conj) reject("/\\", f, t);
                   check_formula(c.left, f, t);
                   check_formula(c.right, f, t);
                 },
                 [&](const formula::Disj& d) {
                   if (!ok.disj) reject("\\/", f, t);
                   check_formula(d.left, f, t);
                   check_formula(d.right, f, t);
                 },
             },
             a.node().value);
}

}  // namespace

ArrowType type_of(const ArrowTerm& t, Fragment fragment) {
  const Features ok = allowed(fragment);
  auto need = [&](bool feature, const char* what) {
    if (!feature) reject(what, fragment, t);
  };
  auto formulas = [&](std::initializer_list<const Formula*> fs) {
    for (const Formula* a : fs) check_formula(*a, fragment, t);
  };
  return std::visit(
      Overloaded{
          [&](const term::Id& x) {
            formulas({&x.a});
            return ArrowType{x.a, x.a};
          },
          [&](const term::Proj1& x) {
            need(ok.conj, "pi1");
            formulas({&x.a, &x.b});
            return ArrowType{Formula::conj(x.a, x.b), x.a};
          },
          [&](const term::Proj2& x) {
            need(ok.conj, "pi2");
            formulas({&x.a, &x.b});
            return ArrowType{Formula::conj(x.a, x.b), x.b};
          },
          [&](const term::ToTop& x) {
            need(ok.top, "bang");
            formulas({&x.a});
            return ArrowType{x.a, Formula::top()};
          },
          [&](const term::Pair& x) {
            need(ok.conj, "pair");
            ArrowType f = type_of(x.f, fragment);
            ArrowType g = type_of(x.g, fragment);
            if (!(f.source == g.source)) {
              throw TypeError("type mismatch: pair components have sources " +
                                  to_string(f.source) + " and " + to_string(g.source),
                              to_string(t));
            }
            return ArrowType{f.source, Formula::conj(f.target, g.target)};
          },
          [&](const term::Comp& x) {
            ArrowType f = type_of(x.f, fragment);
            ArrowType g = type_of(x.g, fragment);
            if (!(f.target == g.source)) {
              throw TypeError("type mismatch: target " + to_string(f.target) +
                                  " does not match source " + to_string(g.source),
                              to_string(t));
            }
            return ArrowType{f.source, g.target};
          },
          [&](const term::Inj1& x) {
            need(ok.disj, "in1");
            formulas({&x.a, &x.b});
            return ArrowType{x.a, Formula::disj(x.a, x.b)};
          },
          [&](const term::Inj2& x) {
            need(ok.disj, "in2");
            formulas({&x.a, &x.b});
            return ArrowType{x.b, Formula::disj(x.a, x.b)};
          },
          [&](const term::FromBot& x) {
            need(ok.bot, "cobang");
            formulas({&x.a});
            return ArrowType{Formula::bot(), x.a};
          },
          [&](const term::Copair& x) {
            need(ok.disj, "copair");
            ArrowType f = type_of(x.f, fragment);
            ArrowType g = type_of(x.g, fragment);
            if (!(f.target == g.target)) {
              throw TypeError("type mismatch: copair components have targets " +
                                  to_string(f.target) + " and " + to_string(g.target),
                              to_string(t));
            }
            return ArrowType{Formula::disj(f.source, g.source), f.target};
          },
          [&](const term::Refl& x) {
            need(ok.equality, "refl");
            return ArrowType{Formula::top(), Formula::equation(x.x, x.x)};
          },
          [&](const term::Sym& x) {
            need(ok.equality, "sym");
            return ArrowType{Formula::equation(x.x, x.y), Formula::equation(x.y, x.x)};
          },
          [&](const term::Trans& x) {
            need(ok.equality, "trans");
            return ArrowType{
                Formula::conj(Formula::equation(x.x, x.y), Formula::equation(x.y, x.z)),
                Formula::equation(x.x, x.z)};
          },
          [&](const term::Meet& x) {
            need(ok.conj, "meet");
            ArrowType f = type_of(x.f, fragment);
            ArrowType g = type_of(x.g, fragment);
            return ArrowType{Formula::conj(f.source, g.source), Formula::conj(f.target, g.target)};
          },
          [&](const term::JoinT& x) {
            need(ok.disj, "join");
            ArrowType f = type_of(x.f, fragment);
            ArrowType g = type_of(x.g, fragment);
            return ArrowType{Formula::disj(f.source, g.source), Formula::disj(f.target, g.target)};
          },
      },
      t.node().value);
}

// ---------------------------------------------------------------------------
// Generality

namespace {

// Arrow (a+b) -> a relating each left occurrence of the source to its copy
// in the target.
GenArrow first_projection(std::size_t a, std::size_t b) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < a; ++i) {
    blocks.push_back({i, i + a + b});
  }
  return make_arrow(a + b, a, std::move(blocks));
}

GenArrow second_projection(std::size_t a, std::size_t b) {
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < b; ++j) {
    blocks.push_back({a + j, a + b + j});
  }
  return make_arrow(a + b, b, std::move(blocks));
}

// For f : c -> a and g : c -> b, the closure of f together with g whose
// target positions are moved past f's targets; result c -> a+b.
GenArrow pair_arrows(const GenArrow& f, const GenArrow& g) {
  const std::size_t c = f.source();
  const std::size_t a = f.target();
  DisjointSets sets(c + a + g.target());
  for (const Block& b : f.blocks()) {
    sets.unite_block(b);
  }
  for (const Block& b : g.blocks()) {
    auto shifted = [&](Position x) { return x < c ? x : x + a; };
    for (std::size_t i = 1; i < b.size(); ++i) {
      sets.unite(shifted(b[0]), shifted(b[i]));
    }
  }
  return GenArrow(c, a + g.target(), sets.to_partition());
}

GenArrow copair_arrows(const GenArrow& f, const GenArrow& g) {
  return transpose(pair_arrows(transpose(f), transpose(g)));
}

// Reflexive-symmetric closure of the listed pairs on n+m positions. The
// result must already be transitive for it to be a partition.
GenArrow from_generating_pairs(std::size_t n, std::size_t m,
                               std::initializer_list<std::pair<Position, Position>> pairs) {
  const std::size_t size = n + m;
  std::vector<char> rel(size * size, 0);
  for (Position x = 0; x < size; ++x) rel[x * size + x] = 1;
  for (auto [x, y] : pairs) {
    rel[x * size + y] = 1;
    rel[y * size + x] = 1;
  }
  std::vector<std::size_t> labels(size);
  for (Position x = 0; x < size; ++x) {
    labels[x] = x;
    for (Position y = 0; y < x; ++y) {
      if (rel[x * size + y]) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  Partition partition = Partition::from_labels(labels);
  for (Position x = 0; x < size; ++x) {
    for (Position y = 0; y < size; ++y) {
      if (static_cast<bool>(rel[x * size + y]) != partition.related(x, y)) {
        throw std::logic_error("generating pairs do not close to an equivalence relation");
      }
    }
  }
  return GenArrow(n, m, std::move(partition));
}

struct Evaluated {
  ArrowType type;
  GenArrow arrow;
};

Evaluated evaluate(const ArrowTerm& t, Fragment fragment) {
  ArrowType type = type_of(t, fragment);
  auto occ = [](const Formula& a) { return occurrences(a); };
  GenArrow arrow = std::visit(
      Overloaded{
          [&](const term::Id& x) { return identity(occ(x.a)); },
          [&](const term::Proj1& x) { return first_projection(occ(x.a), occ(x.b)); },
          [&](const term::Proj2& x) { return second_projection(occ(x.a), occ(x.b)); },
          [&](const term::ToTop& x) { return GenArrow(occ(x.a), 0, Partition::discrete(occ(x.a))); },
          [&](const term::Pair& x) {
            return pair_arrows(evaluate(x.f, fragment).arrow, evaluate(x.g, fragment).arrow);
          },
          [&](const term::Comp& x) {
            return compose(evaluate(x.g, fragment).arrow, evaluate(x.f, fragment).arrow).arrow;
          },
          [&](const term::Inj1& x) { return transpose(first_projection(occ(x.a), occ(x.b))); },
          [&](const term::Inj2& x) { return transpose(second_projection(occ(x.a), occ(x.b))); },
          [&](const term::FromBot& x) {
            return GenArrow(0, occ(x.a), Partition::discrete(occ(x.a)));
          },
          [&](const term::Copair& x) {
            return copair_arrows(evaluate(x.f, fragment).arrow, evaluate(x.g, fragment).arrow);
          },
          [&](const term::Refl&) { return from_generating_pairs(0, 2, {{0, 1}}); },
          [&](const term::Sym&) { return from_generating_pairs(2, 2, {{0, 3}, {1, 2}}); },
          [&](const term::Trans&) {
            return from_generating_pairs(4, 2, {{0, 4}, {1, 2}, {3, 5}});
          },
          [&](const term::Meet& x) {
            // f /\ g = <f o pi1, g o pi2>
            Evaluated f = evaluate(x.f, fragment);
            Evaluated g = evaluate(x.g, fragment);
            const std::size_t a = occ(f.type.source);
            const std::size_t c = occ(g.type.source);
            return pair_arrows(compose(f.arrow, first_projection(a, c)).arrow,
                               compose(g.arrow, second_projection(a, c)).arrow);
          },
          [&](const term::JoinT& x) {
            // f \/ g = [in1 o f, in2 o g]
            Evaluated f = evaluate(x.f, fragment);
            Evaluated g = evaluate(x.g, fragment);
            const std::size_t b = occ(f.type.target);
            const std::size_t d = occ(g.type.target);
            return copair_arrows(compose(transpose(first_projection(b, d)), f.arrow).arrow,
                                 compose(transpose(second_projection(b, d)), g.arrow).arrow);
          },
      },
      t.node().value);
  return Evaluated{std::move(type), std::move(arrow)};
}

}  // namespace

GenArrow generality(const ArrowTerm& t, Fragment fragment) {
  return evaluate(t, fragment).arrow;
}

ProofVerdict proof_equal(const ArrowTerm& f, const ArrowTerm& g, Fragment fragment) {
  Evaluated ef = evaluate(f, fragment);
  Evaluated eg = evaluate(g, fragment);
  if (!(ef.type == eg.type)) {
    return ProofVerdict::different_types;
  }
  return ef.arrow == eg.arrow ? ProofVerdict::equal : ProofVerdict::not_equal;
}

// ---------------------------------------------------------------------------
// Fragment inference and duality

namespace {

void collect(const Formula& a, Features& used) {
  std::visit(Overloaded{
                 [&](const formula::Var&) { used.propvar = true; },
                 [&](const formula::Top&) { used.top = true; },
                 [&](const formula::Bot&) { used.bot = true; },
                 [&](const formula::Equation&) { used.equality = true; },
                 [&](const formula::Conj& c) {
                   used.conj = true;
                   collect(c.left, used);
                   collect(c.right, used);
                 },
                 [&](const formula::Disj& d) {
                   used.disj = true;
                   collect(d.left, used);
                   collect(d.right, used);
                 },
             },
             a.node().value);
}

void collect(const ArrowTerm& t, Features& used) {
  std::visit(Overloaded{
                 [&](const term::Id& x) { collect(x.a, used); },
                 [&](const term::Proj1& x) {
                   used.conj = true;
                   collect(x.a, used);
                   collect(x.b, used);
                 },
                 [&](const term::Proj2& x) {
                   used.conj = true;
                   collect(x.a, used);
                   collect(x.b, used);
                 },
                 [&](const term::ToTop& x) {
                   used.top = true;
                   collect(x.a, used);
                 },
                 [&](const term::Pair& x) {
                   used.conj = true;
                   collect(x.f, used);
                   collect(x.g, used);
                 },
                 [&](const term::Comp& x) {
                   collect(x.g, used);
                   collect(x.f, used);
                 },
                 [&](const term::Inj1& x) {
                   used.disj = true;
                   collect(x.a, used);
                   collect(x.b, used);
                 },
                 [&](const term::Inj2& x) {
                   used.disj = true;
                   collect(x.a, used);
                   collect(x.b, used);
                 },
                 [&](const term::FromBot& x) {
                   used.bot = true;
                   collect(x.a, used);
                 },
                 [&](const term::Copair& x) {
                   used.disj = true;
                   collect(x.f, used);
                   collect(x.g, used);
                 },
                 [&](const term::Refl&) {
                   used.equality = true;
                   used.top = true;
                 },
                 [&](const term::Sym&) { used.equality = true; },
                 [&](const term::Trans&) {
                   used.equality = true;
                   used.conj = true;
                 },
                 [&](const term::Meet& x) {
                   used.conj = true;
                   collect(x.f, used);
                   collect(x.g, used);
                 },
                 [&](const term::JoinT& x) {
                   used.disj = true;
                   collect(x.f, used);
                   collect(x.g, used);
                 },
             },
             t.node().value);
}

Fragment infer(const Features& used, const std::string& where) {
  if (used.equality) {
    if (used.disj || used.bot || used.propvar) {
      throw TypeError("equations cannot be mixed with \\/, F or propositional variables", where);
    }
    return Fragment::equality;
  }
  const bool conjunctive = used.conj || used.top;
  const bool disjunctive = used.disj || used.bot;
  if (conjunctive && disjunctive) {
    if (used.top || used.bot) {
      throw TypeError("the mixed /\\ \\/ fragment excludes T and F", where);
    }
    return Fragment::conj_disj;
  }
  return disjunctive ? Fragment::disjunctive : Fragment::conjunctive;
}

}  // namespace

Fragment infer_fragment(const ArrowTerm& t) {
  Features used;
  collect(t, used);
  return infer(used, to_string(t));
}

Fragment infer_fragment(const ArrowTerm& f, const ArrowTerm& g) {
  Features used;
  collect(f, used);
  collect(g, used);
  return infer(used, to_string(f) + " and " + to_string(g));
}

Formula dual(const Formula& a) {
  return std::visit(Overloaded{
                        [&](const formula::Var&) { return a; },
                        [](const formula::Top&) { return Formula::bot(); },
                        [](const formula::Bot&) { return Formula::top(); },
                        [&](const formula::Equation&) -> Formula {
                          throw TypeError("equations have no dual", to_string(a));
                        },
                        [](const formula::Conj& c) {
                          return Formula::disj(dual(c.left), dual(c.right));
                        },
                        [](const formula::Disj& d) {
                          return Formula::conj(dual(d.left), dual(d.right));
                        },
                    },
                    a.node().value);
}

ArrowTerm dual(const ArrowTerm& t) {
  auto no_dual = [&](const auto&) -> ArrowTerm {
    throw TypeError("equality axioms have no dual", to_string(t));
  };
  return std::visit(Overloaded{
                        [](const term::Id& x) { return id(dual(x.a)); },
                        [](const term::Proj1& x) { return inj1(dual(x.a), dual(x.b)); },
                        [](const term::Proj2& x) { return inj2(dual(x.a), dual(x.b)); },
                        [](const term::ToTop& x) { return from_bot(dual(x.a)); },
                        [](const term::Pair& x) { return copair(dual(x.f), dual(x.g)); },
                        [](const term::Comp& x) { return comp(dual(x.f), dual(x.g)); },
                        [](const term::Inj1& x) { return proj1(dual(x.a), dual(x.b)); },
                        [](const term::Inj2& x) { return proj2(dual(x.a), dual(x.b)); },
                        [](const term::FromBot& x) { return to_top(dual(x.a)); },
                        [](const term::Copair& x) { return pair(dual(x.f), dual(x.g)); },
                        [&](const term::Refl& x) { return no_dual(x); },
                        [&](const term::Sym& x) { return no_dual(x); },
                        [&](const term::Trans& x) { return no_dual(x); },
                        [](const term::Meet& x) { return join_terms(dual(x.f), dual(x.g)); },
                        [](const term::JoinT& x) { return meet(dual(x.f), dual(x.g)); },
                    },
                    t.node().value);
}

}  // namespace gencat
