#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "gencat/gen_arrow.hpp"

namespace gencat {

struct FormulaNode;
struct TermNode;

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula equation(std::string x, std::string y);

  const FormulaNode& node() const { return *node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

namespace formula {
struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};
struct Top {
  friend bool operator==(const Top&, const Top&) = default;
};
struct Bot {
  friend bool operator==(const Bot&, const Bot&) = default;
};
struct Conj {
  Formula left, right;
  friend bool operator==(const Conj&, const Conj&) = default;
};
struct Disj {
  Formula left, right;
  friend bool operator==(const Disj&, const Disj&) = default;
};
struct Equation {
  std::string x, y;
  friend bool operator==(const Equation&, const Equation&) = default;
};
}  // namespace formula

struct FormulaNode {
  std::variant<formula::Var, formula::Top, formula::Bot, formula::Conj, formula::Disj,
               formula::Equation>
      value;
};

/// Immutable derivation term. Copies share structure.
class ArrowTerm {
 public:
  explicit ArrowTerm(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  const TermNode& node() const { return *node_; }

  friend bool operator==(const ArrowTerm& a, const ArrowTerm& b);

 private:
  std::shared_ptr<const TermNode> node_;
};

namespace term {
// Conjunctive primitives and rules.
struct Id {
  Formula a;
  friend bool operator==(const Id&, const Id&) = default;
};
struct Proj1 {
  Formula a, b;
  friend bool operator==(const Proj1&, const Proj1&) = default;
};
struct Proj2 {
  Formula a, b;
  friend bool operator==(const Proj2&, const Proj2&) = default;
};
struct ToTop {
  Formula a;
  friend bool operator==(const ToTop&, const ToTop&) = default;
};
struct Pair {
  ArrowTerm f, g;
  friend bool operator==(const Pair&, const Pair&) = default;
};
// g after f.
struct Comp {
  ArrowTerm g, f;
  friend bool operator==(const Comp&, const Comp&) = default;
};
// Disjunctive duals.
struct Inj1 {
  Formula a, b;
  friend bool operator==(const Inj1&, const Inj1&) = default;
};
struct Inj2 {
  Formula a, b;
  friend bool operator==(const Inj2&, const Inj2&) = default;
};
struct FromBot {
  Formula a;
  friend bool operator==(const FromBot&, const FromBot&) = default;
};
struct Copair {
  ArrowTerm f, g;
  friend bool operator==(const Copair&, const Copair&) = default;
};
// Equality axioms.
struct Refl {
  std::string x;
  friend bool operator==(const Refl&, const Refl&) = default;
};
struct Sym {
  std::string x, y;
  friend bool operator==(const Sym&, const Sym&) = default;
};
struct Trans {
  std::string x, y, z;
  friend bool operator==(const Trans&, const Trans&) = default;
};
// f /\ g and f \/ g.
struct Meet {
  ArrowTerm f, g;
  friend bool operator==(const Meet&, const Meet&) = default;
};
struct JoinT {
  ArrowTerm f, g;
  friend bool operator==(const JoinT&, const JoinT&) = default;
};
}  // namespace term

struct TermNode {
  std::variant<term::Id, term::Proj1, term::Proj2, term::ToTop, term::Pair, term::Comp,
               term::Inj1, term::Inj2, term::FromBot, term::Copair, term::Refl, term::Sym,
               term::Trans, term::Meet, term::JoinT>
      value;
};

// Term constructors.
ArrowTerm id(Formula a);
ArrowTerm proj1(Formula a, Formula b);
ArrowTerm proj2(Formula a, Formula b);
ArrowTerm to_top(Formula a);
ArrowTerm pair(ArrowTerm f, ArrowTerm g);
ArrowTerm comp(ArrowTerm g, ArrowTerm f);
ArrowTerm inj1(Formula a, Formula b);
ArrowTerm inj2(Formula a, Formula b);
ArrowTerm from_bot(Formula a);
ArrowTerm copair(ArrowTerm f, ArrowTerm g);
ArrowTerm refl(std::string x);
ArrowTerm sym(std::string x, std::string y);
ArrowTerm trans(std::string x, std::string y, std::string z);
ArrowTerm meet(ArrowTerm f, ArrowTerm g);
ArrowTerm join_terms(ArrowTerm f, ArrowTerm g);

/// Which connectives and primitives a derivation may use.
///   conjunctive:  /\ and T
///   disjunctive:  \/ and F
///   conj_disj:    /\ and \/, without T and F
///   equality:     x=y atoms with /\ and T, plus refl, sym, trans
enum class Fragment { conjunctive, disjunctive, conj_disj, equality };

std::string_view to_string(Fragment f);
std::optional<Fragment> fragment_from_string(std::string_view name);

/// Raised for ill-typed terms and for connectives outside the active fragment.
class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& message, std::string subterm)
      : std::runtime_error(message + " in " + subterm), subterm_(std::move(subterm)) {}
  const std::string& subterm() const { return subterm_; }

 private:
  std::string subterm_;
};

struct ArrowType {
  Formula source;
  Formula target;
  friend bool operator==(const ArrowType&, const ArrowType&) = default;
};

/// Number of variable occurrences: one per propositional variable, two per
/// equation x=y.
std::size_t occurrences(const Formula& a);

ArrowType type_of(const ArrowTerm& t, Fragment fragment);

/// Generality of a well-typed derivation, as an arrow
/// occurrences(source) -> occurrences(target). Throws TypeError otherwise.
GenArrow generality(const ArrowTerm& t, Fragment fragment);

enum class ProofVerdict { equal, not_equal, different_types };

/// Two derivations denote the same proof when they share a type and their
/// generalities coincide. Terms of different types yield different_types.
ProofVerdict proof_equal(const ArrowTerm& f, const ArrowTerm& g, Fragment fragment);

/// Smallest fragment admitting every connective and primitive in the terms.
/// Throws TypeError when no single fragment fits.
Fragment infer_fragment(const ArrowTerm& t);
Fragment infer_fragment(const ArrowTerm& f, const ArrowTerm& g);

/// Formal dual: swaps /\ with \/, T with F and every primitive with its
/// dual, reversing composition. Throws TypeError on equality primitives.
Formula dual(const Formula& a);
ArrowTerm dual(const ArrowTerm& t);

/// Concrete syntax accepted by parse_formula / parse_term.
std::string to_string(const Formula& a);
std::string to_string(const ArrowTerm& t);

}  // namespace gencat
