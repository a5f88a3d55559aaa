#include "gencat/parse.hpp"

#include <cctype>
#include <string>

namespace gencat {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("syntax error at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula formula() { return disjunction(); }

  ArrowTerm term() {
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier("term constructor");
    expect('(');
    ArrowTerm t = term_body(name, at);
    expect(')');
    return t;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (pos_ >= text_.size()) {
      throw ParseError(message + " at end of input", pos_);
    }
    throw ParseError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1))) {
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string identifier(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
      fail(std::string("expected ") + what);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string variable() {
    skip_space();
    const std::size_t at = pos_;
    std::string name = identifier("variable");
    if (name == "T" || name == "F") {
      throw ParseError("'" + name + "' is reserved and cannot name a variable", at);
    }
    return name;
  }

  Formula disjunction() {
    Formula left = conjunction();
    if (accept("\\/")) {
      return Formula::disj(std::move(left), disjunction());
    }
    return left;
  }

  Formula conjunction() {
    Formula left = atom();
    if (accept("/\\")) {
      return Formula::conj(std::move(left), conjunction());
    }
    return left;
  }

  Formula atom() {
    if (accept("(")) {
      Formula inner = disjunction();
      expect(')');
      return inner;
    }
    skip_space();
    const std::size_t at = pos_;
    std::string name = identifier("formula");
    if (name == "T" || name == "F") {
      if (accept("=")) {
        throw ParseError("'" + name + "' is reserved and cannot name a variable", at);
      }
      return name == "T" ? Formula::top() : Formula::bot();
    }
    if (accept("=")) {
      return Formula::equation(std::move(name), variable());
    }
    return Formula::var(std::move(name));
  }

  void comma() { expect(','); }

  ArrowTerm term_body(const std::string& name, std::size_t at) {
    auto two_formulas = [&](auto make) {
      Formula a = formula();
      comma();
      Formula b = formula();
      return make(std::move(a), std::move(b));
    };
    auto two_terms = [&](auto make) {
      ArrowTerm f = term();
      comma();
      ArrowTerm g = term();
      return make(std::move(f), std::move(g));
    };
    if (name == "id") return id(formula());
    if (name == "pi1") return two_formulas(proj1);
    if (name == "pi2") return two_formulas(proj2);
    if (name == "bang") return to_top(formula());
    if (name == "pair") return two_terms(pair);
    if (name == "comp") return two_terms(comp);
    if (name == "in1") return two_formulas(inj1);
    if (name == "in2") return two_formulas(inj2);
    if (name == "cobang") return from_bot(formula());
    if (name == "copair") return two_terms(copair);
    if (name == "meet") return two_terms(meet);
    if (name == "join") return two_terms(join_terms);
    if (name == "refl") return refl(variable());
    if (name == "sym") {
      std::string x = variable();
      comma();
      return sym(std::move(x), variable());
    }
    if (name == "trans") {
      std::string x = variable();
      comma();
      std::string y = variable();
      comma();
      return trans(std::move(x), std::move(y), variable());
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

ArrowTerm parse_term(std::string_view text) {
  Parser p(text);
  ArrowTerm t = p.term();
  p.finish();
  return t;
}

}  // namespace gencat
