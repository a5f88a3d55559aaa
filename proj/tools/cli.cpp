#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "gencat/brauer.hpp"
#include "gencat/gen_arrow.hpp"
#include "gencat/json_io.hpp"
#include "gencat/logic.hpp"
#include "gencat/parse.hpp"
#include "gencat/relation.hpp"

namespace gencat::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@path" always names a file. A JSON payload that does not start with '{'
// is also read from the file it names, when that file exists.
std::string payload(const std::string& arg, bool json) {
  if (!arg.empty() && arg.front() == '@') {
    return read_file(arg.substr(1));
  }
  if (json) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] != '{' && std::filesystem::is_regular_file(arg)) {
      return read_file(arg);
    }
  }
  return arg;
}

Json parse_json(const std::string& arg) {
  try {
    return Json::parse(payload(arg, true));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

ArrowTerm parse_term_arg(const std::string& arg) {
  std::string text = payload(arg, false);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return parse_term(text);
}

Fragment pick_fragment(const std::string& flag, const ArrowTerm& f,
                       const std::optional<ArrowTerm>& g = std::nullopt) {
  if (flag.empty()) {
    return g ? infer_fragment(f, *g) : infer_fragment(f);
  }
  if (auto fr = fragment_from_string(flag)) {
    return *fr;
  }
  throw InputError("unknown fragment '" + flag + "' (expected conj, disj, conjdisj or equality)");
}

std::string position_label(const GenArrow& r, Position x) {
  return x < r.source() ? "s" + std::to_string(x) : "t" + std::to_string(x - r.source());
}

void draw(const GenArrow& r, std::ostream& out) {
  auto row = [&](char prefix, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      out << (i ? " " : "") << prefix << i;
    }
    out << '\n';
  };
  row('s', r.source());
  row('t', r.target());
  for (const Block& b : r.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      out << (i ? " " : "") << position_label(r, b[i]);
    }
    out << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence-relation arrows, proof generality and Brauer diagrams"};
  app.require_subcommand(1);

  // Each subcommand stores its action here; it runs after parsing succeeds.
  std::function<int()> action;

  std::string a_arg, b_arg, fragment_flag, c_flag;
  std::size_t p = 2;
  bool as_matrix = false;

  auto* compose_cmd = app.add_subcommand("compose", "Compose R2 after R1 and count circles");
  compose_cmd->add_option("r2", a_arg, "Arrow m -> k (JSON or @file)")->required();
  compose_cmd->add_option("r1", b_arg, "Arrow n -> m (JSON or @file)")->required();
  compose_cmd->callback([&] {
    action = [&] {
      CompositionResult result = compose(arrow_from_json(parse_json(a_arg)),
                                         arrow_from_json(parse_json(b_arg)));
      out << to_json(result).dump() << '\n';
      return kOk;
    };
  });

  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two derivations are the same proof");
  eq_cmd->add_option("f", a_arg, "First term")->required();
  eq_cmd->add_option("g", b_arg, "Second term")->required();
  eq_cmd->add_option("--fragment", fragment_flag, "conj, disj, conjdisj or equality");
  eq_cmd->callback([&] {
    action = [&] {
      ArrowTerm f = parse_term_arg(a_arg);
      ArrowTerm g = parse_term_arg(b_arg);
      const Fragment fragment = pick_fragment(fragment_flag, f, g);
      const ProofVerdict verdict = proof_equal(f, g, fragment);
      if (verdict == ProofVerdict::different_types) {
        const ArrowType tf = type_of(f, fragment);
        const ArrowType tg = type_of(g, fragment);
        throw InputError("terms have different types: " + to_string(tf.source) + " -> " +
                         to_string(tf.target) + " versus " + to_string(tg.source) + " -> " +
                         to_string(tg.target));
      }
      out << (verdict == ProofVerdict::equal ? "EQUAL" : "NOT-EQUAL") << '\n';
      out << to_json(generality(f, fragment)).dump() << '\n';
      out << to_json(generality(g, fragment)).dump() << '\n';
      return verdict == ProofVerdict::equal ? kOk : kNotEqual;
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "Print the generality of a derivation");
  gen_cmd->add_option("term", a_arg, "Term")->required();
  gen_cmd->add_option("--fragment", fragment_flag, "conj, disj, conjdisj or equality");
  gen_cmd->callback([&] {
    action = [&] {
      ArrowTerm t = parse_term_arg(a_arg);
      out << to_json(generality(t, pick_fragment(fragment_flag, t))).dump() << '\n';
      return kOk;
    };
  });

  auto* rep_cmd = app.add_subcommand("rep", "Image of an arrow as a relation between p^n and p^m");
  rep_cmd->add_option("arrow", a_arg, "Arrow (JSON or @file)")->required();
  rep_cmd->add_option("--p", p, "Base, at least 2")->default_val(2);
  rep_cmd->add_flag("--matrix", as_matrix, "Also emit the 0-1 matrix");
  rep_cmd->callback([&] {
    action = [&] {
      RelArrow rel = fp_arrow(p, arrow_from_json(parse_json(a_arg)));
      Json j = to_json(rel);
      if (as_matrix) {
        j["matrix"] = to_json(rel.to_matrix())["entries"];
      }
      out << j.dump() << '\n';
      return kOk;
    };
  });

  auto* mul_cmd = app.add_subcommand("brauer-mul", "Multiply two Brauer algebra elements");
  mul_cmd->add_option("a", a_arg, "Element or diagram (JSON or @file)")->required();
  mul_cmd->add_option("b", b_arg, "Element or diagram (JSON or @file)")->required();
  mul_cmd->add_option("--c", c_flag, "Loop parameter num/den");
  mul_cmd->callback([&] {
    action = [&] {
      ElementWithParameter a = element_from_json(parse_json(a_arg));
      ElementWithParameter b = element_from_json(parse_json(b_arg));
      Rational c = a.c;
      if (!c_flag.empty()) {
        c = parse_rational(c_flag);
      } else if (a.c != b.c) {
        throw InputError("elements disagree on c; pass --c");
      }
      BrauerElement prod = algebra_mul(a.element, b.element, {a.element.n(), c});
      out << to_json(prod, c).dump() << '\n';
      return kOk;
    };
  });

  auto* beta_cmd = app.add_subcommand("beta", "Matrix of a diagram on the p-dimensional basis");
  beta_cmd->add_option("diagram", a_arg, "Diagram (JSON or @file)")->required();
  beta_cmd->add_option("--p", p, "Base, at least 2")->default_val(2);
  beta_cmd->callback([&] {
    action = [&] {
      BrauerDiagram d(arrow_from_json(parse_json(a_arg)));
      out << to_json(beta_matrix(p, d)).dump() << '\n';
      return kOk;
    };
  });

  auto* draw_cmd = app.add_subcommand("draw", "Source row, target row and one line per block");
  draw_cmd->add_option("arrow", a_arg, "Arrow (JSON or @file)")->required();
  draw_cmd->callback([&] {
    action = [&] {
      draw(arrow_from_json(parse_json(a_arg)), out);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace gencat::cli
