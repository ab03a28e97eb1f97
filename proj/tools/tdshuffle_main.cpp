#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "tdshuffle/coalgebra.hpp"
#include "tdshuffle/hopf.hpp"
#include "tdshuffle/laws.hpp"
#include "tdshuffle/parser.hpp"
#include "tdshuffle/products.hpp"
#include "tdshuffle/render.hpp"

namespace {

using namespace tdshuffle;

// Exit contract: 0 = success / all laws hold, 1 = a law violation,
// 2 = usage or parse error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::size_t vars = 2;
  std::string lambda = "symbolic";
  std::string output = "text";
};

// "symbolic" keeps L formal; otherwise the value must be an integer or p/q.
std::optional<Rational> lambda_point(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  const auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!is_digits(num)) {
    throw std::invalid_argument("--lambda takes 'symbolic' or a rational");
  }
  Integer n{std::string(num)};
  Integer d{1};
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!is_digits(den) || Integer(std::string(den)) == 0) {
      throw std::invalid_argument("--lambda denominator must be a nonzero "
                                  "integer");
    }
    d = Integer(std::string(den));
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

TensorElement at_lambda(const TensorElement& e, const Rational& at) {
  TensorElement out(e.space(), e.vars());
  for (const auto& [w, c] : e.terms()) out.add_term(w, Coefficient(c.eval(at)));
  return out;
}

TensorSquareElement at_lambda(const TensorSquareElement& e,
                              const Rational& at) {
  TensorSquareElement out(e.vars());
  for (const auto& [pair, c] : e.terms()) {
    out.add_term(pair.first, pair.second, Coefficient(c.eval(at)));
  }
  return out;
}

struct Printer {
  bool json;
  std::optional<Rational> at;

  void element(const TensorElement& e) const {
    const TensorElement value = at ? at_lambda(e, *at) : e;
    if (json) {
      std::cout << to_json(value).dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
  }
  void square(const TensorSquareElement& e) const {
    const TensorSquareElement value = at ? at_lambda(e, *at) : e;
    if (json) {
      std::cout << to_json(value).dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
  }
  void coefficient(const Coefficient& c) const {
    const Coefficient value = at ? Coefficient(c.eval(*at)) : c;
    if (json) {
      std::cout << to_json(value).dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
  }
};

// Commands that multiply or apply operators need operands without a scalar
// term; surface the restriction as a usage error rather than an internal one.
TensorElement parse_lambda_operand(const Context& ctx,
                                   const std::string& text) {
  const TensorElement e = parse_element(ctx, text);
  if (!e.coeff_of(TensorWord::empty()).is_zero()) {
    throw std::invalid_argument(
        "the expression '" + text +
        "' has a scalar term; this command needs elements of the "
        "length >= 1 word space");
  }
  return e.as_lambda();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symbolic calculator for the word algebra with the shuffle-type "
      "product, the diamond product, the right-shift operator, and the "
      "cocycle coalgebra structure over Q[L]"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--vars", g.vars, "number of polynomial generators x1..xN")
      ->envname("TDSHUFFLE_VARS")
      ->check(CLI::Range(std::size_t{1}, std::size_t{26}))
      ->capture_default_str();
  app.add_option("--lambda", g.lambda,
                 "'symbolic' or a rational; a rational is substituted for L "
                 "in element and coefficient output")
      ->capture_default_str();
  app.add_option("--output", g.output, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string expr_a, expr_b;
  unsigned bound = 4;
  SuiteOptions laws_opt;

  CLI::App* shuffle_cmd =
      app.add_subcommand("shuffle", "shuffle product of two elements");
  shuffle_cmd->add_option("a", expr_a, "left operand")->required();
  shuffle_cmd->add_option("b", expr_b, "right operand")->required();

  CLI::App* diamond_cmd =
      app.add_subcommand("diamond", "diamond product of two elements");
  diamond_cmd->add_option("a", expr_a, "left operand")->required();
  diamond_cmd->add_option("b", expr_b, "right operand")->required();

  CLI::App* op_cmd =
      app.add_subcommand("op", "apply the right-shift operator P");
  op_cmd->add_option("a", expr_a, "operand")->required();

  CLI::App* star_cmd = app.add_subcommand(
      "star", "weight-L double product x<>P(y) + P(x)<>y + L*(x<>y) - "
              "x<>P([1])<>y");
  star_cmd->add_option("a", expr_a, "left operand")->required();
  star_cmd->add_option("b", expr_b, "right operand")->required();

  CLI::App* coprod_cmd = app.add_subcommand("coprod", "cocycle coproduct");
  coprod_cmd->add_option("a", expr_a, "operand")->required();

  CLI::App* counit_cmd = app.add_subcommand("counit", "counit");
  counit_cmd->add_option("a", expr_a, "operand")->required();

  CLI::App* antipode_cmd =
      app.add_subcommand("antipode", "right antipode S with (id * S) = e");
  antipode_cmd->add_option("a", expr_a, "operand")->required();

  CLI::App* hopf_cmd = app.add_subcommand(
      "hopfcheck", "exhaustive antipode, filtration, and coproduct-shape "
                   "checks over all basis words up to a degree bound");
  hopf_cmd->add_option("--bound", bound, "degree bound")
      ->capture_default_str();

  CLI::App* laws_cmd = app.add_subcommand(
      "laws", "seeded randomized and exhaustive law suites");
  laws_cmd->add_option("--suite", laws_opt.suite, "suite name or 'all'")
      ->capture_default_str();
  laws_cmd->add_option("--seed", laws_opt.seed, "random seed")
      ->capture_default_str();
  laws_cmd->add_option("--trials", laws_opt.trials,
                       "random samples per randomized suite")
      ->capture_default_str();
  laws_cmd->add_option("--max-degree", laws_opt.max_degree,
                       "degree budget for random words")
      ->capture_default_str();
  laws_cmd->add_option("--max-length", laws_opt.max_length,
                       "length cap for random words")
      ->capture_default_str();

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "parse and normalize an expression");
  eval_cmd->add_option("a", expr_a, "expression")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Printer printer{g.output == "json", lambda_point(g.lambda)};
    const Context ctx = Context::polynomial(g.vars);

    if (shuffle_cmd->parsed()) {
      printer.element(shuffle(ctx, parse_element(ctx, expr_a).as_plus(),
                              parse_element(ctx, expr_b).as_plus()));
    } else if (diamond_cmd->parsed()) {
      printer.element(diamond(ctx, parse_lambda_operand(ctx, expr_a),
                              parse_lambda_operand(ctx, expr_b)));
    } else if (op_cmd->parsed()) {
      printer.element(right_shift(ctx, parse_lambda_operand(ctx, expr_a)));
    } else if (star_cmd->parsed()) {
      printer.element(star_lambda(ctx, parse_lambda_operand(ctx, expr_a),
                                  parse_lambda_operand(ctx, expr_b)));
    } else if (coprod_cmd->parsed()) {
      printer.square(coproduct(ctx, parse_lambda_operand(ctx, expr_a)));
    } else if (counit_cmd->parsed()) {
      printer.coefficient(counit(ctx, parse_lambda_operand(ctx, expr_a)));
    } else if (antipode_cmd->parsed()) {
      printer.element(antipode(ctx, parse_lambda_operand(ctx, expr_a)));
    } else if (hopf_cmd->parsed()) {
      const HopfReport report = hopf_check(ctx, bound);
      if (g.output == "json") {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        std::cout << report.str();
      }
      return report.all_hold() ? kExitOk : kExitViolation;
    } else if (laws_cmd->parsed()) {
      laws_opt.vars = g.vars;
      const SuiteResult result = run_laws(laws_opt);
      if (g.output == "json") {
        std::cout << to_json(result).dump(2) << "\n";
      } else {
        std::cout << result.str();
      }
      return result.ok() ? kExitOk : kExitViolation;
    } else if (eval_cmd->parsed()) {
      printer.element(parse_element(ctx, expr_a));
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}
