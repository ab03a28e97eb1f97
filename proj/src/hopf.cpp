#include "tdshuffle/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace tdshuffle {

unsigned word_degree(const Context& ctx, const TensorWord& w) {
  if (w.is_empty()) {
    throw std::invalid_argument(
        "word degree is defined on words of length >= 1 only");
  }
  unsigned total = static_cast<unsigned>(w.length()) - 1;
  for (const auto& letter : w.letters()) {
    total += ctx.base().degree_basis(letter);
  }
  return total;
}

unsigned element_degree(const Context& ctx, const TensorElement& a) {
  unsigned best = 0;
  for (const auto& [w, c] : a.terms()) {
    best = std::max(best, word_degree(ctx, w));
  }
  return best;
}

std::vector<TensorWord> basis_words_up_to(const Context& ctx, unsigned bound) {
  std::vector<TensorWord> out;
  // Words of length m spend m - 1 degree on length alone.
  for (unsigned m = 1; m - 1 <= bound; ++m) {
    const unsigned letter_budget = bound - (m - 1);
    const std::vector<BaseMonomial> letters =
        ctx.base().basis_up_to(letter_budget);
    std::vector<BaseMonomial> current;
    auto recurse = [&](auto&& self, unsigned remaining) -> void {
      if (current.size() == m) {
        out.emplace_back(current);
        return;
      }
      for (const auto& letter : letters) {
        const unsigned d = ctx.base().degree_basis(letter);
        if (d > remaining) continue;
        current.push_back(letter);
        self(self, remaining - d);
        current.pop_back();
      }
    };
    recurse(recurse, letter_budget);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Coefficient, TensorElement> counit_split(const Context& ctx,
                                                   const TensorElement& a) {
  const Coefficient eps = counit(ctx, a);
  TensorElement kernel = a;
  kernel.add_term(ctx.unit_word(), -eps);
  return {eps, kernel};
}

TensorElement antipode_word(const Context& ctx, const TensorWord& w) {
  TensorElement out(Space::Lambda, ctx.vars());
  if (ctx.lookup_antipode(w, &out)) return out;

  const TensorWord unit = ctx.unit_word();
  const unsigned dw = word_degree(ctx, w);
  const auto [eps, kernel] = counit_split(
      ctx, TensorElement::from_word(Space::Lambda, ctx.vars(), w));
  // S fixes the unit line.
  out.add_scaled(ctx.unit_element(Space::Lambda), eps);
  if (!kernel.is_zero()) {
    const TensorSquareElement reduced = reduced_coproduct(ctx, kernel);
    for (const auto& [pair, c] : reduced.terms()) {
      if (!counit_word(ctx, pair.first).is_zero()) {
        throw InvariantViolation(
            "antipode recursion: reduced coproduct of " + w.str() +
            " has a left factor outside the counit kernel: " +
            pair.first.str());
      }
      if (word_degree(ctx, pair.second) >= dw) {
        throw InvariantViolation(
            "antipode recursion: right factor " + pair.second.str() +
            " of the reduced coproduct of " + w.str() +
            " does not drop in degree");
      }
      out.add_scaled(
          diamond(ctx,
                  TensorElement::from_word(Space::Lambda, ctx.vars(),
                                           pair.first),
                  antipode_word(ctx, pair.second)),
          -c);
    }
  }
  ctx.store_antipode(w, out);
  return out;
}

TensorElement antipode(const Context& ctx, const TensorElement& a) {
  if (a.space() != Space::Lambda) {
    throw std::invalid_argument(
        "antipode: operand must lie in the length >= 1 word space");
  }
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [w, c] : a.terms()) {
    out.add_scaled(antipode_word(ctx, w), c);
  }
  return out;
}

LinearMapTable antipode_table(const Context& ctx, unsigned bound) {
  LinearMapTable table;
  for (const auto& w : basis_words_up_to(ctx, bound)) {
    table.assign(w, antipode_word(ctx, w));
  }
  return table;
}

bool HopfReport::all_hold() const {
  return std::all_of(laws.begin(), laws.end(), [](const HopfLawResult& r) {
    return !r.asserted || r.holds;
  });
}

std::string HopfReport::str() const {
  std::ostringstream out;
  out << "hopf check: degree bound " << degree_bound << ", " << vars
      << " generator(s), " << words_enumerated << " basis words\n";
  for (const auto& law : laws) {
    if (law.asserted) {
      out << (law.holds ? "PASS" : "FAIL");
    } else {
      out << "INFO";
    }
    out << " " << law.law << ": " << law.checked << " checked, "
        << law.failures
        << (law.asserted ? " failed" : " differ from the unit-counit map");
    out << "\n";
    if (!law.first_counterexample.empty()) {
      out << "     first witness: " << law.first_counterexample << "\n";
    }
  }
  out << "result: " << (all_hold() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

HopfReport hopf_check(const Context& ctx, unsigned degree_bound,
                      const LinearMapTable* antipode_override) {
  HopfReport report;
  report.degree_bound = degree_bound;
  report.vars = ctx.vars();
  const std::vector<TensorWord> words = basis_words_up_to(ctx, degree_bound);
  report.words_enumerated = words.size();

  const LinearMapTable identity = LinearMapTable::identity();
  const LinearMapTable s_table = antipode_override
                                     ? *antipode_override
                                     : antipode_table(ctx, degree_bound);

  HopfLawResult antipode_law;
  antipode_law.law = "antipode convolution (id * S) = e";
  HopfLawResult reverse_law;
  reverse_law.law = "reverse convolution (S * id) vs e";
  reverse_law.asserted = false;
  for (const auto& w : words) {
    const TensorElement input =
        TensorElement::from_word(Space::Lambda, ctx.vars(), w);
    const TensorElement expected =
        ctx.unit_element(Space::Lambda).scaled(counit_word(ctx, w));
    const TensorElement forward = convolution(ctx, identity, s_table, input);
    ++antipode_law.checked;
    if (forward != expected) {
      antipode_law.holds = false;
      ++antipode_law.failures;
      if (antipode_law.first_counterexample.empty()) {
        antipode_law.first_counterexample = "word " + w.str() +
                                            ": (id * S) gives " +
                                            forward.str() + ", e gives " +
                                            expected.str();
      }
    }
    const TensorElement backward = convolution(ctx, s_table, identity, input);
    ++reverse_law.checked;
    if (backward != expected) {
      ++reverse_law.failures;
      if (reverse_law.first_counterexample.empty()) {
        reverse_law.first_counterexample = "word " + w.str() +
                                           ": (S * id) gives " +
                                           backward.str() + ", e gives " +
                                           expected.str();
      }
    }
  }

  HopfLawResult product_law;
  product_law.law = "product filtration deg(u <> v) <= deg(u) + deg(v)";
  for (const auto& u : words) {
    const unsigned du = word_degree(ctx, u);
    for (const auto& v : words) {
      const unsigned bound = du + word_degree(ctx, v);
      ++product_law.checked;
      bool bad = false;
      const TensorElement product = diamond_words(ctx, u, v);
      for (const auto& [t, c] : product.terms()) {
        if (word_degree(ctx, t) > bound) {
          bad = true;
          if (product_law.first_counterexample.empty()) {
            product_law.first_counterexample =
                u.str() + " <> " + v.str() + " contains " + t.str() +
                " of degree " + std::to_string(word_degree(ctx, t)) +
                " > " + std::to_string(bound);
          }
          break;
        }
      }
      if (bad) {
        product_law.holds = false;
        ++product_law.failures;
      }
    }
  }

  HopfLawResult shape_law;
  shape_law.law = "coproduct shape deg(x) + deg(y) <= deg(w)";
  for (const auto& w : words) {
    const unsigned dw = word_degree(ctx, w);
    ++shape_law.checked;
    bool bad = false;
    const TensorSquareElement dw_pairs = coproduct_word(ctx, w);
    for (const auto& [pair, c] : dw_pairs.terms()) {
      const unsigned dx = word_degree(ctx, pair.first);
      const unsigned dy = word_degree(ctx, pair.second);
      if (dx + dy > dw || (dx == 0 && dy > dw)) {
        bad = true;
        if (shape_law.first_counterexample.empty()) {
          shape_law.first_counterexample =
              "Delta(" + w.str() + ") contains " + pair.first.str() +
              " (x) " + pair.second.str() + " with degrees " +
              std::to_string(dx) + " + " + std::to_string(dy) + " > " +
              std::to_string(dw);
        }
        break;
      }
    }
    if (bad) {
      shape_law.holds = false;
      ++shape_law.failures;
    }
  }

  report.laws.push_back(std::move(antipode_law));
  report.laws.push_back(std::move(product_law));
  report.laws.push_back(std::move(shape_law));
  report.laws.push_back(std::move(reverse_law));
  return report;
}

}  // namespace tdshuffle
