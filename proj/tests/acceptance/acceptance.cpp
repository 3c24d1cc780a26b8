// Acceptance run: one line per criterion with its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "test_support.hpp"

using namespace tagnarmax;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

template <class Fn>
void criterion(int number, const char* name, double budget_s, Fn&& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(secs < budget_s, "over time budget");
  if (!o.ok) ++failures;
  std::printf("[%s] %d. %s (%.3f s, limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", number, name, secs, budget_s,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
}

std::string yield_text(const tag::SyntacticTree& t) { return narmax::join_tokens(tag::yield_of(t)); }

bool agree(double a, double b, double rel) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

int main() {
  criterion(1, "linguistic fixture yields", 1.0, [](Outcome& o) {
    const auto g = testsupport::linguistic_grammar();
    o.check(tag::validate_grammar(g).empty(), "grammar does not validate");
    o.check(yield_text(tag::derive(testsupport::man_saw_mary(), g)) == "a man saw mary", "plain sentence");
    o.check(yield_text(tag::derive(testsupport::yesterday_man_saw_mary(), g)) == "yesterday a man saw mary",
            "sentence with adverb");
  });

  criterion(2, "example ARX/NARX/NARMAX models round-trip", 1.0, [](Outcome& o) {
    for (const char* text : {testsupport::kArxExample, testsupport::kNarxExample, testsupport::kNarmaxExample}) {
      const auto m = model::parse_model_text(text);
      o.check(narmax::roundtrip_check(m), text);
      const auto back = narmax::derived_to_model(
          tag::derive(narmax::model_to_derivation(model::canonicalize(m)), narmax::gn().grammar));
      o.check(model::structurally_equal(back, m), text);
    }
  });

  criterion(3, "forward closure over all derivations with <= 6 adjunctions", 60.0, [](Outcome& o) {
    const auto& g = narmax::gn().grammar;
    std::size_t count = 0;
    gen::for_each_derivation(g, 6, [&](const tag::DerivationTree& d) {
      ++count;
      const auto t = tag::derive(d, g);
      o.check(tag::is_saturated(t), "unsaturated derived tree " + tag::format_derivation(d));
      const auto m = narmax::derived_to_model(t);
      model::check_model(m);
      for (const auto& term : m.terms)
        for (const auto& [key, exp] : term.factors)
          o.check(exp >= 1 && (key.signal != model::Signal::output || key.delay >= 1),
                  "invariant broken in " + model::format_model_text(m));
      o.check(model::canonicalize(m) == m, "non-canonical model");
    });
    o.check(count > 0 && count <= 100000, "derivation count " + std::to_string(count));
    std::printf("    %zu derivations\n", count);
  });

  criterion(4, "backward completeness on 200 seeded models", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
      testsupport::ModelGenBounds b;
      b.mode = i % 2 ? model::ModelMode::strict : model::ModelMode::extended;
      const auto m = testsupport::random_model(rng, b);
      o.check(narmax::roundtrip_check(m), model::format_model_text(m));
    }
  });

  criterion(5, "preset enumerations to 5 adjunctions stay in class", 60.0, [](Outcome& o) {
    const std::pair<narmax::GrammarPreset, model::ModelClass> cases[] = {
        {narmax::GrammarPreset::arx, model::ModelClass::arx},
        {narmax::GrammarPreset::narx, model::ModelClass::narx},
        {narmax::GrammarPreset::fir, model::ModelClass::fir},
        {narmax::GrammarPreset::volterra, model::ModelClass::volterra},
    };
    for (const auto& [preset, cls] : cases) {
      const auto g = narmax::restrict(preset);
      gen::for_each_derivation(g, 5, [&](const tag::DerivationTree& d) {
        const auto m = narmax::derived_to_model(tag::derive(d, g));
        o.check(model::classify(m).contains(cls),
                model::format_model_text(m) + " outside " + std::string(model::class_name(cls)));
      });
    }
  });

  criterion(6, "operations match the set definitions on 1000 cases", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(99);
    int subs = 0, adjs = 0;
    while (subs + adjs < 1000) {
      const auto gamma = testsupport::random_tree(rng, 14, "A");
      const auto verts = gamma.vertices();
      const tag::NodeId v = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];
      const auto& l = gamma.label(v);
      const auto host = testsupport::sets_of(gamma);
      if (l.substitution_marker()) {
        const auto incoming = testsupport::random_tree(rng, 8, l.name());
        const auto expected =
            testsupport::substitution_sets(host, v, testsupport::sets_of(incoming, gamma.next_id()));
        const auto got = testsupport::sets_of(tag::substitute(gamma, v, incoming));
        o.check(got.vertices == expected.vertices && got.edges == expected.edges && got.root == expected.root,
                "substitution mismatch");
        ++subs;
      } else if (!gamma.is_leaf(v)) {
        const auto incoming = testsupport::random_auxiliary(rng, 8, l.name());
        const auto expected = testsupport::adjunction_sets(host, v, testsupport::sets_of(incoming, gamma.next_id()),
                                                           *incoming.foot() + gamma.next_id());
        const auto got = testsupport::sets_of(tag::adjoin(gamma, v, incoming));
        o.check(got.vertices == expected.vertices && got.edges == expected.edges && got.root == expected.root,
                "adjunction mismatch");
        ++adjs;
      }
    }
    o.check(subs > 100 && adjs > 100, "unbalanced case mix");
    std::printf("    %d substitutions, %d adjunctions\n", subs, adjs);
  });

  criterion(7, "simulation agrees after round-trip on 100 models", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> input(-0.5, 0.5), noise(-0.05, 0.05);
    std::size_t finite = 0;
    for (int i = 0; i < 100; ++i) {
      const auto m = testsupport::random_model(rng, {});
      const auto canonical = model::canonicalize(m);
      const auto back = narmax::derived_to_model(
          tag::derive(narmax::model_to_derivation(canonical), narmax::gn().grammar));
      std::vector<double> u(100), xi(100);
      for (auto& x : u) x = input(rng);
      for (auto& x : xi) x = noise(rng);
      const auto y0 = model::simulate(m, u, xi);
      const auto y1 = model::simulate(back, model::attached_coefficients(canonical), u, xi);
      for (std::size_t k = 0; k < y0.size(); ++k) o.check(agree(y0[k], y1[k], 1e-9), model::format_model_text(m));
      finite += std::all_of(y0.begin(), y0.end(), [](double v) { return std::isfinite(v); });
    }
    o.check(finite == 100, "non-finite trajectory");
  });

  criterion(8, "sibling application order is irrelevant", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(5);
    const auto& g = narmax::gn().grammar;
    const char* roots[] = {"beta1", "beta2", "beta3"};
    for (int i = 0; i < 100; ++i) {
      auto d = testsupport::random_gn_fragment(rng, roots[i % 3], 3, true);
      o.check(d.edges.size() >= 3, "fewer than three siblings");
      auto by_address = [](const tag::DerivationEdge& a, const tag::DerivationEdge& b) { return a.address < b.address; };
      std::sort(d.edges.begin(), d.edges.end(), by_address);
      const auto reference = tag::derive_fragment(d, g);
      do {
        o.check(tag::structurally_equal(tag::derive_fragment(d, g), reference), tag::format_derivation(d));
      } while (std::next_permutation(d.edges.begin(), d.edges.end(), by_address));
    }
  });

  criterion(9, "NBJ grammar and part separation to 3 adjunctions", 10.0, [](Outcome& o) {
    const auto& cat = narmax::gnbj();
    o.check(tag::validate_grammar(cat.grammar).empty(), "grammar does not validate");
    const auto base = narmax::nbj_derived_to_model(tag::derive(tag::parse_derivation("alpha1"), cat.grammar));
    o.check(base.process.empty() && base.noise.empty(), "base case is not yhat = 0, v = xi");
    const auto one = narmax::nbj_derived_to_model(
        tag::derive(tag::parse_derivation("alpha1[adj@1 -> betaf2]"), cat.grammar));
    o.check(model::format_nbj_text(one) == "yhat = c1*yhat[-1]; v = xi", "single feedback term");
    std::size_t count = 0;
    gen::for_each_derivation(cat.grammar, 3, [&](const tag::DerivationTree& d) {
      ++count;
      const auto tokens = tag::yield_of(tag::derive(d, cat.grammar));
      const auto comma = std::find(tokens.begin(), tokens.end(), ",");
      o.check(std::count(tokens.begin(), tokens.end(), ",") == 1, "comma count");
      for (auto it = tokens.begin(); it != comma; ++it) o.check(*it != "ξ" && *it != "v", "noise signal in f");
      for (auto it = comma; it != tokens.end(); ++it) o.check(*it != "ŷ", "process feedback in g");
      model::check_nbj(narmax::nbj_yield_to_model(tokens));
    });
    std::printf("    %zu derivations\n", count);
  });

  std::printf("%s: %d failing\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
