#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace tagnarmax;
using namespace tagnarmax::narmax;
using tag::parse_derivation;

namespace {

model::NarmaxModel parse(const char* text, model::ModelMode mode = model::ModelMode::extended) {
  return model::parse_model_text(text, mode);
}

std::string yield_text(const tag::SyntacticTree& t) { return join_tokens(tag::yield_of(t)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::syntax_error;
}

std::set<std::string> aux_names(const tag::Grammar& g) {
  std::set<std::string> out;
  for (const auto& et : g.auxiliaries) out.insert(et.name);
  return out;
}

}  // namespace

TEST(BuildGn, ShapeAndValidation) {
  const auto cat = build_gn();
  EXPECT_TRUE(tag::validate_grammar(cat.grammar).empty());
  EXPECT_EQ(cat.grammar.initials.size(), 1u);
  EXPECT_EQ(cat.grammar.auxiliaries.size(), 7u);
  EXPECT_EQ(tag::yield_of(cat.grammar.find("alpha1")->tree), (std::vector<std::string>{"ξ"}));
  EXPECT_EQ(tag::format_tree(cat.grammar.find("beta2")->tree),
            "expr0(expr1(par(c) op(×) expr2(y q⁻¹)) op(+) expr0★)");
  EXPECT_EQ(tag::format_tree(cat.grammar.find("beta7")->tree), "expr2(expr2★ q⁻¹)");
  for (const auto& r : cat.roles) {
    const auto& t = cat.grammar.find(r.name)->tree;
    const std::string root = t.label(t.root()).name();
    switch (r.role) {
      case AuxRole::additive: EXPECT_EQ(root, "expr0"); break;
      case AuxRole::multiplicative: EXPECT_EQ(root, "expr1"); break;
      case AuxRole::delay: EXPECT_EQ(root, "expr2"); break;
    }
    EXPECT_EQ(t.label(*t.foot()).name(), root);
    if (r.role == AuxRole::additive) {
      int par = 0;
      for (auto id : t.vertices())
        if (t.label(id).name() == "par") {
          ++par;
          EXPECT_EQ(t.label(t.children(id)[0]).name(), "c");
        }
      EXPECT_EQ(par, 1);
    }
  }
}

TEST(BuildGn, GrammarFileMatches) {
  const auto file = tag::parse_grammar(testsupport::read_file("grammars/gn.tag"));
  EXPECT_EQ(tag::format_grammar(file), tag::format_grammar(build_gn().grammar));
}

TEST(Presets, AuxiliarySubsets) {
  using S = std::set<std::string>;
  EXPECT_EQ(aux_names(restrict(GrammarPreset::arx)), (S{"beta1", "beta2", "beta7"}));
  EXPECT_EQ(aux_names(restrict(GrammarPreset::narx)), (S{"beta1", "beta2", "beta4", "beta5", "beta7"}));
  EXPECT_EQ(aux_names(restrict(GrammarPreset::fir)), (S{"beta1", "beta7"}));
  EXPECT_EQ(aux_names(restrict(GrammarPreset::volterra)), (S{"beta1", "beta4", "beta7"}));
  EXPECT_EQ(aux_names(restrict(GrammarPreset::narmax)).size(), 7u);
  for (auto p : {GrammarPreset::narmax, GrammarPreset::arx, GrammarPreset::narx, GrammarPreset::fir,
                 GrammarPreset::volterra}) {
    const auto g = restrict(p);
    EXPECT_TRUE(tag::validate_grammar(g).empty());
    EXPECT_EQ(g.initials.size(), 1u);
    EXPECT_EQ(parse_preset(preset_name(p)), p);
  }
  EXPECT_FALSE(parse_preset("armax"));
}

TEST(ExampleModels, ArxDerivationAndYield) {
  const auto m = parse(testsupport::kArxExample);
  const auto d = model_to_derivation(model::canonicalize(m));
  EXPECT_EQ(tag::format_derivation(d), "alpha1[adj@0 -> beta2[adj@0 -> beta1]]");
  const auto t = tag::derive(d, gn().grammar);
  EXPECT_EQ(yield_text(t), "c × u + c × y q⁻¹ + ξ");
  EXPECT_TRUE(model::structurally_equal(derived_to_model(t), m));
  EXPECT_TRUE(roundtrip_check(m));
}

TEST(ExampleModels, NarxDerivationAndYield) {
  const auto m = parse(testsupport::kNarxExample);
  const auto t = tag::derive(model_to_derivation(model::canonicalize(m)), gn().grammar);
  EXPECT_EQ(yield_text(t), "c × u + c × y q⁻¹ × y q⁻¹ + ξ");
  const auto back = derived_to_model(t);
  EXPECT_TRUE(model::structurally_equal(back, m));
  EXPECT_EQ(model::format_model_text(back), "c1*u[0] + c2*y[-1]^2 + xi");
  EXPECT_TRUE(roundtrip_check(m));
}

TEST(ExampleModels, NarmaxDerivationUsesExpectedTrees) {
  const auto m = parse(testsupport::kNarmaxExample);
  const auto d = model_to_derivation(model::canonicalize(m));
  std::set<std::string> used;
  std::function<void(const tag::DerivationTree&)> walk = [&](const tag::DerivationTree& n) {
    used.insert(n.tree);
    for (const auto& e : n.edges) walk(e.child);
  };
  walk(d);
  for (const char* name : {"alpha1", "beta1", "beta2", "beta3", "beta5", "beta6", "beta7"}) EXPECT_TRUE(used.contains(name));
  const auto t = tag::derive(d, gn().grammar);
  EXPECT_TRUE(tag::is_saturated(t));
  EXPECT_TRUE(model::structurally_equal(derived_to_model(t), m));
  EXPECT_TRUE(roundtrip_check(m));
  EXPECT_THROW(roundtrip_check(parse(testsupport::kNarmaxExample, model::ModelMode::strict)), Error);
}

TEST(ModelToDerivation, PureNoiseAndErrors) {
  const auto d = model_to_derivation(parse("xi"));
  EXPECT_EQ(tag::format_derivation(d), "alpha1");
  EXPECT_TRUE(roundtrip_check(parse("xi")));

  model::NarmaxModel constant;
  constant.terms.push_back(model::Monomial{});
  EXPECT_EQ(kind_of([&] { model_to_derivation(constant); }), ErrorKind::unrepresentable);
  model::NarmaxModel strict_bad;
  strict_bad.mode = model::ModelMode::strict;
  strict_bad.terms.push_back(model::Monomial{});
  strict_bad.terms[0].multiply({model::Signal::noise, 0});
  EXPECT_EQ(kind_of([&] { model_to_derivation(strict_bad); }), ErrorKind::unrepresentable);
}

TEST(DerivedToModel, Errors) {
  EXPECT_EQ(model::format_model_text(derived_to_model(gn().grammar.find("alpha1")->tree)), "xi");
  EXPECT_EQ(kind_of([&] { derived_to_model(tag::parse_tree("expr0(expr1(par(c) op(×) expr2↓) op(+) expr0(ξ))")); }),
            ErrorKind::not_saturated);
  auto bad = [&](const char* tokens) {
    return kind_of([&] { yield_to_model(split_tokens(tokens)); });
  };
  EXPECT_EQ(bad("c × y + ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(bad("c × u +"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(bad("c × u"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(bad("c u + ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(bad("ξ ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(bad("c × q⁻¹ + ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(model::format_model_text(yield_to_model(split_tokens("c × u q⁻¹ q⁻¹ × ξ + c × y q⁻¹ + ξ"))),
            "c1*y[-1] + c2*u[-2]*xi[0] + xi");
}

TEST(ForwardClosure, ExhaustiveToFourAdjunctions) {
  std::size_t count = 0;
  gen::for_each_derivation(gn().grammar, 4, [&](const tag::DerivationTree& d) {
    const auto t = tag::derive(d, gn().grammar);
    ASSERT_TRUE(tag::is_saturated(t));
    const auto m = derived_to_model(t);
    EXPECT_NO_THROW(model::check_model(m));
    for (const auto& term : m.terms) {
      EXPECT_GE(term.degree(), 1u);
      for (const auto& [key, exp] : term.factors) {
        EXPECT_GE(exp, 1u);
        if (key.signal == model::Signal::output) {
          EXPECT_GE(key.delay, 1u);
        }
      }
    }
    EXPECT_EQ(model::canonicalize(m), m);
    ++count;
  });
  EXPECT_GT(count, 100u);
}

TEST(BackwardCompleteness, RandomModelsRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    testsupport::ModelGenBounds b;
    b.mode = i % 2 ? model::ModelMode::strict : model::ModelMode::extended;
    const auto m = testsupport::random_model(rng, b);
    EXPECT_TRUE(roundtrip_check(m)) << model::format_model_text(m);
  }
}

TEST(YieldTotality, GeneratedYieldsRederive) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto m = model::canonicalize(testsupport::random_model(rng, {}));
    const auto tokens = tag::yield_of(tag::derive(model_to_derivation(m), gn().grammar));
    const auto parsed = yield_to_model(tokens);
    const auto again = tag::yield_of(tag::derive(model_to_derivation(parsed), gn().grammar));
    EXPECT_TRUE(model::structurally_equal(yield_to_model(again), parsed));
  }
}

TEST(SubsetSoundness, PresetsStayInTheirClass) {
  const std::pair<GrammarPreset, model::ModelClass> cases[] = {
      {GrammarPreset::arx, model::ModelClass::arx},
      {GrammarPreset::narx, model::ModelClass::narx},
      {GrammarPreset::fir, model::ModelClass::fir},
      {GrammarPreset::volterra, model::ModelClass::volterra},
  };
  for (const auto& [preset, cls] : cases) {
    const auto g = restrict(preset);
    gen::for_each_derivation(g, 4, [&](const tag::DerivationTree& d) {
      EXPECT_TRUE(model::classify(derived_to_model(tag::derive(d, g))).contains(cls));
    });
  }
}

TEST(Nbj, GrammarValidatesAndMatchesFile) {
  const auto& cat = gnbj();
  EXPECT_TRUE(tag::validate_grammar(cat.grammar).empty());
  EXPECT_EQ(cat.grammar.initials.size(), 1u);
  const auto file = tag::parse_grammar(testsupport::read_file("grammars/gnbj.tag"));
  EXPECT_EQ(tag::format_grammar(file), tag::format_grammar(cat.grammar));
}

TEST(Nbj, BaseCase) {
  const auto t = tag::derive(parse_derivation("alpha1"), gnbj().grammar);
  EXPECT_EQ(yield_text(t), "0 , ξ");
  const auto m = nbj_derived_to_model(t);
  EXPECT_TRUE(m.process.empty());
  EXPECT_TRUE(m.noise.empty());
  EXPECT_EQ(model::format_nbj_text(m), "yhat = 0; v = xi");
}

TEST(Nbj, SingleProcessFeedbackAdjunction) {
  const auto t = tag::derive(parse_derivation("alpha1[adj@1 -> betaf2]"), gnbj().grammar);
  EXPECT_EQ(yield_text(t), "c × ŷ q⁻¹ + 0 , ξ");
  const auto m = nbj_derived_to_model(t);
  ASSERT_EQ(m.process.size(), 1u);
  EXPECT_EQ(m.process[0].factors, (model::FactorMap{{{model::Signal::output, 1}, 1}}));
  EXPECT_TRUE(m.noise.empty());
  EXPECT_EQ(model::format_nbj_text(m), "yhat = c1*yhat[-1]; v = xi");
}

TEST(Nbj, SignalInWrongPart) {
  auto kind = [](const char* tokens) {
    return kind_of([&] { nbj_yield_to_model(split_tokens(tokens)); });
  };
  EXPECT_EQ(kind("c × ξ + 0 , ξ"), ErrorKind::signal_in_wrong_part);
  EXPECT_EQ(kind("c × v q⁻¹ + 0 , ξ"), ErrorKind::signal_in_wrong_part);
  EXPECT_EQ(kind("0 , c × ŷ q⁻¹ + ξ"), ErrorKind::signal_in_wrong_part);
  EXPECT_EQ(kind("0 ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(kind("0 , , ξ"), ErrorKind::yield_not_in_language);
  EXPECT_EQ(kind("c × ŷ + 0 , ξ"), ErrorKind::yield_not_in_language);
}

TEST(Nbj, EnumerationKeepsPartsSeparate) {
  const auto& g = gnbj().grammar;
  std::size_t count = 0;
  gen::for_each_derivation(g, 3, [&](const tag::DerivationTree& d) {
    const auto t = tag::derive(d, g);
    const auto tokens = tag::yield_of(t);
    const auto comma = std::find(tokens.begin(), tokens.end(), ",");
    ASSERT_NE(comma, tokens.end());
    EXPECT_EQ(std::count(tokens.begin(), tokens.end(), ","), 1);
    for (auto it = tokens.begin(); it != comma; ++it) EXPECT_TRUE(*it != "ξ" && *it != "v");
    for (auto it = comma; it != tokens.end(); ++it) EXPECT_NE(*it, "ŷ");
    const auto m = nbj_derived_to_model(t);
    EXPECT_NO_THROW(model::check_nbj(m));
    ++count;
  });
  EXPECT_GT(count, 100u);
}

TEST(Nbj, ModelRoundTrip) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    model::NbjModel m;
    for (auto* side : {&m.process, &m.noise}) {
      const auto part = testsupport::random_model(rng, {});
      *side = part.terms;
    }
    // The process part has no noise signal.
    for (auto& t : m.process) std::erase_if(t.factors, [](const auto& kv) { return kv.first.signal == model::Signal::noise; });
    std::erase_if(m.process, [](const model::Monomial& t) { return t.factors.empty(); });
    m = model::canonicalize(m);
    const auto t = tag::derive(nbj_model_to_derivation(m), gnbj().grammar);
    EXPECT_TRUE(model::structurally_equal(nbj_derived_to_model(t), m)) << model::format_nbj_text(m);
  }
}
