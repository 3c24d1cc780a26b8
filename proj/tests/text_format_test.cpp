#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace tagnarmax;
using namespace tagnarmax::tag;

TEST(TreeText, CanonicalRoundTrip) {
  const std::string text = "expr0(expr1(par(c) op(×) expr2(u)) op(+) expr0★)";
  const auto t = parse_tree(text);
  EXPECT_EQ(format_tree(t), text);
  EXPECT_EQ(t.size(), 11u);
  EXPECT_TRUE(t.label(*t.foot()).foot_marker());
  EXPECT_EQ(format_tree(parse_tree("  S ( NP↓   VP( v ) ) ")), "S(NP↓ VP(v))");
}

TEST(TreeText, LeafKinds) {
  const auto t = parse_tree("S(A() b ε C↓)");
  const auto kids = t.children(t.root());
  ASSERT_EQ(kids.size(), 4u);
  EXPECT_TRUE(t.label(kids[0]).is_nonterminal());
  EXPECT_TRUE(t.label(kids[1]).is_terminal());
  EXPECT_TRUE(t.label(kids[2]).is_epsilon());
  EXPECT_TRUE(t.label(kids[3]).substitution_marker());
  EXPECT_EQ(format_tree(t), "S(A() b ε C↓)");
}

TEST(TreeText, QuotesCollidingTerminals) {
  SyntacticTree t(NodeLabel::nonterminal("S"));
  t.add_child(t.root(), NodeLabel::terminal("a★"));
  t.add_child(t.root(), NodeLabel::terminal("x y"));
  t.add_child(t.root(), NodeLabel::terminal("("));
  const auto text = format_tree(t);
  EXPECT_EQ(text, "S(\"a★\" \"x y\" \"(\")");
  EXPECT_TRUE(structurally_equal(parse_tree(text), t));
}

TEST(TreeText, SyntaxErrorsCarryPositions) {
  try {
    parse_tree("S(a b");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::syntax_error);
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_tree(""), SyntaxError);
  EXPECT_THROW(parse_tree("S(a) extra"), SyntaxError);
  EXPECT_THROW(parse_tree("S↓(a)"), Error);
}

TEST(TreeText, RandomTreesRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto t = i % 2 ? testsupport::random_tree(rng, 15, "A") : testsupport::random_auxiliary(rng, 15, "B");
    const auto text = format_tree(t);
    const auto back = parse_tree(text);
    EXPECT_TRUE(structurally_equal(back, t)) << text;
    EXPECT_EQ(format_tree(back), text);
  }
}

TEST(DerivationText, RoundTrip) {
  const std::string text = "alpha1[sub@1 -> alpha3[sub@1 -> alpha5, sub@2 -> alpha6], sub@2 -> alpha4]";
  const auto d = parse_derivation(text);
  EXPECT_EQ(d.tree, "alpha1");
  ASSERT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(d.edges[0].op, Operation::substitution);
  EXPECT_EQ(d.edges[0].address, GornAddress{1});
  EXPECT_EQ(d.operation_count(), 4u);
  EXPECT_EQ(format_derivation(d), text);
  EXPECT_EQ(format_derivation(parse_derivation("beta1 [ adj @ 0 -> beta7 ]")), "beta1[adj@0 -> beta7]");
  EXPECT_THROW(parse_derivation("alpha1[mov@1 -> x]"), SyntaxError);
  EXPECT_THROW(parse_derivation("alpha1[sub@1 -> x"), SyntaxError);
}

TEST(GrammarText, LinguisticFileRoundTrip) {
  const auto g = testsupport::linguistic_grammar();
  EXPECT_EQ(g.start, "sentence");
  EXPECT_EQ(g.initials.size(), 8u);
  EXPECT_EQ(g.auxiliaries.size(), 1u);
  const auto text = format_grammar(g);
  const auto back = parse_grammar(text);
  EXPECT_EQ(format_grammar(back), text);
  EXPECT_EQ(back.nonterminals, g.nonterminals);
  EXPECT_EQ(back.terminals, g.terminals);
}

TEST(GrammarText, Errors) {
  EXPECT_THROW(parse_grammar("nonterminals: S\nterminals: a\n"), SyntaxError);
  EXPECT_THROW(parse_grammar("nonterminals: S\nstart: S\nbogus alpha = S(a)\n"), SyntaxError);
}

TEST(ModelText, ParsesExampleAsWritten) {
  const auto m = model::parse_model_text(testsupport::kNarxExample);
  ASSERT_EQ(m.terms.size(), 2u);
  EXPECT_EQ(m.terms[0].coeff_id, 1u);
  EXPECT_EQ(m.terms[0].factors.at({model::Signal::output, 1}), 2u);
  EXPECT_EQ(m.terms[1].factors.at({model::Signal::input, 0}), 1u);
  EXPECT_TRUE(model::parse_model_text("xi").terms.empty());
  EXPECT_EQ(model::format_model_text(model::parse_model_text("  c1 * u[ -2 ] ^ 3+xi ")), "c1*u[-2]^3 + xi");
}

TEST(ModelText, CoefficientValues) {
  const auto m = model::parse_model_text("c1:2.5*u[0] + c2:-0.125*y[-3] + xi");
  EXPECT_EQ(*m.terms[0].coeff_value, 2.5);
  EXPECT_EQ(*m.terms[1].coeff_value, -0.125);
  EXPECT_EQ(model::format_model_text(m), "c1:2.5*u[0] + c2:-0.125*y[-3] + xi");
}

TEST(ModelText, Errors) {
  auto kind = [](const char* text, model::ModelMode mode = model::ModelMode::extended) {
    try {
      model::parse_model_text(text, mode);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::unrepresentable;
  };
  EXPECT_EQ(kind("c1*y[0] + xi"), ErrorKind::causality_violation);
  EXPECT_EQ(kind("c1*u[2] + xi"), ErrorKind::causality_violation);
  EXPECT_EQ(kind("c1*xi[0] + xi", model::ModelMode::strict), ErrorKind::causality_violation);
  EXPECT_EQ(kind("c1*xi[0] + xi"), ErrorKind::unrepresentable);
  EXPECT_EQ(kind("c1*u[0]"), ErrorKind::syntax_error);
  EXPECT_EQ(kind("c1*w[0] + xi"), ErrorKind::syntax_error);
  EXPECT_EQ(kind("c0*u[0] + xi"), ErrorKind::syntax_error);
  EXPECT_EQ(kind("xi + xi"), ErrorKind::syntax_error);
  try {
    model::parse_model_text("c1*u[0] + c2*q[-1] + xi");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
}

TEST(ModelText, FormatParseRoundTripOnCanonicalModels) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto m = model::canonicalize(testsupport::random_model(rng, {}));
    const auto back = model::parse_model_text(model::format_model_text(m));
    EXPECT_TRUE(model::structurally_equal(back, m));
    EXPECT_EQ(model::format_model_text(back), model::format_model_text(m));
  }
}

TEST(ModelText, NbjForm) {
  const auto m = model::parse_nbj_text("yhat = c1*u[-1] + c2*yhat[-1]; v = c1*v[-2] + xi");
  ASSERT_EQ(m.process.size(), 2u);
  ASSERT_EQ(m.noise.size(), 1u);
  EXPECT_EQ(m.noise[0].factors.begin()->first, (model::FactorKey{model::Signal::output, 2}));
  EXPECT_EQ(model::format_nbj_text(m), "yhat = c1*u[-1] + c2*yhat[-1]; v = c1*v[-2] + xi");
  EXPECT_EQ(model::format_nbj_text(model::parse_nbj_text("yhat = 0; v = xi")), "yhat = 0; v = xi");
  EXPECT_THROW(model::parse_nbj_text("yhat = c1*xi[-1]; v = xi"), Error);
  EXPECT_THROW(model::parse_nbj_text("yhat = c1*yhat[0]; v = xi"), Error);
}
