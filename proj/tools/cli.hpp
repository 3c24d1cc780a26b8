#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error (diagnostic
// on the error stream), 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tagnarmax/tagnarmax.hpp"

namespace tagnarmax::cli {

namespace detail {

inline std::string slurp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::dangling_reference, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

// A named file holds one value; standard input is a newline-separated batch.
inline std::vector<std::string> read_inputs(const std::string& path, std::istream& in) {
  if (!path.empty() && path != "-") return {slurp_file(path)};
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!blank(line)) out.push_back(line);
  return out;
}

inline std::vector<double> read_numbers(const std::string& path) {
  std::istringstream ss(slurp_file(path));
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::syntax_error, "'" + tok + "' in " + path + " is not a number");
    out.push_back(v);
  }
  return out;
}

inline model::ModelMode mode_of(bool strict) { return strict ? model::ModelMode::strict : model::ModelMode::extended; }

inline tag::Grammar grammar_for(const std::string& preset) {
  if (preset == "nbj") return narmax::gnbj().grammar;
  const auto p = narmax::parse_preset(preset);
  if (!p) throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
  return narmax::restrict(*p);
}

// Model text, or a derivation over G_N as printed by `enumerate`.
inline model::NarmaxModel model_from_line(const std::string& line, model::ModelMode mode) {
  try {
    return model::canonicalize(model::parse_model_text(line, mode));
  } catch (const SyntaxError&) {
    const auto d = tag::parse_derivation(line);
    return narmax::derived_to_model(tag::derive(d, narmax::gn().grammar), mode);
  }
}

inline bool looks_like_tree(const std::string& text) { return text.find('(') != std::string::npos; }

inline const std::vector<std::string> kPresets{"narmax", "arx", "narx", "fir", "volterra"};

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree adjoining grammars for polynomial NARMAX model structures", "tagnarmax"};
  app.require_subcommand(1);

  std::string preset = "narmax", file, grammar_file, model_text, coeffs_text, u_file, xi_file;
  bool strict = false, nbj = false, all = false, models_only = false, show_derivations = false;
  std::size_t max_ops = 3, count = 1, samples = 0;
  std::uint64_t seed = 0, noise_seed = 0;
  double noise_std = 1.0;
  gen::GenBounds bounds;
  std::uint32_t max_delay = 3;

  auto* show = app.add_subcommand("grammar-show", "Print a preset grammar in grammar-file format");
  show->add_option("--preset", preset, "narmax, arx, narx, fir, volterra or nbj");

  auto* parse = app.add_subcommand("parse", "Model text -> derivation tree");
  parse->add_option("model", model_text, "model text")->required();
  parse->add_flag("--strict", strict, "strict mode (no xi[0] inside terms)");
  parse->add_flag("--nbj", nbj, "input is an NBJ model 'yhat = ...; v = ... + xi'");

  auto* derive = app.add_subcommand("derive", "Derivation tree -> derived tree");
  derive->add_option("file", file, "derivation file (default: stdin batch)");
  derive->add_option("--preset", preset, "grammar preset");
  derive->add_option("--grammar", grammar_file, "grammar file (overrides --preset)");

  auto* yield = app.add_subcommand("yield", "Derived tree -> yield tokens");
  yield->add_option("file", file, "tree file (default: stdin batch)");

  auto* to_model = app.add_subcommand("to-model", "Derived tree or yield -> model text");
  to_model->add_option("file", file, "tree or yield file (default: stdin batch)");
  to_model->add_flag("--nbj", nbj, "read an NBJ tree");
  to_model->add_flag("--strict", strict, "strict mode");

  auto* roundtrip = app.add_subcommand("roundtrip", "Model -> derivation -> derived tree -> model");
  roundtrip->add_option("model", model_text, "model text")->required();
  roundtrip->add_flag("--strict", strict, "strict mode");

  auto* simulate = app.add_subcommand("simulate", "Simulate a model with zero initial conditions");
  simulate->add_option("model", model_text, "model text")->required();
  simulate->add_option("--coeffs", coeffs_text, "comma-separated coefficients, one per written term");
  simulate->add_option("--u", u_file, "input samples file");
  simulate->add_option("--xi", xi_file, "noise samples file");
  auto* noise_seed_opt = simulate->add_option("--noise-seed", noise_seed, "seed for Gaussian noise");
  simulate->add_option("--noise-std", noise_std, "noise standard deviation")->needs(noise_seed_opt);
  simulate->add_option("--samples", samples, "number of samples when no --u file is given");
  simulate->add_flag("--strict", strict, "strict mode");

  auto* classify = app.add_subcommand("classify", "Model classes of a model");
  classify->add_option("model", model_text, "model text");
  classify->add_flag("--all", all, "classify every stdin line (model text or derivation)");
  classify->add_flag("--strict", strict, "strict mode");

  auto* enumerate = app.add_subcommand("enumerate", "All derivations up to a number of adjunctions");
  enumerate->add_option("--preset", preset, "grammar preset");
  enumerate->add_option("--max", max_ops, "maximum number of operations");
  enumerate->add_flag("--models", models_only, "print model text instead of derivations");

  auto* sample = app.add_subcommand("sample", "Seeded random models from a preset");
  sample->add_option("--preset", preset, "grammar preset")->check(CLI::IsMember(detail::kPresets));
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--count", count, "number of models");
  sample->add_option("--max-terms", bounds.max_terms, "maximum number of terms");
  sample->add_option("--max-delay", max_delay, "maximum delay of any factor");
  sample->add_option("--max-exponent", bounds.max_exponent, "maximum exponent");
  sample->add_option("--max-adjunctions", bounds.max_adjunctions, "maximum number of adjunctions");
  sample->add_flag("--strict", strict, "strict mode");
  sample->add_flag("--derivations", show_derivations, "also print the derivation of each model");

  auto* validate = app.add_subcommand("validate", "Check a grammar file");
  validate->add_option("file", file, "grammar file")->required();

  std::reverse(args.begin(), args.end());  // CLI11 consumes arguments from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const auto mode = detail::mode_of(strict);
  try {
    if (*show) {
      out << tag::format_grammar(detail::grammar_for(preset));
    } else if (*parse) {
      if (nbj) {
        out << tag::format_derivation(narmax::nbj_model_to_derivation(model::parse_nbj_text(model_text, mode))) << '\n';
      } else {
        const auto m = model::canonicalize(model::parse_model_text(model_text, mode));
        out << tag::format_derivation(narmax::model_to_derivation(m)) << '\n';
      }
    } else if (*derive) {
      const tag::Grammar g = grammar_file.empty() ? detail::grammar_for(preset)
                                                  : tag::parse_grammar(detail::slurp_file(grammar_file));
      for (const auto& text : detail::read_inputs(file, in))
        out << tag::format_tree(tag::derive(tag::parse_derivation(text), g)) << '\n';
    } else if (*yield) {
      for (const auto& text : detail::read_inputs(file, in))
        out << narmax::join_tokens(tag::yield_of(tag::parse_tree(text))) << '\n';
    } else if (*to_model) {
      for (const auto& text : detail::read_inputs(file, in)) {
        const bool tree = detail::looks_like_tree(text);
        if (nbj) {
          const auto m = tree ? narmax::nbj_derived_to_model(tag::parse_tree(text), mode)
                              : narmax::nbj_yield_to_model(narmax::split_tokens(text), mode);
          out << model::format_nbj_text(m) << '\n';
        } else {
          const auto m = tree ? narmax::derived_to_model(tag::parse_tree(text), mode)
                              : narmax::yield_to_model(narmax::split_tokens(text), mode);
          out << model::format_model_text(m) << '\n';
        }
      }
    } else if (*roundtrip) {
      const auto m = model::canonicalize(model::parse_model_text(model_text, mode));
      if (!narmax::roundtrip_check(m)) {
        out << "FAIL\n";
        return 1;
      }
      out << "OK\n" << tag::format_derivation(narmax::model_to_derivation(m)) << '\n';
    } else if (*simulate) {
      const auto m = model::parse_model_text(model_text, mode);
      std::vector<double> coeffs;
      if (coeffs_text.empty()) {
        coeffs = model::attached_coefficients(m);
      } else {
        std::string t = coeffs_text;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream ss(t);
        std::string tok;
        while (ss >> tok) {
          double v = 0;
          const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
          if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw CLI::ValidationError("--coeffs", "'" + tok + "' is not a number");
          coeffs.push_back(v);
        }
      }
      std::vector<double> u;
      if (!u_file.empty()) {
        u = detail::read_numbers(u_file);
      } else if (samples > 0) {
        u.assign(samples, 0.0);
      } else {
        throw CLI::ValidationError("simulate", "give --u or --samples");
      }
      std::vector<double> xi;
      if (!xi_file.empty()) {
        xi = detail::read_numbers(xi_file);
      } else if (noise_seed_opt->count() > 0) {
        err << "noise-seed=" << noise_seed << " noise-std=" << model::text_detail::format_real(noise_std) << '\n';
        std::mt19937_64 rng(noise_seed);
        std::normal_distribution<double> normal(0.0, noise_std);
        xi.resize(u.size());
        for (auto& x : xi) x = normal(rng);
      } else {
        xi.assign(u.size(), 0.0);
      }
      for (double y : model::simulate(m, coeffs, u, xi)) out << model::text_detail::format_real(y) << '\n';
    } else if (*classify) {
      std::vector<std::string> lines;
      if (all) {
        lines = detail::read_inputs("", in);
      } else if (!model_text.empty()) {
        lines.push_back(model_text);
      } else {
        throw CLI::ValidationError("classify", "give a model or --all");
      }
      for (const auto& line : lines) {
        const auto m = detail::model_from_line(line, mode);
        if (all) out << model::format_model_text(m) << '\t';
        out << model::format_classes(model::classify(m)) << '\n';
      }
    } else if (*enumerate) {
      const tag::Grammar g = detail::grammar_for(preset);
      gen::for_each_derivation(g, max_ops, [&](const tag::DerivationTree& d) {
        if (models_only) {
          out << model::format_model_text(narmax::derived_to_model(tag::derive(d, g))) << '\n';
        } else {
          out << tag::format_derivation(d) << '\n';
        }
      });
    } else if (*sample) {
      bounds.max_delay = {max_delay, max_delay, max_delay};
      bounds.mode = mode;
      gen::SampleConfig cfg{bounds, seed, *narmax::parse_preset(preset)};
      gen::ModelSampler sampler(cfg);
      for (std::size_t i = 0; i < count; ++i) {
        auto [d, m] = sampler.next_with_derivation();
        out << model::format_model_text(m);
        if (show_derivations) out << '\t' << tag::format_derivation(d);
        out << '\n';
      }
    } else if (*validate) {
      const auto diags = tag::validate_grammar(tag::parse_grammar(detail::slurp_file(file)));
      for (const auto& d : diags) out << d.to_string() << '\n';
      if (!diags.empty()) return 1;
      out << "OK\n";
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tagnarmax::cli
