#pragma once

#include <random>

#include "tagnarmax/gen/enumerate.hpp"
#include "tagnarmax/narmax/algorithm.hpp"

namespace tagnarmax::gen {

struct SampleConfig {
  GenBounds bounds;
  std::uint64_t seed = 0;
  narmax::GrammarPreset preset = narmax::GrammarPreset::narmax;
};

inline bool within_bounds(const model::NarmaxModel& m, const GenBounds& b) {
  if (m.terms.size() > b.max_terms) return false;
  for (const auto& t : m.terms) {
    for (const auto& [key, exp] : t.factors) {
      if (exp > b.max_exponent) return false;
      if (key.delay > b.max_delay[key.signal]) return false;
      if (b.mode == model::ModelMode::strict && key.signal == model::Signal::noise && key.delay == 0) return false;
    }
  }
  return true;
}

/// Grows random derivations one adjunction at a time. The number of
/// adjunctions is drawn uniformly from [0, max_adjunctions]; an adjunction is
/// kept only if the resulting model stays within bounds, and growth stops
/// early when no admissible adjunction is left.
class DerivationSampler {
 public:
  DerivationSampler(const Grammar& g, GenBounds bounds, std::uint64_t seed)
      : g_(g), bounds_(bounds), rng_(seed) {
    for (const auto& et : g_.initials)
      if (et.root_label().is_nonterminal() && et.root_label().name() == g_.start) roots_.push_back(et.name);
    std::sort(roots_.begin(), roots_.end());
    if (roots_.empty()) throw Error(ErrorKind::inapplicable_operation, "grammar has no initial tree for its start symbol");
  }

  /// Next derivation together with its (canonical) model.
  std::pair<DerivationTree, model::NarmaxModel> next() {
    DerivationTree d{roots_[pick(roots_.size())], {}};
    model::NarmaxModel m = to_model(d).value_or(model::NarmaxModel{{}, bounds_.mode});
    const std::size_t target = std::uniform_int_distribution<std::size_t>(0, bounds_.max_adjunctions)(rng_);
    for (std::size_t step = 0; step < target; ++step) {
      auto options = open_options(d);
      std::shuffle(options.begin(), options.end(), rng_);
      bool grown = false;
      for (const auto& opt : options) {
        DerivationTree& node = at(d, opt.path);
        node.edges.push_back({Operation::adjunction, opt.address, DerivationTree{opt.tree, {}}});
        auto candidate = to_model(d);
        if (candidate && within_bounds(*candidate, bounds_)) {
          std::stable_sort(node.edges.begin(), node.edges.end(),
                           [](const auto& a, const auto& b) { return a.address < b.address; });
          m = std::move(*candidate);
          grown = true;
          break;
        }
        node.edges.pop_back();
      }
      if (!grown) break;
    }
    return {std::move(d), std::move(m)};
  }

 private:
  struct Option {
    std::vector<std::size_t> path;  // edge indices from the root
    GornAddress address;
    std::string tree;
  };

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  static DerivationTree& at(DerivationTree& d, const std::vector<std::size_t>& path) {
    DerivationTree* cur = &d;
    for (auto i : path) cur = &cur->edges[i].child;
    return *cur;
  }

  const std::vector<AttachmentSlot>& slots(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) it = cache_.emplace(name, attachment_slots(*g_.find(name), g_)).first;
    return it->second;
  }

  void collect(const DerivationTree& node, std::vector<std::size_t>& path, std::vector<Option>& out) {
    for (const auto& slot : slots(node.tree)) {
      if (slot.op != Operation::adjunction) continue;
      const bool taken = std::any_of(node.edges.begin(), node.edges.end(),
                                     [&](const auto& e) { return e.address == slot.address; });
      if (taken) continue;
      for (const auto& cand : slot.candidates) out.push_back({path, slot.address, cand});
    }
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      path.push_back(i);
      collect(node.edges[i].child, path, out);
      path.pop_back();
    }
  }

  std::vector<Option> open_options(const DerivationTree& d) {
    std::vector<Option> out;
    std::vector<std::size_t> path;
    collect(d, path, out);
    return out;
  }

  std::optional<model::NarmaxModel> to_model(const DerivationTree& d) const {
    try {
      return narmax::derived_to_model(tag::derive(d, g_), bounds_.mode);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  const Grammar& g_;
  GenBounds bounds_;
  std::mt19937_64 rng_;
  std::vector<std::string> roots_;
  std::map<std::string, std::vector<AttachmentSlot>> cache_;
};

/// Seeded stream of canonical models drawn through derivations of a preset
/// grammar, so the preset's restrictions carry over to the models.
class ModelSampler {
 public:
  explicit ModelSampler(const SampleConfig& cfg)
      : grammar_(narmax::restrict(cfg.preset)), sampler_(grammar_, cfg.bounds, cfg.seed) {}

  ModelSampler(const ModelSampler&) = delete;
  ModelSampler& operator=(const ModelSampler&) = delete;

  model::NarmaxModel next() { return sampler_.next().second; }
  std::pair<DerivationTree, model::NarmaxModel> next_with_derivation() { return sampler_.next(); }

 private:
  Grammar grammar_;
  DerivationSampler sampler_;
};

inline model::NarmaxModel sample_model(const SampleConfig& cfg) { return ModelSampler(cfg).next(); }

}  // namespace tagnarmax::gen
