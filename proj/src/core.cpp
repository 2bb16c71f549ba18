#include "stepp/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stepp/errors.hpp"

namespace stepp::core {

void ModelConfig::validate() const {
  if (d < 1) throw ConfigError("model.d must be >= 1");
  if (q < 0) throw ConfigError("model.q must be >= 0");
  if (k < 1) throw ConfigError("model.k must be >= 1");
  if (!(c > 0.0 && c <= 1.0)) throw ConfigError("model.c must lie in (0, 1]");
  if (static_cast<int>(supports.size()) != q)
    throw ConfigError("model.supports must list one value set per covariate");
  for (int m = 0; m < q; ++m) {
    if (supports[m].empty())
      throw ConfigError("model.supports[" + std::to_string(m) + "] is empty");
    std::set<std::string> uniq(supports[m].begin(), supports[m].end());
    if (uniq.size() != supports[m].size())
      throw ConfigError("model.supports[" + std::to_string(m) + "] has duplicate values");
  }
  if (static_cast<int>(homophily_mode.size()) != q)
    throw ConfigError("model.homophily_mode must have one entry per covariate");
  if (static_cast<int>(heterophily_mode.size()) != q)
    throw ConfigError("model.heterophily_mode must have one entry per covariate");
}

void MigrationParams::validate(const ModelConfig& cfg) const {
  if (!(emigration_prob >= 0.0 && emigration_prob <= 1.0))
    throw ConfigError("migration.emigration_prob must lie in [0, 1]");
  if (!(immigration_rate >= 0.0) || !std::isfinite(immigration_rate))
    throw ConfigError("migration.immigration_rate must be a finite nonnegative real");
  if (!(immigrant_position_spread >= 0.0))
    throw ConfigError("migration.immigrant_position_spread must be >= 0");
  if (!immigrant_covariate_probs.empty()) {
    if (static_cast<int>(immigrant_covariate_probs.size()) != cfg.q)
      throw ConfigError("migration.immigrant_covariate_probs must have one pmf per covariate");
    for (int m = 0; m < cfg.q; ++m) {
      const auto& pmf = immigrant_covariate_probs[m];
      if (pmf.size() != cfg.supports[m].size())
        throw ConfigError("migration.immigrant_covariate_probs[" + std::to_string(m) +
                          "] must match the support size");
      double total = 0.0;
      for (double p : pmf) {
        if (p < 0.0) throw ConfigError("immigrant covariate pmf entries must be >= 0");
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-9)
        throw ConfigError("migration.immigrant_covariate_probs[" + std::to_string(m) +
                          "] must sum to 1");
    }
  }
}

void ParamVector::validate(const ModelConfig& cfg) const {
  auto check_len = [&](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != cfg.q)
      throw ConfigError(std::string("theta.") + name + " must have one entry per covariate");
  };
  check_len(rho, "rho");
  check_len(homo, "homo");
  check_len(hetero, "hetero");
  if (!(delta0 >= 0.0) || !std::isfinite(delta0))
    throw ConfigError("theta.delta0 must be a finite nonnegative real");
  if (!(delta1 >= 0.0) || !std::isfinite(delta1))
    throw ConfigError("theta.delta1 must be a finite nonnegative real");
  for (int m = 0; m < cfg.q; ++m) {
    if (!(rho[m] >= 0.0 && rho[m] <= 1.0))
      throw ConfigError("theta.rho[" + std::to_string(m) + "] must lie in [0, 1]");
    if (!(homo[m] >= 0.0) || !std::isfinite(homo[m]))
      throw ConfigError("theta.homo[" + std::to_string(m) + "] must be >= 0");
    if (!(hetero[m] >= 0.0) || !std::isfinite(hetero[m]))
      throw ConfigError("theta.hetero[" + std::to_string(m) + "] must be >= 0");
  }
  migration.validate(cfg);
}

namespace {

void validate_wave(const Panel& panel, int w, std::vector<Violation>& out) {
  const WaveState& wave = panel.waves[w];
  const ModelConfig& cfg = panel.config;

  std::set<ActorId> actor_set(wave.actors.begin(), wave.actors.end());
  if (actor_set.size() != wave.actors.size())
    out.push_back({w, "", "duplicate_actor", "actor list contains duplicate ids"});

  for (const auto& [id, z] : wave.positions) {
    if (!actor_set.count(id))
      out.push_back({w, id, "orphan_position", "position for id not in actors"});
    if (static_cast<int>(z.size()) != cfg.d)
      out.push_back({w, id, "dimension_mismatch",
                     "position has dimension " + std::to_string(z.size()) +
                         ", configured d = " + std::to_string(cfg.d)});
    for (double v : z) {
      if (!std::isfinite(v)) {
        out.push_back({w, id, "nonfinite_position", "position has a non-finite coordinate"});
        break;
      }
    }
  }
  for (const auto& [id, x] : wave.covariates) {
    if (!actor_set.count(id))
      out.push_back({w, id, "orphan_covariates", "covariates for id not in actors"});
    if (static_cast<int>(x.size()) != cfg.q) {
      out.push_back({w, id, "covariate_count_mismatch",
                     "covariate row has " + std::to_string(x.size()) + " entries, configured q = " +
                         std::to_string(cfg.q)});
      continue;
    }
    for (int m = 0; m < cfg.q; ++m) {
      if (x[m] < 0 || x[m] >= static_cast<int>(cfg.supports[m].size()))
        out.push_back({w, id, "value_outside_support",
                       "covariate " + std::to_string(m) + " value outside declared support"});
    }
  }
  for (const ActorId& id : wave.actors) {
    if (!wave.positions.count(id))
      out.push_back({w, id, "missing_position", "actor has no position"});
    if (!wave.covariates.count(id))
      out.push_back({w, id, "missing_covariates", "actor has no covariate row"});
  }
}

}  // namespace

std::vector<Violation> validate_panel(const Panel& panel) {
  std::vector<Violation> out;
  try {
    panel.config.validate();
  } catch (const ConfigError& e) {
    out.push_back({-1, "", "invalid_config", e.what()});
    return out;
  }
  for (std::size_t w = 0; w < panel.waves.size(); ++w) {
    validate_wave(panel, static_cast<int>(w), out);
    if (w > 0 && panel.waves[w].t <= panel.waves[w - 1].t)
      out.push_back({static_cast<int>(w), "", "nonincreasing_time",
                     "wave time index must strictly increase"});
  }
  return out;
}

}  // namespace stepp::core
