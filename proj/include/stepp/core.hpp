#pragma once

#include <map>
#include <string>
#include <vector>

namespace stepp::core {

using ActorId = std::string;

/// Which force a coefficient exerts on a covariate channel. Attraction pulls
/// the ego toward the neighbor; repulsion pulls toward the neighbor's
/// reflection through the ego, which pushes away from the neighbor itself.
enum class ForceMode { attraction, repulsion };

struct ModelConfig {
  int d = 2;  ///< social-space dimension
  int q = 0;  ///< number of discrete covariates
  /// Declared value set per covariate; covariate data are stored as indices
  /// into these lists so the marginal enumeration has a fixed universe.
  std::vector<std::vector<std::string>> supports;
  int k = 5;      ///< neighbor-set size
  double c = 1.0; ///< atomic-weight threshold, in (0, 1]
  std::vector<ForceMode> homophily_mode;    ///< per covariate
  std::vector<ForceMode> heterophily_mode;  ///< per covariate

  /// Throws ConfigError when internally inconsistent (sizes, k, c, supports).
  void validate() const;
};

/// Exogenous migration family: per-actor Bernoulli exits, Poisson entries.
struct MigrationParams {
  double emigration_prob = 0.0;
  double immigration_rate = 0.0;
  double immigrant_position_spread = 1.0;
  /// Per-covariate pmf over the declared support, used to draw entrant
  /// covariates. Empty means uniform.
  std::vector<std::vector<double>> immigrant_covariate_probs;

  void validate(const ModelConfig& cfg) const;
};

struct ParamVector {
  double delta0 = 0.0;  ///< basic drift
  double delta1 = 0.0;  ///< atomic drift
  std::vector<double> rho;     ///< persistence probability per covariate
  std::vector<double> homo;    ///< homophilous coefficient per covariate
  std::vector<double> hetero;  ///< heterophilous coefficient per covariate
  MigrationParams migration;

  void validate(const ModelConfig& cfg) const;
};

/// One time slice: the actors present, their positions and covariate rows.
/// Covariate values are indices into ModelConfig::supports.
struct WaveState {
  int t = 0;
  std::vector<ActorId> actors;  ///< sorted, unique
  std::map<ActorId, std::vector<double>> positions;
  std::map<ActorId, std::vector<int>> covariates;

  bool has_actor(const ActorId& id) const { return positions.count(id) != 0; }
};

struct Panel {
  std::vector<WaveState> waves;
  ModelConfig config;
};

struct Violation {
  int wave_index;     ///< -1 when panel-level
  ActorId actor;      ///< empty when not actor-specific
  std::string rule;   ///< stable identifier, e.g. "orphan_position"
  std::string message;
};

/// Checks every WaveState/Panel invariant; returns one entry per breach.
/// Violations are data, not failures: an empty result means the panel is
/// well formed. Idempotent and side-effect free.
std::vector<Violation> validate_panel(const Panel& panel);

}  // namespace stepp::core
