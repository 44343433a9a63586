#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdpo/registry.hpp"

namespace rdpo {

/// One rollout's reward scores on its task's active dimensions, stored in
/// the subspace's canonical dimension order.  Rewards are kept sparse per
/// subspace; there is no dense n-vector with placeholder zeros.
struct RewardVector {
  SubspaceKey subspace;
  Eigen::VectorXd scores;
};

/// The G rollouts sampled for one prompt.  Group-relative normalization
/// operates on exactly this unit.
struct RolloutGroup {
  std::string prompt_id;
  std::string task_id;
  SubspaceKey subspace;
  std::vector<RewardVector> rollouts;

  int group_size() const { return static_cast<int>(rollouts.size()); }

  /// G x |S| score matrix.  Assumes the group passed validation.
  Eigen::MatrixXd score_matrix() const {
    const auto rows = static_cast<Eigen::Index>(rollouts.size());
    const auto cols = static_cast<Eigen::Index>(subspace.size());
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) m.row(i) = rollouts[i].scores.transpose();
    return m;
  }

  /// Scores of one subspace column across the group.
  Eigen::VectorXd dimension_values(std::size_t position) const {
    Eigen::VectorXd v(static_cast<Eigen::Index>(rollouts.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
      v[i] = rollouts[i].scores[static_cast<Eigen::Index>(position)];
    return v;
  }
};

/// One training step's mixed-task collection of rollout groups.
struct Batch {
  std::int64_t step = 0;
  std::vector<RolloutGroup> groups;
};

/// Per-dimension advantages for one group, same G x |S| layout as the
/// group's score matrix.
struct AdvantageGroup {
  std::string prompt_id;
  SubspaceKey subspace;
  Eigen::MatrixXd advantages;
};

/// One invariant violation found in a batch, with enough coordinates to
/// locate the offending group/rollout/dimension.
struct Violation {
  std::optional<std::size_t> group_index;
  std::optional<std::size_t> rollout_index;
  std::optional<std::size_t> dim_position;
  std::string message;
};

/// Checks every batch invariant and reports all violations found.  An empty
/// result means the batch is accepted by every downstream operation.
inline std::vector<Violation> validate_batch(const Batch& batch) {
  std::vector<Violation> out;
  if (batch.step < 0)
    out.push_back({std::nullopt, std::nullopt, std::nullopt, "step must be nonnegative"});
  if (batch.groups.empty())
    out.push_back({std::nullopt, std::nullopt, std::nullopt, "batch has no groups"});
  for (std::size_t g = 0; g < batch.groups.size(); ++g) {
    const auto& group = batch.groups[g];
    if (group.subspace.empty()) {
      out.push_back({g, std::nullopt, std::nullopt, "group has empty subspace"});
      continue;
    }
    if (group.rollouts.size() < 2)
      out.push_back({g, std::nullopt, std::nullopt,
                     "group needs at least 2 rollouts, has " +
                         std::to_string(group.rollouts.size())});
    for (std::size_t j = 0; j < group.rollouts.size(); ++j) {
      const auto& rv = group.rollouts[j];
      if (rv.subspace != group.subspace) {
        out.push_back({g, j, std::nullopt, "rollout subspace differs from group subspace"});
        continue;
      }
      if (static_cast<std::size_t>(rv.scores.size()) != group.subspace.size()) {
        out.push_back({g, j, std::nullopt,
                       "rollout has " + std::to_string(rv.scores.size()) +
                           " scores for a subspace of size " +
                           std::to_string(group.subspace.size())});
        continue;
      }
      for (Eigen::Index k = 0; k < rv.scores.size(); ++k) {
        if (!std::isfinite(rv.scores[k]))
          out.push_back({g, j, static_cast<std::size_t>(k), "non-finite reward score"});
      }
    }
  }
  return out;
}

}  // namespace rdpo
