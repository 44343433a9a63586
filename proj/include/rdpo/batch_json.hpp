#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rdpo/model.hpp"
#include "rdpo/registry.hpp"

namespace rdpo {

// Batch wire format:
//   {"step": int, "groups": [{"prompt_id": str, "task_id": str,
//     "dims": [str], "scores": [[float,...],...]}]}
// scores is G rows by |dims| columns, column j scored under dims[j].

inline Batch batch_from_json(const nlohmann::json& j, const DimensionRegistry& reg) {
  if (!j.is_object()) throw std::invalid_argument("batch: expected JSON object");
  Batch batch;
  batch.step = j.at("step").get<std::int64_t>();
  for (const auto& jg : j.at("groups")) {
    RolloutGroup group;
    group.prompt_id = jg.at("prompt_id").get<std::string>();
    group.task_id = jg.at("task_id").get<std::string>();
    const auto dim_names = jg.at("dims").get<std::vector<std::string>>();
    std::vector<RewardDimensionId> ids;
    ids.reserve(dim_names.size());
    for (const auto& name : dim_names) {
      auto id = reg.find(name);
      if (!id)
        throw std::invalid_argument("batch group '" + group.prompt_id +
                                    "': unknown reward dimension '" + name + "'");
      ids.push_back(*id);
    }
    group.subspace = SubspaceKey::of(ids);
    // Columns arrive in the listed dims order; store canonically.
    std::vector<std::size_t> col_of_dim(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k)
      col_of_dim[*group.subspace.position(ids[k])] = k;
    for (const auto& row : jg.at("scores")) {
      const auto values = row.get<std::vector<double>>();
      if (values.size() != ids.size())
        throw std::invalid_argument("batch group '" + group.prompt_id +
                                    "': score row width does not match dims");
      RewardVector rv;
      rv.subspace = group.subspace;
      rv.scores.resize(static_cast<Eigen::Index>(values.size()));
      for (std::size_t k = 0; k < values.size(); ++k)
        rv.scores[static_cast<Eigen::Index>(k)] = values[col_of_dim[k]];
      group.rollouts.push_back(std::move(rv));
    }
    batch.groups.push_back(std::move(group));
  }
  return batch;
}

inline nlohmann::json batch_to_json(const Batch& batch, const DimensionRegistry& reg) {
  nlohmann::json j;
  j["step"] = batch.step;
  j["groups"] = nlohmann::json::array();
  for (const auto& group : batch.groups) {
    nlohmann::json jg;
    jg["prompt_id"] = group.prompt_id;
    jg["task_id"] = group.task_id;
    jg["dims"] = group.subspace.names(reg);
    auto& scores = jg["scores"] = nlohmann::json::array();
    for (const auto& rv : group.rollouts) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < rv.scores.size(); ++k) row.push_back(rv.scores[k]);
      scores.push_back(std::move(row));
    }
    j["groups"].push_back(std::move(jg));
  }
  return j;
}

}  // namespace rdpo
