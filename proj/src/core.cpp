#include "srl/core.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace srl {

std::string to_string(TaskCategory c) {
  switch (c) {
    case TaskCategory::kPick: return "pick";
    case TaskCategory::kLook: return "look";
    case TaskCategory::kClean: return "clean";
    case TaskCategory::kHeat: return "heat";
    case TaskCategory::kCool: return "cool";
    case TaskCategory::kPick2: return "pick2";
  }
  throw std::logic_error("unreachable task category");
}

TaskCategory category_from_string(const std::string& s) {
  for (TaskCategory c : kAllCategories) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown task category: " + s);
}

std::string to_string(RatioMode m) {
  return m == RatioMode::kPerStep ? "per-step" : "trajectory";
}

RatioMode ratio_mode_from_string(const std::string& s) {
  if (s == "per-step") return RatioMode::kPerStep;
  if (s == "trajectory") return RatioMode::kTrajectory;
  throw std::invalid_argument("unknown ratio mode: " + s);
}

double shaped_reward(const Trajectory& traj, double c_inv) {
  double r = (traj.success ? 1.0 : 0.0) - c_inv * traj.n_invalid;
  return std::clamp(r, -1.0, 1.0);
}

void TrainConfig::validate() const {
  if (group_size < 2) throw std::invalid_argument("group_size must be >= 2");
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  if (clip_eps <= 0) throw std::invalid_argument("clip_eps must be > 0");
  if (kl_coef < 0) throw std::invalid_argument("kl_coef must be >= 0");
  if (invalid_penalty < 0)
    throw std::invalid_argument("invalid_penalty must be >= 0");
  if (retrieval_k < 1) throw std::invalid_argument("retrieval_k must be >= 1");
  if (sim_threshold < -1.0 || sim_threshold > 1.0)
    throw std::invalid_argument("sim_threshold must be in [-1, 1]");
  if (trigger_threshold <= 0.0 || trigger_threshold >= 1.0)
    throw std::invalid_argument("trigger_threshold must be in (0, 1)");
  if (validation_interval < 1)
    throw std::invalid_argument("validation_interval must be >= 1");
  if (max_failures_low < 1 || max_failures_high < 1)
    throw std::invalid_argument("failure caps must be >= 1");
  if (max_new_skills < 1)
    throw std::invalid_argument("max_new_skills must be >= 1");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (context_budget < 1)
    throw std::invalid_argument("context_budget must be >= 1");
  if (discount <= 0.0 || discount > 1.0)
    throw std::invalid_argument("discount must be in (0, 1]");
  if (sft_examples < 1)
    throw std::invalid_argument("sft_examples must be >= 1");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (learning_rate <= 0)
    throw std::invalid_argument("learning_rate must be > 0");
}

json task_to_json(const TaskSpec& t) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = t.id;
  j["description"] = t.description;
  j["category"] = to_string(t.category);
  j["seed"] = t.seed;
  return j;
}

TaskSpec task_from_json(const json& j) {
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("task: unsupported schema_version");
  TaskSpec t;
  t.id = j.at("id").get<std::string>();
  t.description = j.at("description").get<std::string>();
  t.category = category_from_string(j.at("category").get<std::string>());
  t.seed = j.at("seed").get<uint64_t>();
  if (t.description.empty())
    throw std::invalid_argument("task: description must be non-empty");
  return t;
}

json trajectory_to_json(const Trajectory& t) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["task"] = task_to_json(t.task);
  json steps = json::array();
  for (const Step& s : t.steps) {
    steps.push_back({{"observation", s.observation},
                     {"admissible", s.admissible},
                     {"action", s.action},
                     {"reward", s.reward},
                     {"valid", s.valid}});
  }
  j["steps"] = std::move(steps);
  j["success"] = t.success;
  j["shaped_reward"] = t.shaped_reward;
  j["n_invalid"] = t.n_invalid;
  return j;
}

Trajectory trajectory_from_json(const json& j) {
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("trajectory: unsupported schema_version");
  Trajectory t;
  t.task = task_from_json(j.at("task"));
  for (const json& s : j.at("steps")) {
    Step step;
    step.observation = s.at("observation").get<std::string>();
    step.admissible = s.at("admissible").get<std::vector<std::string>>();
    step.action = s.at("action").get<std::string>();
    step.reward = s.at("reward").get<double>();
    step.valid = s.at("valid").get<bool>();
    t.steps.push_back(std::move(step));
  }
  t.success = j.at("success").get<bool>();
  t.shaped_reward = j.at("shaped_reward").get<double>();
  t.n_invalid = j.at("n_invalid").get<int>();
  return t;
}

}  // namespace srl
