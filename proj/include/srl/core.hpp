#ifndef SRL_CORE_HPP_
#define SRL_CORE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace srl {

// Insertion-ordered JSON keeps every serialized artifact byte-stable.
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// The six household task categories, in canonical reporting order.
enum class TaskCategory { kPick, kLook, kClean, kHeat, kCool, kPick2 };

constexpr std::array<TaskCategory, 6> kAllCategories = {
    TaskCategory::kPick, TaskCategory::kLook, TaskCategory::kClean,
    TaskCategory::kHeat, TaskCategory::kCool, TaskCategory::kPick2};

std::string to_string(TaskCategory c);
TaskCategory category_from_string(const std::string& s);

// One task instance: a natural-language goal plus the seed that regenerates
// its world.
struct TaskSpec {
  std::string id;
  std::string description;
  TaskCategory category = TaskCategory::kPick;
  uint64_t seed = 0;

  bool operator==(const TaskSpec&) const = default;
};

// One environment interaction.
struct Step {
  std::string observation;
  std::vector<std::string> admissible;
  std::string action;
  double reward = 0.0;
  bool valid = true;

  bool operator==(const Step&) const = default;
};

// One complete episode.
struct Trajectory {
  TaskSpec task;
  std::vector<Step> steps;
  bool success = false;
  double shaped_reward = 0.0;
  int n_invalid = 0;

  bool operator==(const Trajectory&) const = default;
};

// Success indicator minus the invalid-action penalty, clamped to [-1, 1].
// With c_inv = 0 this is the plain binary episode reward.
double shaped_reward(const Trajectory& traj, double c_inv);

enum class RatioMode { kPerStep, kTrajectory };

std::string to_string(RatioMode m);
RatioMode ratio_mode_from_string(const std::string& s);

// Hyperparameters for the full training pipeline. Defaults follow the
// published band where one exists; the rest are desk-scale choices.
struct TrainConfig {
  double learning_rate = 1e-2;
  int group_size = 8;
  int batch_size = 16;
  double clip_eps = 0.2;
  double kl_coef = 0.01;
  double invalid_penalty = 0.1;
  int retrieval_k = 6;
  double sim_threshold = 0.30;
  double trigger_threshold = 0.4;
  int validation_interval = 5;
  int max_failures_low = 10;   // active cap while overall SR < 0.4
  int max_failures_high = 5;   // active cap otherwise
  int max_new_skills = 3;
  int max_steps = 30;
  int context_budget = 2048;   // token budget L_max for one rendered context
  double discount = 1.0;       // unused by the default binary reward path
  int sft_examples = 120;
  int epochs = 150;
  uint64_t seed = 0;
  RatioMode ratio_mode = RatioMode::kPerStep;

  void validate() const;
};

json task_to_json(const TaskSpec& t);
TaskSpec task_from_json(const json& j);

json trajectory_to_json(const Trajectory& t);
Trajectory trajectory_from_json(const json& j);

}  // namespace srl

#endif  // SRL_CORE_HPP_
