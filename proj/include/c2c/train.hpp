#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "c2c/checkpoint.hpp"
#include "c2c/model.hpp"
#include "c2c/vocab.hpp"

namespace c2c {

struct TrainingConfig {
    double lr0 = 0.5;
    double decay = 0.99;
    std::size_t patience = 3000;  // iterations without improvement before a decay
    double clip = 5.0;            // global gradient norm cap
    std::vector<Bucket> buckets = default_buckets();
    std::size_t embed = 32;
    std::size_t hidden = 64;
    std::size_t layers = 3;
    std::size_t batch = 32;
    std::size_t max_iters = 2000;
    std::size_t beam = 5;
    std::size_t checkpoint_every = 1000;
    std::size_t vocab_cap = 50000;
    std::uint64_t seed = 1;
    ContextMode mode = ContextMode::kMultiplicative;
    bool ident_order = true;

    // "desk" (32/64) or "full" (512/1024)
    static TrainingConfig preset(const std::string& name);

    // `key = value` lines; '#' comments; unknown keys are errors.
    static TrainingConfig from_file(const std::string& path);

    void apply_line(const std::string& line);  // one key = value assignment
};

// Context mode and preprocessing flags for one ablation table row:
//   1: no identifier ordering, baseline context
//   2: identifier ordering, baseline context
//   3: identifier ordering + token weights, additive
//   4: identifier ordering + token weights, multiplicative
struct AblationConfig {
    bool ident_order = true;
    ContextMode mode = ContextMode::kMultiplicative;
};

AblationConfig build_ablation_config(int row);

struct LrState {
    double current_lr = 0.0;
    double best_loss = std::numeric_limits<double>::infinity();
    std::size_t iters_since_improvement = 0;
};

inline LrState make_lr_state(const TrainingConfig& config) {
    return LrState{config.lr0, std::numeric_limits<double>::infinity(), 0};
}

// Strict improvement resets the stale counter; `patience` consecutive stale
// iterations multiply the rate by `decay` once and reset the counter.
LrState adapt_lr(LrState state, double new_loss, const TrainingConfig& config);

// Clips the global gradient norm to `clip`, then applies theta -= lr * g.
// A non-finite gradient skips the step and reports a diagnostic.
void sgd_step(ModelParams& params, const ModelParams& grads, double lr, double clip,
              std::vector<std::string>* diagnostics = nullptr);

struct TrainLogEntry {
    std::size_t iter = 0;
    std::size_t bucket_index = 0;
    double loss = 0.0;
    double lr = 0.0;
};

struct TrainOptions {
    std::string checkpoint_path;               // periodic + final saves when non-empty
    std::vector<TrainLogEntry>* log = nullptr;
    const Checkpoint* resume = nullptr;
    std::map<std::string, Vec> extra_tensors;  // merged into every checkpoint save
    // called after every iteration; return true to stop early
    std::function<bool(std::size_t iter, const ModelParams&)> should_stop;
};

struct TrainResult {
    ModelParams params;
    LrState lr_state;
    std::size_t iterations = 0;
};

// Bucket-sampled SGD training, fully determined by (seed, config, data).
// Buckets are drawn proportionally to their example counts; batches are drawn
// uniformly with replacement within the bucket. Iteration k derives its
// randomness from (seed, k) alone, so a resumed run replays identically.
TrainResult train_loop(const TrainingConfig& config, const ModelDims& dims,
                       const std::vector<Example>& examples, const TrainOptions& options = {});

// Optimizer state persisted in checkpoints under this tensor name:
// {iteration, current_lr, best_loss, iters_since_improvement}.
inline constexpr const char* kOptStateTensor = "opt.state";

std::map<std::string, Vec> encode_opt_state(std::size_t iter, const LrState& lr);

}  // namespace c2c
