#pragma once

#include <vector>

#include "mind/latent.hpp"
#include "mind/nn.hpp"
#include "mind/schedule.hpp"

namespace mind {

struct LoDiffConfig {
    int64_t patch = kPatch;
    int64_t dim = 64;
    int64_t layers = 4;
    int64_t heads = 4;
    int64_t tprime = 1000;
    double beta_start = 0.00085;
    double beta_end = 0.012;
    double guidance = 7.5;   // sampling default
    int64_t tasks = pushworld::kNumTasks;  // embedding table also holds a null row
    int64_t frames = kClipLen;
};

// Conditioning for the video generator: the current observation plus a task
// token, with the null row standing in when the condition is dropped.
struct CondContext {
    Tensor v0;      // (16, 16) current frame in the diffusion domain
    int64_t task = 0;
    bool null_condition = false;

    int64_t token_id(int64_t tasks) const { return null_condition ? tasks : task; }
};

// The slow video generator: a small temporal transformer denoiser over
// 4-frame clips with factorized temporal/spatial attention per layer.
// Conditioning (v0 patches, task token, timestep token) joins the spatial
// attention as extra key/value entries. Velocity parameterization on a
// zero-terminal-SNR linear schedule.
class LoDiffVisual {
public:
    LoDiffVisual() = default;
    LoDiffVisual(const LoDiffConfig& cfg, Rng& rng);

    void collect(ParamList& out);
    ParamList params();

    const Schedule& schedule() const { return schedule_; }
    int64_t eval_count() const { return eval_count_; }

    // Batched denoiser in token space.
    //   noisy_tokens: (B, 64, 16), taus: per-sample timesteps in [1, tprime],
    //   v0_tokens: (B, 16, 16), token_ids: task id or `tasks` for null.
    // Returns the velocity prediction, (B, 64, 16).
    NodeId forward_tokens(Graph& g, const Bind& bind, const Tensor& noisy_tokens,
                          const std::vector<int64_t>& taus, const Tensor& v0_tokens,
                          const std::vector<int64_t>& token_ids) const;

    // Single-latent denoiser matching the VideoLatent contract.
    VideoLatent forward(const VideoLatent& noisy, int64_t tau, const CondContext& cond);

    // One training draw: per-sample uniform timestep, noised clips, velocity
    // targets (patchified), condition dropped to null with probability
    // kConditionDropProb.
    struct TrainingDraw {
        Tensor noisy_clips;    // (B, 4, 16, 16)
        Tensor target_tokens;  // (B, 64, 16)
        std::vector<int64_t> taus;
        std::vector<int64_t> token_ids;
    };
    TrainingDraw draw_batch(const Tensor& clips, const std::vector<int64_t>& task_ids,
                            Rng& rng) const;

    // Mean squared velocity error on one training draw.
    NodeId video_loss(Graph& g, const Bind& bind, const Tensor& clips, const Tensor& v0_frames,
                      const std::vector<int64_t>& task_ids, Rng& rng) const;

    // Full DDIM chain from pure noise with classifier-free guidance at every
    // step (batch duplication, one evaluation per step). eta = 0.
    VideoLatent sample_video(const CondContext& cond, int64_t n_steps, double guidance, Rng& rng);

    // Exactly one reverse step from pure noise; returns the latent at
    // tau = tprime - 1.
    VideoLatent single_step_latent(const CondContext& cond, Rng& rng);

    LoDiffConfig cfg;

private:
    struct Block {
        nn::LayerNorm ln_t, ln_s, ln_m;
        nn::MultiheadAttention attn_t, attn_s;
        nn::Mlp mlp;
    };

    // Builds the 18 conditioning tokens (16 v0 patches, task, time).
    NodeId cond_tokens(Graph& g, const Bind& bind, const Tensor& v0_tokens,
                       const std::vector<int64_t>& token_ids,
                       const std::vector<int64_t>& taus) const;

    Schedule schedule_;
    nn::Linear patch_embed_, cond_embed_, head_;
    nn::LayerNorm head_ln_;
    Tensor pos_spatial_;   // (1, 16, dim)
    Tensor pos_temporal_;  // (1, frames, dim) applied per frame group
    Tensor seg_cond_;      // (1, 1, dim) marks conditioning patches
    nn::Embedding task_emb_;
    nn::Linear time1_, time2_;
    std::vector<Block> blocks_;
    mutable int64_t eval_count_ = 0;
};

}  // namespace mind
