#pragma once

#include <vector>

#include "mind/latent.hpp"
#include "mind/nn.hpp"
#include "mind/schedule.hpp"

namespace mind {

struct HiDiffConfig {
    int64_t depth = 4;
    int64_t hidden = 128;
    int64_t heads = 4;
    int64_t tdoubleprime = 100;
    double beta_start = 1e-4;
    double beta_end = 0.02;
    double cfg_scale = 2.0;        // sampling default
    int64_t sample_steps = 10;     // DDIM steps on the fast schedule
    int64_t tasks = pushworld::kNumTasks;
    int64_t cond_tokens = kClipLen;  // matcher feature tokens
    int64_t cond_dim = 32;           // matcher projection width

    static HiDiffConfig dit_s() { HiDiffConfig c; c.depth = 6; c.hidden = 384; c.heads = 4; return c; }
    static HiDiffConfig dit_b() { HiDiffConfig c; c.depth = 12; c.hidden = 768; c.heads = 12; return c; }
};

// The fast action head: a DiT-style transformer denoising a whole action
// chunk at once. Each block runs self-attention, then a tanh(gate)-scaled
// cross-attention into the conditioning memory (matcher tokens + task
// token), then an MLP. Separate linear heads emit the movement deltas and
// the gripper channel. Epsilon parameterization on the fast schedule.
class HiDiffPolicy {
public:
    HiDiffPolicy() = default;
    HiDiffPolicy(const HiDiffConfig& cfg, Rng& rng);

    void collect(ParamList& out);
    ParamList params();

    const Schedule& schedule() const { return schedule_; }
    int64_t eval_count() const { return eval_count_; }

    // noisy_chunks: (B, 8, 3); taus in [1, tdoubleprime]; z: (B, 4, cond_dim)
    // node (gradients flow through it); null_flags[b] replaces that sample's
    // conditioning memory with the learned null token. skip_cross builds the
    // cross-attention-free twin used to verify the gate contract.
    NodeId forward(Graph& g, const Bind& bind, const Tensor& noisy_chunks,
                   const std::vector<int64_t>& taus, NodeId z,
                   const std::vector<int64_t>& task_ids,
                   const std::vector<uint8_t>& null_flags, bool skip_cross = false) const;

    // One training draw on the fast schedule: per-sample uniform timestep,
    // noised chunks, the drawn noise as the target, condition dropped with
    // probability kConditionDropProb.
    struct TrainingDraw {
        Tensor noisy_chunks;  // (B, 8, 3)
        Tensor eps;           // (B, 8, 3)
        std::vector<int64_t> taus;
        std::vector<uint8_t> null_flags;
    };
    TrainingDraw draw_batch(const Tensor& chunks, Rng& rng) const;

    // Denoising score matching on one training draw.
    NodeId action_loss(Graph& g, const Bind& bind, const Tensor& chunks, NodeId z,
                       const std::vector<int64_t>& task_ids, Rng& rng) const;

    // Reverse chain from noise with classifier-free guidance; two network
    // evaluations (conditional + null) per step. Returns the decoded chunk.
    ActionChunk sample_actions(const Tensor& z_tokens, int64_t task, int64_t n_steps,
                               double guidance, Rng& rng);

    HiDiffConfig cfg;

private:
    struct Block {
        nn::LayerNorm ln_self, ln_cross, ln_mlp;
        nn::MultiheadAttention attn_self, attn_cross;
        nn::Mlp mlp;
        Tensor gate;  // scalar, initialized to 1
    };

    NodeId memory_tokens(Graph& g, const Bind& bind, NodeId z,
                         const std::vector<int64_t>& task_ids,
                         const std::vector<uint8_t>& null_flags) const;

    Schedule schedule_;
    nn::Linear act_embed_;
    Tensor pos_;  // (1, 8, hidden)
    nn::Linear time1_, time2_;
    nn::Linear z_proj_;
    nn::Embedding task_emb_;
    Tensor null_token_;  // (1, 1, hidden)
    std::vector<Block> blocks_;
    nn::LayerNorm head_ln_;
    nn::Linear head_action_, head_gripper_;
    mutable int64_t eval_count_ = 0;
};

}  // namespace mind
