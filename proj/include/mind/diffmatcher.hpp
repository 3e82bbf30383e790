#pragma once

#include <vector>

#include "mind/latent.hpp"
#include "mind/nn.hpp"
#include "mind/schedule.hpp"

namespace mind {

struct MatcherConfig {
    int64_t embed_dim = 64;  // d_e
    int64_t hidden = 64;     // d_h
    int64_t proj_dim = 32;   // d_p
    int64_t layers = 2;      // encoder depth N
    int64_t heads = 4;
    int64_t frames = kClipLen;
    int64_t tprime = 1000;   // accepted timestep range is [0, tprime]
};

// Conditioning tokens produced by the matcher for one batch.
struct MatcherFeature {
    Tensor tokens;  // (B, frames, proj_dim)
    int64_t tau = 0;
};

// Temporal transformer mapping a (noisy) video latent plus its diffusion
// timestep to compact conditioning tokens: per-frame MLP embedding, learned
// frame positions, broadcast time embedding, encoder layers, then learnable
// projection tokens cross-attending into the temporal features.
class DiffMatcher {
public:
    DiffMatcher() = default;
    DiffMatcher(const MatcherConfig& cfg, Rng& rng);

    void collect(ParamList& out);

    // clips: (B, 4, 16, 16) in the diffusion domain; one timestep per sample.
    NodeId forward(Graph& g, const Bind& bind, const Tensor& clips,
                   const std::vector<int64_t>& taus) const;

    // Convenience single-latent entry point.
    MatcherFeature forward_one(const VideoLatent& v);

    // One alignment draw: per-sample uniform timestep and re-noised clips.
    struct AlignDraw {
        Tensor noisy_clips;  // (B, 4, 16, 16)
        std::vector<int64_t> taus;
    };
    AlignDraw draw_align_batch(const Tensor& clean_clips, const Schedule& slow, Rng& rng) const;

    // Diffusion-forcing loss: mean squared distance between features of a
    // re-noised clip at a random timestep and the stop-gradient features of
    // the clean clip.
    NodeId align_loss(Graph& g, const Bind& bind, const Tensor& clean_clips,
                      const Schedule& slow, Rng& rng) const;
    NodeId align_loss(Graph& g, const Bind& bind, const std::vector<VideoLatent>& v0,
                      const Schedule& slow, Rng& rng) const;

    ParamList params();

    MatcherConfig cfg;

private:
    struct EncoderLayer {
        nn::LayerNorm ln1, ln2;
        nn::MultiheadAttention attn;
        nn::Mlp mlp;
    };

    nn::Linear embed1_, embed2_;
    Tensor pos_;          // (1, frames, hidden)
    nn::Linear time1_, time2_;
    std::vector<EncoderLayer> layers_;
    Tensor proj_tokens_;  // (1, frames, proj_dim)
    nn::Linear proj_lin_;
    nn::MultiheadAttention cross_;
};

// Shared condition-dropout draw used by both diffusion losses.
constexpr double kConditionDropProb = 0.1;
bool drop_condition(Rng& rng);

}  // namespace mind
