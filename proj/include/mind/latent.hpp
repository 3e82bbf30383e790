#pragma once

#include <cstdint>
#include <vector>

#include "mind/pushworld.hpp"
#include "mind/schedule.hpp"
#include "mind/tensor.hpp"

namespace mind {

constexpr int64_t kClipLen = 4;       // frames per video clip
constexpr int64_t kChunkLen = 8;      // actions per chunk (H_a)
constexpr int64_t kActionDims = 3;    // dx, dy, g
constexpr int64_t kPatch = 4;         // patch edge in pixels
constexpr int64_t kPatchesPerFrame = 16;
constexpr int64_t kPatchPixels = kPatch * kPatch;

// A (possibly noisy) 4-frame stack of 16x16x1 latents tagged with its
// diffusion timestep in the slow process. tau == 0 iff the latent is clean.
struct VideoLatent {
    Tensor frames;  // (kClipLen, 16, 16)
    int64_t tau = 0;
    uint32_t schedule_tag = kSlowProcessTag;

    bool clean() const { return tau == 0; }
    void validate(const Schedule& s) const;
};

// A length-H_a action sequence in the normalized diffusion domain, tagged
// with its fast-process timestep.
struct ActionChunk {
    Tensor values;  // (kChunkLen, 3), entries nominally in [-1, 1]
    int64_t tau = 0;
    uint32_t schedule_tag = kFastProcessTag;

    // Clamps deltas to the env range and thresholds the gripper.
    std::vector<pushworld::Action> decode() const;
};

// Frame pixels [0,1] <-> diffusion domain [-1,1].
Tensor frames_to_latent(const std::vector<pushworld::Frame>& frames);
Tensor frame_to_latent(const pushworld::Frame& frame);  // (16, 16)

// Env actions <-> normalized chunk rows (dx/0.1, dy/0.1, 2g-1).
Tensor normalize_actions(const std::vector<pushworld::Action>& actions);

// Token rearrangements between (..., kClipLen, 16, 16) frame stacks and
// (..., kClipLen*16, 16) patch-token stacks (4x4 patches, row-major).
Tensor patchify_clip(const Tensor& clip);          // (B,4,16,16) -> (B,64,16)
Tensor patchify_frame_batch(const Tensor& frames); // (B,16,16)   -> (B,16,16 tokens)
Tensor unpatchify_clip(const Tensor& tokens);      // (B,64,16) or (64,16) -> (...,4,16,16)

}  // namespace mind
