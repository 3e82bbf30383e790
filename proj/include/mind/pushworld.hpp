#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mind/rng.hpp"

namespace mind {
namespace pushworld {

// Workspace constants. Kinematic grab-and-drag dynamics on the unit square:
// a closed gripper within kGraspRadius of the block drags it along.
constexpr int kHorizon = 40;
constexpr double kGraspRadius = 0.06;
constexpr double kSuccessRadius = 0.08;
constexpr double kMaxDelta = 0.1;
constexpr int kFrameSize = 16;
constexpr int kNumTasks = 4;
constexpr int kFramePixels = kFrameSize * kFrameSize;

// Goal corner for each task id, inset from the walls so a dragged block can
// actually reach it.
std::array<double, 2> goal_for_task(int task);

struct Action {
    double dx = 0.0;
    double dy = 0.0;
    double g = 0.0;  // >= 0.5 means closed

    Action() = default;
    Action(double dx_, double dy_, double g_);  // clamps deltas, g to [0,1]
    bool closed() const { return g >= 0.5; }
};

struct EnvState {
    double gx = 0.5, gy = 0.5;
    bool gripper_closed = false;
    double bx = 0.5, by = 0.5;
    int task = 0;
    int step = 0;
    bool success = false;  // latched once the block reaches the goal
};

using Frame = std::array<float, kFramePixels>;  // grayscale, [0,1]

struct EpisodeRecord {
    uint16_t task = 0;
    uint8_t success = 0;
    std::vector<Frame> frames;       // length = actions.size() + 1
    std::vector<Action> actions;
};

struct DatasetSummary {
    int64_t episodes = 0;
    int64_t successes = 0;
    int64_t failures = 0;
    double success_rate = 0.0;
};

// Deterministic total dynamics; never throws.
EnvState step_env(const EnvState& state, const Action& action);

// Deterministic raster: goal 0.3 (1x1), block 0.6 (2x2), gripper 1.0 (2x2,
// drawn last), background 0.
Frame render(const EnvState& state);

// Phase policy: approach the block, close, drag to the goal, open.
Action scripted_expert(const EnvState& state, int task);

// Random start near the middle of the workspace with the gripper close to
// the block, so demonstrations spend most steps dragging.
EnvState random_init(int task, Rng& rng);

// Runs the expert for kHorizon steps with N(0, noise_level^2) perturbation on
// the deltas, recording frames and executed actions.
EpisodeRecord run_expert_episode(int task, Rng& rng, double noise_level);

// Episode file I/O ("MND1" format, little-endian).
void write_episodes(const std::string& path, const std::vector<EpisodeRecord>& episodes);
std::vector<EpisodeRecord> read_episodes(const std::string& path);

// Generates n episodes (tasks round-robin), writes them to out_path, and
// reports the success split.
DatasetSummary generate_dataset(int64_t n_episodes, uint64_t seed, double noise_level,
                                const std::string& out_path);

}  // namespace pushworld
}  // namespace mind
