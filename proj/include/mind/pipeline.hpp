#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mind/checkpoint.hpp"
#include "mind/config.hpp"
#include "mind/diffmatcher.hpp"
#include "mind/hidiff.hpp"
#include "mind/intervention.hpp"
#include "mind/lodiff.hpp"
#include "mind/optim.hpp"
#include "mind/pushworld.hpp"

namespace mind {

// The three co-trained networks plus their schedules, built deterministically
// from a TrainConfig. Copies are independent read-only snapshots, so parallel
// rollout workers each take one.
struct Models {
    TrainConfig cfg;
    LoDiffVisual lodiff;
    DiffMatcher matcher;
    HiDiffPolicy hidiff;

    static Models make(const TrainConfig& cfg);

    ParamList params();
    ParamList lodiff_params() { return lodiff.params(); }
};

struct LossReport {
    double l_video = 0.0;
    double l_action = 0.0;
    double l_align = 0.0;
    double l_total = 0.0;
    double lr = 0.0;
};

// In-memory training sample view of an episode file.
struct ClipDataset {
    std::vector<pushworld::EpisodeRecord> episodes;

    static ClipDataset load(const std::string& path);
    int64_t size() const { return static_cast<int64_t>(episodes.size()); }
};

// One optimizer update on the weighted co-training objective; disabled terms
// contribute exactly zero and are skipped. Deterministic given step_rng.
LossReport cotrain_step(Models& models, const ClipDataset& data, const TrainConfig& cfg,
                        AdamW& opt, double lr, Rng& step_rng);

struct TrainResult {
    std::string checkpoint_path;
    std::string curve_path;
    LossReport final_losses;
};

// Full training run: loss curve CSV + checkpoint under out_dir.
TrainResult train(const TrainConfig& cfg, const std::string& data_path,
                  const std::string& out_dir);

// Checkpoint plumbing; meta carries the config echo so a checkpoint is
// self-describing.
void save_models(const std::string& path, Models& models, int64_t train_step);
Models load_models(const std::string& path);

// ---------------------------------------------------------------------------
// Closed-loop rollout
// ---------------------------------------------------------------------------

enum class RolloutMode : uint8_t { kSingleStep = 0, kFullVideo = 1, kExpertReplay = 2 };

struct ReplanInfo {
    int64_t tau = 0;
    Tensor latent;    // (4, 16, 16) latent handed to the matcher
    Tensor z_tokens;  // (1, 4, d_p) conditioning tokens (after any hook)
    Tensor pooled_z;  // (d_p) token mean
};

struct RolloutRecord {
    uint16_t task = 0;
    uint64_t seed = 0;
    uint8_t success = 0;
    RolloutMode mode = RolloutMode::kSingleStep;
    std::vector<ReplanInfo> replans;
    std::vector<pushworld::Action> executed;
    std::vector<pushworld::Frame> frames;  // observation before each action + final
};

// Cache of per-replan conditioning tokens from a previous run, used by the
// cross-episode injection.
using ZCache = std::vector<std::vector<Tensor>>;

constexpr int kReplanEvery = 4;  // execute 4 of the 8 predicted actions

RolloutRecord rollout(Models& models, int task, uint64_t seed, RolloutMode mode,
                      const InterventionSpec* intervention = nullptr,
                      const ZCache* z_cache = nullptr, int64_t cache_row = -1);

// Seeded batch of rollouts (tasks cycle 0..3, seeds seed0 + i), optionally on
// worker threads; results are ordered by index regardless of worker count.
std::vector<RolloutRecord> run_rollouts(const Models& models, int n, uint64_t seed0,
                                        RolloutMode mode, int workers = 1,
                                        const InterventionSpec* intervention = nullptr,
                                        const ZCache* z_cache = nullptr);

double success_fraction(const std::vector<RolloutRecord>& records);

// Rollout record file ("MNDR").
void write_rollout_records(const std::string& path, const std::vector<RolloutRecord>& records);
std::vector<RolloutRecord> read_rollout_records(const std::string& path);

// ---------------------------------------------------------------------------
// Latency benchmark
// ---------------------------------------------------------------------------

struct BenchRow {
    std::string mode;
    double median_ms = 0.0;
    double p90_ms = 0.0;
    double ratio = 0.0;  // fullvideo median / singlestep median
};

struct BenchReport {
    BenchRow singlestep;
    BenchRow fullvideo;
};

BenchReport bench_latency(Models& models, int n_trials);

// CSV helpers shared by the CLI and the acceptance suite.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);
std::string format_real(double v);

}  // namespace mind
