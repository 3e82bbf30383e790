#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mind {

// Flat key=value training configuration. Unknown keys are rejected with the
// list of valid keys so typos never fail silently.
struct TrainConfig {
    uint64_t seed = 0;
    double lambda_v = 1.0;
    double lambda_a = 1.0;
    double lambda_align = 0.5;
    int64_t batch = 16;
    int64_t steps = 2000;
    double lr = 1e-3;
    int64_t warmup = 100;
    int64_t tprime = 1000;
    int64_t tdoubleprime = 100;
    int64_t depth = 4;      // hidiff depth
    int64_t hidden = 128;   // hidiff hidden size
    int64_t heads = 4;      // hidiff heads
    double cfg_scale = 2.0; // action sampler guidance
    bool use_video_loss = true;
    bool use_align_loss = true;
    bool use_action_loss = true;
    bool freeze_lodiff = false;

    void validate() const;
};

// All keys accepted by config files and --set overrides.
const std::vector<std::string>& config_keys();

// Applies "key=value"; throws ContractViolation naming the valid keys when
// the key is unknown, FormatError when the value does not parse.
void apply_config_entry(TrainConfig& cfg, const std::string& key, const std::string& value);

// Parses a key=value file ('#' starts a comment line).
TrainConfig load_config_file(const std::string& path);

std::string config_to_string(const TrainConfig& cfg);

}  // namespace mind
