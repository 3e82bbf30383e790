#pragma once

#include <cstdint>
#include <string>

namespace mind {

// Controlled corruptions applied at named pipeline sites during rollout.
// Declared separately so both the rollout harness and the risk analysis can
// see the closed set.
enum class InterventionType {
    kVisualPerturbation,     // add N(0, sigma^2) to the latent before the matcher
    kLatentMasking,          // zero a fraction of z entries
    kRandomLatentInjection,  // replace z with unit Gaussian
    kFrozenLodiff,           // substitute zeros for the single-step latent
    kCrossEpisodeInjection,  // z taken from a different episode's cache
    kSwappedInstruction,     // rotate the task id seen by the models
};

struct InterventionSpec {
    InterventionType type = InterventionType::kVisualPerturbation;
    double magnitude = 0.5;  // sigma or mask fraction
    uint64_t seed = 0;

    void validate() const;
};

const char* intervention_name(InterventionType t);
InterventionType intervention_from_name(const std::string& name);

}  // namespace mind
