#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mind/tensor.hpp"

namespace mind {

// Named view into a parameter tensor owned by some module.
struct ParamRef {
    std::string name;
    Tensor* tensor;
};
using ParamList = std::vector<ParamRef>;

// Linear warmup to base_lr over `warmup` steps, then cosine decay reaching 0
// at `total`; saturates at 0 afterwards.
double cosine_lr(int64_t step, int64_t warmup, int64_t total, double base_lr);

// Scales gradients in place so their global L2 norm is at most `max_norm`.
// Returns the pre-clip norm.
double clip_global_norm(std::vector<Tensor*>& grads, double max_norm);

// AdamW with decoupled weight decay and bias-corrected moments. Moment
// buffers are keyed by parameter name and allocated lazily.
class AdamW {
public:
    struct Hyper {
        double lr = 1e-3;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double eps = 1e-8;
        double weight_decay = 0.0;
    };

    explicit AdamW(Hyper h) : hyper_(h) {}

    Hyper& hyper() { return hyper_; }
    int64_t step_count() const { return step_; }

    // Applies one update to every (param, grad) pair. Grads must match the
    // parameter shapes; a null grad pointer skips that parameter.
    void step(const ParamList& params, const std::vector<const Tensor*>& grads);

private:
    struct Moments {
        Tensor m, v;
    };

    Hyper hyper_;
    int64_t step_ = 0;
    std::unordered_map<std::string, Moments> state_;
};

}  // namespace mind
