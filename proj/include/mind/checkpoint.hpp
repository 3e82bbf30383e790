#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mind/optim.hpp"
#include "mind/tensor.hpp"

namespace mind {

// In-memory image of a checkpoint file: named tensors in file order.
// Scalar metadata (train step, config echo, schedule parameters) travels as
// reserved "meta." tensors so the on-disk format stays a flat tensor table.
struct Checkpoint {
    std::vector<std::pair<std::string, Tensor>> tensors;

    const Tensor* find(const std::string& name) const;
    double meta(const std::string& key, double fallback) const;
};

// "MNDC" format: magic, u32 version, u32 tensor count; per tensor u16 name
// length, name bytes, u8 rank, u32 per-dim sizes, f32 payload. Values are
// narrowed to f32 on save.
void save_checkpoint(const std::string& path, const ParamList& params,
                     const std::map<std::string, double>& meta);

Checkpoint load_checkpoint(const std::string& path);

// Copies checkpoint tensors into the given parameters, shape-checked;
// throws FormatError when a parameter is missing or mismatched.
void load_into(const Checkpoint& ckpt, const ParamList& params);

}  // namespace mind
