#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "mind/optim.hpp"
#include "mind/rng.hpp"
#include "mind/tensor.hpp"

namespace mind {

// Parameter tensors bound into a graph as leaves, looked up by name.
// Binding once per graph keeps repeated forward passes from re-copying
// parameters.
class Bind {
public:
    Bind(Graph& g, const ParamList& params);
    // Adopt existing graph nodes as the parameter leaves (used by gradient
    // checks that need to own the leaves).
    Bind(Graph& g, std::unordered_map<std::string, NodeId> ids);

    NodeId operator[](const std::string& name) const;
    Graph& graph() const { return *g_; }
    const std::unordered_map<std::string, NodeId>& ids() const { return ids_; }

private:
    Graph* g_;
    std::unordered_map<std::string, NodeId> ids_;
};

namespace nn {

// y = x @ w + b with w: (in, out). Applies to the last axis of x.
class Linear {
public:
    Linear() = default;
    Linear(std::string name, int64_t in, int64_t out, Rng& rng);

    void collect(ParamList& out);
    NodeId operator()(Graph& g, const Bind& bind, NodeId x) const;

    Tensor w, b;

private:
    std::string name_;
};

// LayerNorm over the last axis with learned gain/bias.
class LayerNorm {
public:
    LayerNorm() = default;
    LayerNorm(std::string name, int64_t dim);

    void collect(ParamList& out);
    NodeId operator()(Graph& g, const Bind& bind, NodeId x) const;

    Tensor gamma, beta;

private:
    std::string name_;
};

class Embedding {
public:
    Embedding() = default;
    Embedding(std::string name, int64_t vocab, int64_t dim, Rng& rng);

    void collect(ParamList& out);
    NodeId operator()(Graph& g, const Bind& bind, const std::vector<int64_t>& ids) const;

    Tensor table;

private:
    std::string name_;
};

// Multi-head scaled dot-product attention. Queries may have a different
// width than keys/values; output width equals the query width.
class MultiheadAttention {
public:
    MultiheadAttention() = default;
    MultiheadAttention(std::string name, int64_t q_dim, int64_t kv_dim, int64_t heads, Rng& rng);

    void collect(ParamList& out);
    // q: (B, Tq, q_dim), kv: (B, Tk, kv_dim) -> (B, Tq, q_dim)
    NodeId operator()(Graph& g, const Bind& bind, NodeId q, NodeId kv) const;

    Linear wq, wk, wv, wo;

private:
    int64_t heads_ = 0;
    int64_t head_dim_ = 0;
};

// Two-layer MLP with GELU, hidden = mult * dim.
class Mlp {
public:
    Mlp() = default;
    Mlp(std::string name, int64_t dim, int64_t hidden, Rng& rng);

    void collect(ParamList& out);
    NodeId operator()(Graph& g, const Bind& bind, NodeId x) const;

    Linear fc1, fc2;
};

}  // namespace nn

// Learned tensor parameter initialised from a normal distribution.
Tensor init_normal(std::vector<int64_t> shape, double stddev, Rng& rng);

// Classic transformer sinusoidal features of integer timesteps, one row per
// entry of `taus`.
Tensor sinusoidal_embedding(const std::vector<int64_t>& taus, int64_t dim);

}  // namespace mind
