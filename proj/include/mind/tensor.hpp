#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mind/common.hpp"

namespace mind {

// Dense row-major tensor of 64-bit floats.
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<double> data;
    bool requires_grad = false;

    Tensor() = default;
    explicit Tensor(std::vector<int64_t> s);
    Tensor(std::vector<int64_t> s, double fill);
    Tensor(std::vector<int64_t> s, std::vector<double> d);

    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    int64_t numel() const;
    int rank() const { return static_cast<int>(shape.size()); }
    bool same_shape(const Tensor& other) const { return shape == other.shape; }
    std::string shape_str() const;
};

using NodeId = int32_t;

// Recorded computation tape. Operations execute eagerly when recorded; the
// node vector is its own topological order, and backward() walks it in
// reverse exactly once. A Graph and its tensors belong to one worker at a
// time.
class Graph {
public:
    // -- leaves ------------------------------------------------------------
    NodeId leaf(const Tensor& t);       // differentiable iff t.requires_grad
    NodeId constant(const Tensor& t);   // never differentiated
    NodeId constant(Tensor&& t);

    // -- elementwise (numpy-style right-aligned broadcasting) --------------
    NodeId add(NodeId a, NodeId b);
    NodeId sub(NodeId a, NodeId b);
    NodeId mul(NodeId a, NodeId b);
    NodeId scale(NodeId a, double c);
    NodeId add_scalar(NodeId a, double c);

    // -- linear algebra -----------------------------------------------------
    // a: (batch..., M, K); b: (K, N) shared across the batch, or
    // (batch..., K, N) with identical leading dims.
    NodeId matmul(NodeId a, NodeId b);
    // Fused multi-head scaled dot-product attention over pre-projected
    // activations: q (B, Tq, D), k/v (B, Tk, D), heads dividing D.
    NodeId attention(NodeId q, NodeId k, NodeId v, int64_t heads);
    NodeId transpose(NodeId a, int axis0, int axis1);
    NodeId reshape(NodeId a, std::vector<int64_t> new_shape);
    NodeId broadcast_to(NodeId a, std::vector<int64_t> target);
    NodeId concat(const std::vector<NodeId>& parts, int axis);
    NodeId slice(NodeId a, int axis, int64_t start, int64_t len);

    // -- nonlinearities ------------------------------------------------------
    NodeId relu(NodeId a);
    NodeId gelu(NodeId a);
    NodeId tanh(NodeId a);
    NodeId sigmoid(NodeId a);
    NodeId softplus(NodeId a);
    NodeId exp(NodeId a);
    NodeId log(NodeId a);
    NodeId softmax(NodeId a);             // over the last axis
    NodeId layer_norm(NodeId a, double eps = 1e-5);  // over the last axis, no affine

    // -- lookups & reductions -----------------------------------------------
    NodeId embedding(NodeId table, const std::vector<int64_t>& indices);
    NodeId sum(NodeId a);        // -> scalar
    NodeId mean(NodeId a);       // -> scalar
    NodeId stop_grad(NodeId a);  // identity value, zero gradient

    // Composite conveniences.
    NodeId mean_square(NodeId a) { return mean(mul(a, a)); }
    NodeId mse(NodeId a, NodeId b) { return mean_square(sub(a, b)); }

    // -- execution ------------------------------------------------------------
    const Tensor& val(NodeId id) const;
    size_t size() const { return nodes_.size(); }

    // Gradients of the scalar `loss` node for every differentiable leaf.
    // Dense: indexed by NodeId, empty tensor when the leaf got no gradient.
    std::vector<Tensor> backward(NodeId loss) const;

    // Truncate the tape back to `watermark` nodes, freeing everything
    // recorded after it (leaves below the watermark stay valid). Lets a
    // sampler reuse one graph across many forward-only evaluations.
    size_t mark() const { return nodes_.size(); }
    void rollback(size_t watermark);

private:
    enum class Op : uint8_t {
        kLeaf, kConst,
        kAdd, kSub, kMul, kScale, kAddScalar,
        kMatMul, kAttention, kTranspose, kReshape, kBroadcast, kConcat, kSlice,
        kRelu, kGelu, kTanh, kSigmoid, kSoftplus, kExp, kLog,
        kSoftmax, kLayerNorm,
        kEmbedding, kSum, kMean, kStopGrad,
    };

    struct Node {
        Op op;
        std::vector<NodeId> parents;
        Tensor value;
        bool needs_grad = false;
        // op-specific attributes
        double scalar = 0.0;
        int axis0 = 0, axis1 = 0;
        int64_t start = 0, len = 0;
        std::vector<int64_t> ints;  // indices / original shape
        Tensor saved;               // extra forward state (e.g. layernorm inv-std)
    };

    NodeId push(Node n);
    const Node& node(NodeId id) const;
    static const char* op_name(Op op);

    std::vector<Node> nodes_;
};

// Shared raw kernels (also used by the backward pass and plain-tensor code).
std::vector<int64_t> broadcast_shapes(const std::vector<int64_t>& a, const std::vector<int64_t>& b);
Tensor reduce_to_shape(const Tensor& g, const std::vector<int64_t>& shape);

}  // namespace mind
