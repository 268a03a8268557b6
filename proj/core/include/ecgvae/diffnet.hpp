#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ecgvae/tensor.hpp"

namespace ecgvae {

struct Param {
    Tensor value;
    Tensor grad;  // same shape as value, zero until a backward pass runs
};

// Ordered map of named parameters. Lexicographic path order fixes the
// checkpoint layout and the optimizer update order, which keeps training
// bit-reproducible.
class ParamStore {
public:
    Param& create(const std::string& path, Tensor init);
    Param& at(const std::string& path);
    const Param& at(const std::string& path) const;
    bool contains(const std::string& path) const;

    void zero_grads();
    void scale_grads(double factor);

    std::size_t tensor_count() const { return params_.size(); }
    std::size_t scalar_count() const;

    // Number of backward passes accumulated since the last zero_grads().
    int pending_backward_passes() const { return pending_backward_passes_; }
    void note_backward() { ++pending_backward_passes_; }

    auto begin() { return params_.begin(); }
    auto end() { return params_.end(); }
    auto begin() const { return params_.begin(); }
    auto end() const { return params_.end(); }

private:
    std::map<std::string, Param> params_;
    int pending_backward_passes_ = 0;
};

// Dynamic computation tape. Each op appends a node holding the forward value
// and a closure that scatters the node's gradient to its parents. Creation
// order is a topological order, so backward() is a single reverse sweep.
//
// Parameter leaves view the ParamStore tensors (no copy); parameters must not
// change between a forward pass and its backward pass.
class Tape {
public:
    using NodeId = int;

    // Leaves ------------------------------------------------------------
    NodeId constant(Tensor value);
    // Tracked parameter: backward() accumulates into the store's grads.
    NodeId param(ParamStore& store, const std::string& path);
    // Inference-only parameter view; backward() ignores it.
    NodeId frozen_param(const ParamStore& store, const std::string& path);

    // Primitives ----------------------------------------------------------
    // out[i] = bias[i] + sum_j weight[i,j] * x[j]
    NodeId dense(NodeId x, NodeId weight, NodeId bias);
    // Cross-correlation with zero padding. x:[c_in,L] kernels:[c_out,c_in,k]
    NodeId conv1d(NodeId x, NodeId kernels, NodeId bias, int stride, int padding);
    // Scatter-add transpose of conv1d. x:[c_in,L] kernels:[c_in,c_out,k]
    NodeId conv1d_transpose(NodeId x, NodeId kernels, NodeId bias, int stride);
    NodeId relu(NodeId x);
    NodeId softmax(NodeId logits);
    NodeId add(NodeId a, NodeId b);
    NodeId concat(NodeId a, NodeId b);  // rank-1 operands
    NodeId reshape(NodeId x, std::vector<std::size_t> shape);
    NodeId clamp(NodeId x, double lo, double hi);

    // z = mu + exp(0.5*log_var) * eps; eps is a constant input, so the
    // gradient flows to mu and log_var only.
    NodeId reparam_sample(NodeId mu, NodeId log_var, Tensor eps);

    // Loss heads (scalar outputs) ----------------------------------------
    NodeId half_sum_squared_error(NodeId prediction, Tensor target);
    NodeId kl_to_standard_normal(NodeId mu, NodeId log_var);
    NodeId negative_log_prob(NodeId probs, int label);
    NodeId weighted_total(NodeId classifier, double classifier_weight,
                          NodeId reconstruction, NodeId kl);

    // Access --------------------------------------------------------------
    const Tensor& value(NodeId id) const;
    const Tensor& grad(NodeId id) const;
    std::size_t node_count() const { return nodes_.size(); }

    // Zeroes node gradients, seeds d(loss)/d(loss)=1, sweeps the tape in
    // reverse, then adds tracked-parameter gradients into their store.
    // Throws if the tape is empty or `loss` is not a scalar node.
    void backward(NodeId loss);

    void reset();

private:
    struct Node {
        Tensor storage;               // owned value (unused by parameter views)
        const Tensor* value = nullptr;
        Tensor grad;
        std::function<void(Tape&, Node&)> backprop;  // null for leaves
    };

    NodeId push(Tensor value, std::function<void(Tape&, Node&)> backprop);
    NodeId push_view(const Tensor* view);
    Tensor& grad_of(NodeId id) { return nodes_[static_cast<std::size_t>(id)].grad; }
    const Tensor& value_of(NodeId id) const {
        return *nodes_[static_cast<std::size_t>(id)].value;
    }
    void check_id(NodeId id) const;

    std::vector<Node> nodes_;
    std::vector<std::pair<NodeId, Param*>> bindings_;
    ParamStore* bound_store_ = nullptr;
};

// out = x + conv2(relu(conv1(x))), stride 1 and same-length padding on both
// convolutions; kernel lengths must be odd so the inner path preserves shape.
Tape::NodeId residual_block(Tape& tape, Tape::NodeId x, Tape::NodeId w1, Tape::NodeId b1,
                            Tape::NodeId w2, Tape::NodeId b2);

}  // namespace ecgvae
