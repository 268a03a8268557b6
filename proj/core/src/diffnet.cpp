#include "ecgvae/diffnet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace ecgvae {

// ---------------------------------------------------------------------------
// ParamStore
// ---------------------------------------------------------------------------

Param& ParamStore::create(const std::string& path, Tensor init) {
    auto [it, inserted] = params_.try_emplace(path);
    if (!inserted) {
        throw std::invalid_argument("ParamStore: duplicate parameter path '" + path + "'");
    }
    it->second.grad = Tensor::zeros(init.shape);
    it->second.value = std::move(init);
    return it->second;
}

Param& ParamStore::at(const std::string& path) {
    auto it = params_.find(path);
    if (it == params_.end()) {
        throw std::invalid_argument("ParamStore: unknown parameter path '" + path + "'");
    }
    return it->second;
}

const Param& ParamStore::at(const std::string& path) const {
    auto it = params_.find(path);
    if (it == params_.end()) {
        throw std::invalid_argument("ParamStore: unknown parameter path '" + path + "'");
    }
    return it->second;
}

bool ParamStore::contains(const std::string& path) const {
    return params_.find(path) != params_.end();
}

void ParamStore::zero_grads() {
    for (auto& [path, p] : params_) {
        p.grad.fill(0.0);
    }
    pending_backward_passes_ = 0;
}

void ParamStore::scale_grads(double factor) {
    for (auto& [path, p] : params_) {
        for (double& g : p.grad.values) g *= factor;
    }
}

std::size_t ParamStore::scalar_count() const {
    std::size_t n = 0;
    for (const auto& [path, p] : params_) n += p.value.size();
    return n;
}

// ---------------------------------------------------------------------------
// Tape plumbing
// ---------------------------------------------------------------------------

Tape::NodeId Tape::push(Tensor value, std::function<void(Tape&, Node&)> backprop) {
    Node node;
    node.storage = std::move(value);
    node.view = nullptr;
    node.backprop = std::move(backprop);
    nodes_.push_back(std::move(node));
    return static_cast<NodeId>(nodes_.size() - 1);
}

Tape::NodeId Tape::push_view(const Tensor* view) {
    Node node;
    node.view = view;
    nodes_.push_back(std::move(node));
    return static_cast<NodeId>(nodes_.size() - 1);
}

void Tape::check_id(NodeId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
        throw std::invalid_argument("Tape: node id out of range");
    }
}

const Tensor& Tape::value(NodeId id) const {
    check_id(id);
    return value_of(id);
}

const Tensor& Tape::grad(NodeId id) const {
    check_id(id);
    return nodes_[static_cast<std::size_t>(id)].grad;
}

void Tape::reset() {
    nodes_.clear();
    bindings_.clear();
    bound_store_ = nullptr;
}

Tape::NodeId Tape::constant(Tensor value) {
    return push(std::move(value), nullptr);
}

Tape::NodeId Tape::param(ParamStore& store, const std::string& path) {
    Param& p = store.at(path);
    if (bound_store_ != nullptr && bound_store_ != &store) {
        throw std::invalid_argument("Tape: parameters from multiple stores on one tape");
    }
    bound_store_ = &store;
    const NodeId id = push_view(&p.value);
    bindings_.emplace_back(id, &p);
    return id;
}

Tape::NodeId Tape::frozen_param(const ParamStore& store, const std::string& path) {
    return push_view(&store.at(path).value);
}

void Tape::backward(NodeId loss) {
    check_id(loss);
    if (value_of(loss).size() != 1) {
        throw std::invalid_argument("Tape::backward: loss must be a scalar node");
    }
    for (Node& n : nodes_) {
        const Tensor& v = node_value(n);
        if (!n.grad.same_shape(v)) {
            n.grad = Tensor::zeros(v.shape);
        } else {
            n.grad.fill(0.0);
        }
    }
    grad_of(loss).values[0] = 1.0;
    for (NodeId id = loss; id >= 0; --id) {
        Node& n = nodes_[static_cast<std::size_t>(id)];
        if (n.backprop) n.backprop(*this, n);
    }
    for (auto& [id, p] : bindings_) {
        const Tensor& g = nodes_[static_cast<std::size_t>(id)].grad;
        for (std::size_t i = 0; i < g.size(); ++i) p->grad.values[i] += g.values[i];
    }
    if (bound_store_ != nullptr) bound_store_->note_backward();
}

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

Tape::NodeId Tape::dense(NodeId x, NodeId weight, NodeId bias) {
    const Tensor& xv = value(x);
    const Tensor& wv = value(weight);
    const Tensor& bv = value(bias);
    if (xv.rank() != 1 || wv.rank() != 2 || bv.rank() != 1) {
        throw std::invalid_argument("dense: expected ranks x:1 weight:2 bias:1");
    }
    const std::size_t n_in = xv.dim(0);
    const std::size_t n_out = wv.dim(0);
    if (wv.dim(1) != n_in || bv.dim(0) != n_out) {
        throw std::invalid_argument("dense: shape mismatch, weight " + shape_to_string(wv.shape) +
                                    " x " + shape_to_string(xv.shape) + " bias " +
                                    shape_to_string(bv.shape));
    }
    Tensor out = Tensor::zeros({n_out});
    {
        const double* xd = xv.data();
        const double* wd = wv.data();
        const double* bd = bv.data();
        double* od = out.data();
        for (std::size_t i = 0; i < n_out; ++i) {
            const double* row = wd + i * n_in;
            double acc = bd[i];
            for (std::size_t j = 0; j < n_in; ++j) acc += row[j] * xd[j];
            od[i] = acc;
        }
    }
    return push(std::move(out), [x, weight, bias, n_in, n_out](Tape& t, Node& self) {
        const double* g = self.grad.data();
        const double* xd = t.value_of(x).data();
        const double* wd = t.value_of(weight).data();
        double* gx = t.grad_of(x).data();
        double* gw = t.grad_of(weight).data();
        double* gb = t.grad_of(bias).data();
        for (std::size_t i = 0; i < n_out; ++i) {
            const double gi = g[i];
            if (gi == 0.0) continue;
            const double* row = wd + i * n_in;
            double* grow = gw + i * n_in;
            for (std::size_t j = 0; j < n_in; ++j) {
                gx[j] += gi * row[j];
                grow[j] += gi * xd[j];
            }
            gb[i] += gi;
        }
    });
}

namespace {

// Valid kernel-tap range [dk_lo, dk_hi) for one conv output position, where
// input index = base + dk and base may reach into the zero padding.
inline void tap_range(std::ptrdiff_t base, std::size_t len, std::size_t k, std::size_t& dk_lo,
                      std::size_t& dk_hi) {
    dk_lo = base < 0 ? static_cast<std::size_t>(-base) : 0;
    const std::ptrdiff_t room = static_cast<std::ptrdiff_t>(len) - base;
    dk_hi = room <= 0 ? dk_lo : std::min(k, static_cast<std::size_t>(room));
    if (dk_hi < dk_lo) dk_hi = dk_lo;
}

}  // namespace

Tape::NodeId Tape::conv1d(NodeId x, NodeId kernels, NodeId bias, int stride, int padding) {
    const Tensor& xv = value(x);
    const Tensor& kv = value(kernels);
    const Tensor& bv = value(bias);
    if (xv.rank() != 2 || kv.rank() != 3 || bv.rank() != 1) {
        throw std::invalid_argument("conv1d: expected ranks x:2 kernels:3 bias:1");
    }
    if (stride < 1) throw std::invalid_argument("conv1d: stride must be positive");
    if (padding < 0) throw std::invalid_argument("conv1d: padding must be non-negative");
    const std::size_t c_in = xv.dim(0);
    const std::size_t len = xv.dim(1);
    const std::size_t c_out = kv.dim(0);
    const std::size_t k = kv.dim(2);
    if (kv.dim(1) != c_in || bv.dim(0) != c_out) {
        throw std::invalid_argument("conv1d: shape mismatch, kernels " +
                                    shape_to_string(kv.shape) + " x " + shape_to_string(xv.shape));
    }
    const std::size_t padded = len + 2 * static_cast<std::size_t>(padding);
    if (padded < k) {
        throw std::invalid_argument("conv1d: kernel longer than padded input");
    }
    const std::size_t s = static_cast<std::size_t>(stride);
    const std::size_t p = static_cast<std::size_t>(padding);
    const std::size_t l_out = (padded - k) / s + 1;

    Tensor out = Tensor::zeros({c_out, l_out});
    {
        const double* xd = xv.data();
        const double* kd = kv.data();
        const double* bd = bv.data();
        double* od = out.data();
        for (std::size_t co = 0; co < c_out; ++co) {
            for (std::size_t t = 0; t < l_out; ++t) {
                const std::ptrdiff_t base =
                    static_cast<std::ptrdiff_t>(t * s) - static_cast<std::ptrdiff_t>(p);
                std::size_t dk_lo, dk_hi;
                tap_range(base, len, k, dk_lo, dk_hi);
                const std::size_t start = static_cast<std::size_t>(base + static_cast<std::ptrdiff_t>(dk_lo));
                const std::size_t taps = dk_hi - dk_lo;
                double acc = bd[co];
                for (std::size_t ci = 0; ci < c_in; ++ci) {
                    const double* xrow = xd + ci * len + start;
                    const double* krow = kd + (co * c_in + ci) * k + dk_lo;
                    for (std::size_t j = 0; j < taps; ++j) acc += krow[j] * xrow[j];
                }
                od[co * l_out + t] = acc;
            }
        }
    }
    return push(std::move(out),
                [x, kernels, bias, s, p, c_in, c_out, len, k, l_out](Tape& t, Node& self) {
                    const double* g = self.grad.data();
                    const double* xd = t.value_of(x).data();
                    const double* kd = t.value_of(kernels).data();
                    double* gx = t.grad_of(x).data();
                    double* gk = t.grad_of(kernels).data();
                    double* gb = t.grad_of(bias).data();
                    for (std::size_t co = 0; co < c_out; ++co) {
                        for (std::size_t pos = 0; pos < l_out; ++pos) {
                            const double gi = g[co * l_out + pos];
                            if (gi == 0.0) continue;
                            gb[co] += gi;
                            const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(pos * s) -
                                                        static_cast<std::ptrdiff_t>(p);
                            std::size_t dk_lo, dk_hi;
                            tap_range(base, len, k, dk_lo, dk_hi);
                            const std::size_t start =
                                static_cast<std::size_t>(base + static_cast<std::ptrdiff_t>(dk_lo));
                            const std::size_t taps = dk_hi - dk_lo;
                            for (std::size_t ci = 0; ci < c_in; ++ci) {
                                const double* xrow = xd + ci * len + start;
                                double* gxrow = gx + ci * len + start;
                                const double* krow = kd + (co * c_in + ci) * k + dk_lo;
                                double* gkrow = gk + (co * c_in + ci) * k + dk_lo;
                                for (std::size_t j = 0; j < taps; ++j) {
                                    gxrow[j] += gi * krow[j];
                                    gkrow[j] += gi * xrow[j];
                                }
                            }
                        }
                    }
                });
}

Tape::NodeId Tape::conv1d_transpose(NodeId x, NodeId kernels, NodeId bias, int stride) {
    const Tensor& xv = value(x);
    const Tensor& kv = value(kernels);
    const Tensor& bv = value(bias);
    if (xv.rank() != 2 || kv.rank() != 3 || bv.rank() != 1) {
        throw std::invalid_argument("conv1d_transpose: expected ranks x:2 kernels:3 bias:1");
    }
    if (stride < 1) throw std::invalid_argument("conv1d_transpose: stride must be positive");
    const std::size_t c_in = xv.dim(0);
    const std::size_t len = xv.dim(1);
    const std::size_t c_out = kv.dim(1);
    const std::size_t k = kv.dim(2);
    if (kv.dim(0) != c_in || bv.dim(0) != c_out) {
        throw std::invalid_argument("conv1d_transpose: shape mismatch, kernels " +
                                    shape_to_string(kv.shape) + " x " + shape_to_string(xv.shape));
    }
    if (len < 1) throw std::invalid_argument("conv1d_transpose: empty input");
    const std::size_t s = static_cast<std::size_t>(stride);
    const std::size_t l_out = (len - 1) * s + k;

    Tensor out = Tensor::zeros({c_out, l_out});
    {
        const double* xd = xv.data();
        const double* kd = kv.data();
        const double* bd = bv.data();
        double* od = out.data();
        for (std::size_t co = 0; co < c_out; ++co) {
            double* orow = od + co * l_out;
            for (std::size_t u = 0; u < l_out; ++u) orow[u] = bd[co];
            for (std::size_t ci = 0; ci < c_in; ++ci) {
                const double* krow = kd + (ci * c_out + co) * k;
                const double* xrow = xd + ci * len;
                for (std::size_t t = 0; t < len; ++t) {
                    const double xt = xrow[t];
                    double* dst = orow + t * s;
                    for (std::size_t dk = 0; dk < k; ++dk) dst[dk] += krow[dk] * xt;
                }
            }
        }
    }
    return push(std::move(out), [x, kernels, bias, s, c_in, c_out, len, k, l_out](Tape& t,
                                                                                  Node& self) {
        const double* g = self.grad.data();
        const double* xd = t.value_of(x).data();
        const double* kd = t.value_of(kernels).data();
        double* gx = t.grad_of(x).data();
        double* gk = t.grad_of(kernels).data();
        double* gb = t.grad_of(bias).data();
        for (std::size_t co = 0; co < c_out; ++co) {
            const double* grow = g + co * l_out;
            double bacc = 0.0;
            for (std::size_t u = 0; u < l_out; ++u) bacc += grow[u];
            gb[co] += bacc;
            for (std::size_t ci = 0; ci < c_in; ++ci) {
                const double* krow = kd + (ci * c_out + co) * k;
                double* gkrow = gk + (ci * c_out + co) * k;
                const double* xrow = xd + ci * len;
                double* gxrow = gx + ci * len;
                for (std::size_t t2 = 0; t2 < len; ++t2) {
                    const double* gdst = grow + t2 * s;
                    const double xt = xrow[t2];
                    double acc = 0.0;
                    for (std::size_t dk = 0; dk < k; ++dk) {
                        acc += krow[dk] * gdst[dk];
                        gkrow[dk] += xt * gdst[dk];
                    }
                    gxrow[t2] += acc;
                }
            }
        }
    });
}

Tape::NodeId Tape::relu(NodeId x) {
    const Tensor& xv = value(x);
    Tensor out = xv;
    for (double& v : out.values) v = v > 0.0 ? v : 0.0;
    return push(std::move(out), [x](Tape& t, Node& self) {
        const double* g = self.grad.data();
        const double* xd = t.value_of(x).data();
        double* gx = t.grad_of(x).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (xd[i] > 0.0) gx[i] += g[i];  // subgradient at 0 is 0
        }
    });
}

Tape::NodeId Tape::softmax(NodeId logits) {
    const Tensor& xv = value(logits);
    if (xv.rank() != 1 || xv.size() < 1) {
        throw std::invalid_argument("softmax: expected a non-empty rank-1 tensor");
    }
    Tensor out = Tensor::zeros(xv.shape);
    {
        const double m = *std::max_element(xv.values.begin(), xv.values.end());
        double sum = 0.0;
        for (std::size_t i = 0; i < xv.size(); ++i) {
            out.values[i] = std::exp(xv.values[i] - m);
            sum += out.values[i];
        }
        for (double& v : out.values) v /= sum;
    }
    return push(std::move(out), [logits](Tape& t, Node& self) {
        const double* g = self.grad.data();
        const double* p = node_value(self).data();
        double* gx = t.grad_of(logits).data();
        const std::size_t n = self.grad.size();
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += g[i] * p[i];
        for (std::size_t i = 0; i < n; ++i) gx[i] += p[i] * (g[i] - dot);
    });
}

Tape::NodeId Tape::add(NodeId a, NodeId b) {
    const Tensor& av = value(a);
    const Tensor& bv = value(b);
    if (!av.same_shape(bv)) {
        throw std::invalid_argument("add: shape mismatch " + shape_to_string(av.shape) + " vs " +
                                    shape_to_string(bv.shape));
    }
    Tensor out = av;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += bv.values[i];
    return push(std::move(out), [a, b](Tape& t, Node& self) {
        const double* g = self.grad.data();
        double* ga = t.grad_of(a).data();
        double* gb = t.grad_of(b).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < n; ++i) {
            ga[i] += g[i];
            gb[i] += g[i];
        }
    });
}

Tape::NodeId Tape::concat(NodeId a, NodeId b) {
    const Tensor& av = value(a);
    const Tensor& bv = value(b);
    if (av.rank() != 1 || bv.rank() != 1) {
        throw std::invalid_argument("concat: rank-1 operands required");
    }
    Tensor out = Tensor::zeros({av.size() + bv.size()});
    std::copy(av.values.begin(), av.values.end(), out.values.begin());
    std::copy(bv.values.begin(), bv.values.end(),
              out.values.begin() + static_cast<std::ptrdiff_t>(av.size()));
    const std::size_t na = av.size();
    return push(std::move(out), [a, b, na](Tape& t, Node& self) {
        const double* g = self.grad.data();
        double* ga = t.grad_of(a).data();
        double* gb = t.grad_of(b).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < na; ++i) ga[i] += g[i];
        for (std::size_t i = na; i < n; ++i) gb[i - na] += g[i];
    });
}

Tape::NodeId Tape::reshape(NodeId x, std::vector<std::size_t> shape) {
    const Tensor& xv = value(x);
    if (shape_product(shape) != xv.size()) {
        throw std::invalid_argument("reshape: element count mismatch");
    }
    Tensor out(std::move(shape), xv.values);
    return push(std::move(out), [x](Tape& t, Node& self) {
        const double* g = self.grad.data();
        double* gx = t.grad_of(x).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < n; ++i) gx[i] += g[i];
    });
}

Tape::NodeId Tape::clamp(NodeId x, double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("clamp: lo > hi");
    const Tensor& xv = value(x);
    Tensor out = xv;
    for (double& v : out.values) v = std::min(std::max(v, lo), hi);
    return push(std::move(out), [x, lo, hi](Tape& t, Node& self) {
        const double* g = self.grad.data();
        const double* xd = t.value_of(x).data();
        double* gx = t.grad_of(x).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (xd[i] > lo && xd[i] < hi) gx[i] += g[i];
        }
    });
}

Tape::NodeId Tape::reparam_sample(NodeId mu, NodeId log_var, Tensor eps) {
    const Tensor& mv = value(mu);
    const Tensor& lv = value(log_var);
    if (!mv.same_shape(lv) || !mv.same_shape(eps)) {
        throw std::invalid_argument("reparam_sample: mu/log_var/eps shape mismatch");
    }
    Tensor out = Tensor::zeros(mv.shape);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.values[i] = mv.values[i] + std::exp(0.5 * lv.values[i]) * eps.values[i];
    }
    auto eps_held = std::make_shared<Tensor>(std::move(eps));
    return push(std::move(out), [mu, log_var, eps_held](Tape& t, Node& self) {
        const double* g = self.grad.data();
        const double* lvd = t.value_of(log_var).data();
        const double* ed = eps_held->data();
        double* gmu = t.grad_of(mu).data();
        double* glv = t.grad_of(log_var).data();
        const std::size_t n = self.grad.size();
        for (std::size_t i = 0; i < n; ++i) {
            gmu[i] += g[i];
            glv[i] += g[i] * 0.5 * std::exp(0.5 * lvd[i]) * ed[i];
        }
    });
}

Tape::NodeId Tape::half_sum_squared_error(NodeId prediction, Tensor target) {
    const Tensor& pv = value(prediction);
    if (!pv.same_shape(target)) {
        throw std::invalid_argument("half_sum_squared_error: shape mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const double d = pv.values[i] - target.values[i];
        acc += d * d;
    }
    auto target_held = std::make_shared<Tensor>(std::move(target));
    return push(Tensor::scalar(0.5 * acc), [prediction, target_held](Tape& t, Node& self) {
        const double g = self.grad.values[0];
        const double* pd = t.value_of(prediction).data();
        const double* td = target_held->data();
        double* gp = t.grad_of(prediction).data();
        const std::size_t n = target_held->size();
        for (std::size_t i = 0; i < n; ++i) gp[i] += g * (pd[i] - td[i]);
    });
}

Tape::NodeId Tape::kl_to_standard_normal(NodeId mu, NodeId log_var) {
    const Tensor& mv = value(mu);
    const Tensor& lv = value(log_var);
    if (!mv.same_shape(lv)) {
        throw std::invalid_argument("kl_to_standard_normal: mu/log_var shape mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < mv.size(); ++i) {
        const double m = mv.values[i];
        const double l = lv.values[i];
        acc += 1.0 + l - m * m - std::exp(l);
    }
    // exact closed form is >= 0; the max() only absorbs last-ulp rounding
    const double kl = std::max(0.0, -0.5 * acc);
    return push(Tensor::scalar(kl), [mu, log_var](Tape& t, Node& self) {
        const double g = self.grad.values[0];
        const double* md = t.value_of(mu).data();
        const double* lvd = t.value_of(log_var).data();
        double* gmu = t.grad_of(mu).data();
        double* glv = t.grad_of(log_var).data();
        const std::size_t n = t.value_of(mu).size();
        for (std::size_t i = 0; i < n; ++i) {
            gmu[i] += g * md[i];
            glv[i] += g * 0.5 * (std::exp(lvd[i]) - 1.0);
        }
    });
}

Tape::NodeId Tape::negative_log_prob(NodeId probs, int label) {
    const Tensor& pv = value(probs);
    if (pv.rank() != 1) throw std::invalid_argument("negative_log_prob: rank-1 probs required");
    if (label < 0 || static_cast<std::size_t>(label) >= pv.size()) {
        throw std::invalid_argument("negative_log_prob: label out of range");
    }
    const double p = pv.values[static_cast<std::size_t>(label)];
    return push(Tensor::scalar(-std::log(p)), [probs, label](Tape& t, Node& self) {
        const double g = self.grad.values[0];
        const double p2 = t.value_of(probs).values[static_cast<std::size_t>(label)];
        t.grad_of(probs).values[static_cast<std::size_t>(label)] -= g / p2;
    });
}

Tape::NodeId Tape::weighted_total(NodeId classifier, double classifier_weight,
                                  NodeId reconstruction, NodeId kl) {
    const Tensor& cv = value(classifier);
    const Tensor& rv = value(reconstruction);
    const Tensor& kv = value(kl);
    if (cv.size() != 1 || rv.size() != 1 || kv.size() != 1) {
        throw std::invalid_argument("weighted_total: scalar terms required");
    }
    const double total = classifier_weight * cv.values[0] + rv.values[0] + kv.values[0];
    return push(Tensor::scalar(total),
                [classifier, classifier_weight, reconstruction, kl](Tape& t, Node& self) {
                    const double g = self.grad.values[0];
                    t.grad_of(classifier).values[0] += classifier_weight * g;
                    t.grad_of(reconstruction).values[0] += g;
                    t.grad_of(kl).values[0] += g;
                });
}

Tape::NodeId residual_block(Tape& tape, Tape::NodeId x, Tape::NodeId w1, Tape::NodeId b1,
                            Tape::NodeId w2, Tape::NodeId b2) {
    const std::size_t k1 = tape.value(w1).dim(2);
    const std::size_t k2 = tape.value(w2).dim(2);
    if (k1 % 2 == 0 || k2 % 2 == 0) {
        throw std::invalid_argument("residual_block: odd kernel lengths required");
    }
    auto h = tape.conv1d(x, w1, b1, 1, static_cast<int>((k1 - 1) / 2));
    h = tape.relu(h);
    h = tape.conv1d(h, w2, b2, 1, static_cast<int>((k2 - 1) / 2));
    return tape.add(x, h);
}

}  // namespace ecgvae
