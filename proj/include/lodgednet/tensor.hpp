#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lodgednet/error.hpp"

namespace lodgednet {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_to_string(const Shape& shape);

namespace detail {

// One node of the reverse-mode graph. Tensors are immutable once an op has
// written them; `backprop` reads this node's grad and accumulates into the
// parents' grads.
template <typename T>
struct TensorNode {
    Shape shape;
    std::vector<T> data;
    std::vector<T> grad; // empty until needed, then data.size() zeros
    bool requires_grad = false;
    std::vector<std::shared_ptr<TensorNode>> parents;
    std::function<void(TensorNode&)> backprop;

    std::size_t numel() const { return data.size(); }

    void ensure_grad() {
        if (grad.empty()) grad.assign(data.size(), T(0));
    }
};

} // namespace detail

// Dense row-major tensor participating in a reverse-mode gradient graph.
// Copies are shallow (shared node); ops never mutate their inputs.
template <typename T>
class Tensor {
public:
    using Scalar = T;
    using Node = detail::TensorNode<T>;

    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, T value);
    static Tensor from_data(Shape shape, std::vector<T> data,
                            bool requires_grad = false);

    bool defined() const { return node_ != nullptr; }

    const Shape& shape() const { return node_->shape; }
    std::size_t ndim() const { return node_->shape.size(); }
    std::size_t dim(std::size_t axis) const { return node_->shape.at(axis); }
    std::size_t size() const { return node_->data.size(); }

    std::span<T> data() { return node_->data; }
    std::span<const T> data() const { return node_->data; }

    // Value of a rank-0 or single-element tensor.
    T item() const;

    bool requires_grad() const { return node_->requires_grad; }
    void set_requires_grad(bool v) { node_->requires_grad = v; }

    bool has_grad() const { return !node_->grad.empty(); }
    std::span<T> grad();             // allocates zeros on first use
    std::span<const T> grad() const; // empty span when never touched
    void zero_grad();

    // Reverse pass from this (scalar) tensor: seeds grad with 1 and runs
    // every reachable backprop function in reverse topological order.
    void backward();

    // Same data, detached from the graph.
    Tensor detached() const;

    // --- graph construction, used by the ops layer ---
    static Tensor make_op_result(Shape shape, std::vector<T> data,
                                 std::vector<Tensor> parents,
                                 std::function<void(Node&)> backprop);
    std::shared_ptr<Node> node() const { return node_; }

private:
    explicit Tensor(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    std::shared_ptr<Node> node_;
};

extern template class Tensor<float>;
extern template class Tensor<double>;

} // namespace lodgednet
