#include "lodgednet/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace lodgednet {

std::size_t shape_numel(const Shape& shape) {
    std::size_t n = 1;
    for (std::size_t extent : shape) n *= extent;
    return n;
}

std::string shape_to_string(const Shape& shape) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out << ',';
        out << shape[i];
    }
    out << ')';
    return out.str();
}

template <typename T>
Tensor<T> Tensor<T>::zeros(Shape shape, bool requires_grad) {
    for (std::size_t extent : shape) {
        if (extent == 0)
            throw DimensionError("tensor: zero extent in shape " +
                                 shape_to_string(shape));
    }
    auto node = std::make_shared<Node>();
    node->data.assign(shape_numel(shape), T(0));
    node->shape = std::move(shape);
    node->requires_grad = requires_grad;
    return Tensor(std::move(node));
}

template <typename T>
Tensor<T> Tensor<T>::full(Shape shape, T value) {
    Tensor t = zeros(std::move(shape));
    std::fill(t.node_->data.begin(), t.node_->data.end(), value);
    return t;
}

template <typename T>
Tensor<T> Tensor<T>::from_data(Shape shape, std::vector<T> data,
                               bool requires_grad) {
    if (shape_numel(shape) != data.size())
        throw DimensionError("tensor: shape " + shape_to_string(shape) +
                             " expects " + std::to_string(shape_numel(shape)) +
                             " values, got " + std::to_string(data.size()));
    auto node = std::make_shared<Node>();
    node->shape = std::move(shape);
    node->data = std::move(data);
    node->requires_grad = requires_grad;
    return Tensor(std::move(node));
}

template <typename T>
T Tensor<T>::item() const {
    if (size() != 1)
        throw DimensionError("tensor: item() on tensor of shape " +
                             shape_to_string(shape()));
    return node_->data[0];
}

template <typename T>
std::span<T> Tensor<T>::grad() {
    node_->ensure_grad();
    return node_->grad;
}

template <typename T>
std::span<const T> Tensor<T>::grad() const {
    return node_->grad;
}

template <typename T>
void Tensor<T>::zero_grad() {
    std::fill(node_->grad.begin(), node_->grad.end(), T(0));
}

template <typename T>
void Tensor<T>::backward() {
    if (size() != 1)
        throw DimensionError("backward: root must be scalar, got shape " +
                             shape_to_string(shape()));

    // Iterative post-order DFS yields a topological order of the graph.
    std::vector<Node*> order;
    std::unordered_set<Node*> visited;
    std::vector<std::pair<Node*, std::size_t>> stack{{node_.get(), 0}};
    visited.insert(node_.get());
    while (!stack.empty()) {
        auto& [cur, next_child] = stack.back();
        if (next_child < cur->parents.size()) {
            Node* child = cur->parents[next_child++].get();
            if (visited.insert(child).second) stack.emplace_back(child, 0);
        } else {
            order.push_back(cur);
            stack.pop_back();
        }
    }

    node_->ensure_grad();
    node_->grad[0] = T(1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Node* n = *it;
        if (n->backprop && !n->grad.empty()) n->backprop(*n);
    }
}

template <typename T>
Tensor<T> Tensor<T>::detached() const {
    auto node = std::make_shared<Node>();
    node->shape = node_->shape;
    node->data = node_->data;
    return Tensor(std::move(node));
}

template <typename T>
Tensor<T> Tensor<T>::make_op_result(Shape shape, std::vector<T> data,
                                    std::vector<Tensor> parents,
                                    std::function<void(Node&)> backprop) {
    Tensor out = from_data(std::move(shape), std::move(data));
    bool track = false;
    for (const Tensor& p : parents) track = track || p.requires_grad();
    if (track) {
        out.node_->requires_grad = true;
        out.node_->parents.reserve(parents.size());
        for (Tensor& p : parents) out.node_->parents.push_back(p.node_);
        out.node_->backprop = std::move(backprop);
    }
    return out;
}

template class Tensor<float>;
template class Tensor<double>;

} // namespace lodgednet
