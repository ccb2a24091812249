#pragma once

#include <cstddef>
#include <span>

#include "lodgednet/rng.hpp"
#include "lodgednet/tensor.hpp"

namespace lodgednet {

enum class Mode { train, eval };

// 3x3 convolution, zero padding 1, stride 1. input [N,Cin,H,W],
// weight [Cout,Cin,3,3], bias [Cout] -> [N,Cout,H,W].
template <typename T>
Tensor<T> conv2d(const Tensor<T>& input, const Tensor<T>& weight,
                 const Tensor<T>& bias);

// 2x2 max pooling, stride 2. Requires even H and W. Gradient flows to the
// first (row-major) maximum of each window.
template <typename T>
Tensor<T> maxpool2d(const Tensor<T>& input);

template <typename T>
Tensor<T> relu(const Tensor<T>& input);

// Inverted elementwise dropout. Train mode zeroes each element with
// probability `rate` and scales survivors by 1/(1-rate); eval mode and
// rate 0 are the identity. `rng` may be null outside train mode.
template <typename T>
Tensor<T> dropout(const Tensor<T>& input, double rate, Mode mode, Rng* rng);

// As dropout, but zeroes whole channels of a [N,C,H,W] tensor. Mask draws
// are ordered sample-major, then channel.
template <typename T>
Tensor<T> spatial_dropout(const Tensor<T>& input, double rate, Mode mode,
                          Rng* rng);

// Affine map x W^T + b. input [N,Fin], weight [Fout,Fin], bias [Fout].
template <typename T>
Tensor<T> dense(const Tensor<T>& input, const Tensor<T>& weight,
                const Tensor<T>& bias);

// [N, d1, d2, ...] -> [N, d1*d2*...].
template <typename T>
Tensor<T> flatten2d(const Tensor<T>& input);

// [N,A] ++ [N,B] -> [N,A+B]. Gradient splits back into both branches.
template <typename T>
Tensor<T> concat_cols(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
struct SoftmaxLoss {
    Tensor<T> loss;          // scalar, in the gradient graph
    Tensor<T> probabilities; // [N,K], detached
};

// Numerically stable softmax + mean negative log-likelihood. The backward
// rule seeds d(logits) = (p - onehot)/N.
template <typename T>
SoftmaxLoss<T> softmax_cross_entropy(const Tensor<T>& logits,
                                     std::span<const std::size_t> targets);

// Softmax probabilities only, outside the gradient graph.
template <typename T>
Tensor<T> softmax(const Tensor<T>& logits);

extern template Tensor<float> conv2d(const Tensor<float>&, const Tensor<float>&, const Tensor<float>&);
extern template Tensor<double> conv2d(const Tensor<double>&, const Tensor<double>&, const Tensor<double>&);
extern template Tensor<float> maxpool2d(const Tensor<float>&);
extern template Tensor<double> maxpool2d(const Tensor<double>&);
extern template Tensor<float> relu(const Tensor<float>&);
extern template Tensor<double> relu(const Tensor<double>&);
extern template Tensor<float> dropout(const Tensor<float>&, double, Mode, Rng*);
extern template Tensor<double> dropout(const Tensor<double>&, double, Mode, Rng*);
extern template Tensor<float> spatial_dropout(const Tensor<float>&, double, Mode, Rng*);
extern template Tensor<double> spatial_dropout(const Tensor<double>&, double, Mode, Rng*);
extern template Tensor<float> dense(const Tensor<float>&, const Tensor<float>&, const Tensor<float>&);
extern template Tensor<double> dense(const Tensor<double>&, const Tensor<double>&, const Tensor<double>&);
extern template Tensor<float> flatten2d(const Tensor<float>&);
extern template Tensor<double> flatten2d(const Tensor<double>&);
extern template Tensor<float> concat_cols(const Tensor<float>&, const Tensor<float>&);
extern template Tensor<double> concat_cols(const Tensor<double>&, const Tensor<double>&);
extern template SoftmaxLoss<float> softmax_cross_entropy(const Tensor<float>&, std::span<const std::size_t>);
extern template SoftmaxLoss<double> softmax_cross_entropy(const Tensor<double>&, std::span<const std::size_t>);
extern template Tensor<float> softmax(const Tensor<float>&);
extern template Tensor<double> softmax(const Tensor<double>&);

} // namespace lodgednet
