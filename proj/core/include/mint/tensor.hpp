//
// Copyright 2026 The Mintlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MINT_TENSOR_HPP_
#define MINT_TENSOR_HPP_

#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mint/errors.hpp"

namespace mint {

// Dimension list, outermost first. Layout is row-major and channel-last:
// images are N x H x W x C.
using Shape = std::vector<int>;

inline std::int64_t shape_numel(const Shape& shape) {
  std::int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

inline std::string shape_str(const Shape& shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

// Tensor handle with shared storage. Copies alias the same buffer (like the
// usual deep-learning tensor semantics); clone() makes a deep copy. The
// gradient buffer lives beside the values so a tape closure holding a handle
// can accumulate into it after the forward pass returns.
template <typename T>
class TensorT {
 public:
  struct Storage {
    Shape shape;
    std::vector<T> values;
    std::vector<T> grad;  // empty until ensure_grad()
    bool requires_grad = false;
  };

  TensorT() : s_(std::make_shared<Storage>()) {}

  explicit TensorT(Shape shape, T fill = T{}) : s_(std::make_shared<Storage>()) {
    for (int d : shape)
      check_config(d > 0, "tensor dims must be positive, got ", shape_str(shape));
    s_->shape = std::move(shape);
    s_->values.assign(static_cast<std::size_t>(shape_numel(s_->shape)), fill);
  }

  TensorT(Shape shape, std::vector<T> values) : s_(std::make_shared<Storage>()) {
    check_config(static_cast<std::int64_t>(values.size()) == shape_numel(shape),
                 "tensor data length ", values.size(), " does not match shape ",
                 shape_str(shape));
    s_->shape = std::move(shape);
    s_->values = std::move(values);
  }

  const Shape& shape() const { return s_->shape; }
  int dim(std::size_t i) const { return s_->shape.at(i); }
  int ndim() const { return static_cast<int>(s_->shape.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(s_->values.size()); }

  std::span<T> data() { return s_->values; }
  std::span<const T> data() const { return s_->values; }
  T* ptr() { return s_->values.data(); }
  const T* ptr() const { return s_->values.data(); }

  T item() const {
    check_config(size() == 1, "item() on non-scalar tensor ", shape_str(shape()));
    return s_->values[0];
  }

  bool requires_grad() const { return s_->requires_grad; }
  TensorT& set_requires_grad(bool v) {
    s_->requires_grad = v;
    return *this;
  }

  bool has_grad() const { return !s_->grad.empty(); }

  // Zero-initialized on first use; same shape as the values.
  std::span<T> ensure_grad() {
    if (s_->grad.empty()) s_->grad.assign(s_->values.size(), T{});
    return s_->grad;
  }

  std::span<const T> grad() const { return s_->grad; }
  std::span<T> grad() { return s_->grad; }

  void clear_grad() { s_->grad.clear(); }

  TensorT clone() const {
    TensorT t(s_->shape, s_->values);
    t.s_->requires_grad = s_->requires_grad;
    return t;
  }

  bool all_finite() const {
    for (const T& v : s_->values)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  bool same_storage(const TensorT& other) const { return s_ == other.s_; }

 private:
  std::shared_ptr<Storage> s_;

  template <typename U>
  friend class TensorT;
};

using Tensor = TensorT<float>;

}  // namespace mint

#endif  // MINT_TENSOR_HPP_
