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

#ifndef MINT_TAPE_HPP_
#define MINT_TAPE_HPP_

#include <functional>
#include <vector>

#include "mint/errors.hpp"
#include "mint/tensor.hpp"

namespace mint {

// Reverse-mode tape. Each op that sees a grad-requiring input pushes a
// closure that propagates the output gradient to its inputs; backward()
// replays the closures in reverse execution order. A tape belongs to exactly
// one training step; it is cleared by backward().
template <typename T>
class TapeT {
 public:
  void record(std::function<void()> fn) { steps_.push_back(std::move(fn)); }

  std::size_t size() const { return steps_.size(); }

  void clear() { steps_.clear(); }

  // Seeds d(loss)/d(loss) = 1 and accumulates gradients into every
  // requires_grad tensor reachable from the loss. Gradients add across
  // multiple uses of the same tensor.
  void backward(TensorT<T>& loss) {
    check_config(loss.size() == 1, "backward: loss must be scalar, got ",
                 shape_str(loss.shape()));
    auto g = loss.ensure_grad();
    g[0] += T{1};
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) (*it)();
    steps_.clear();
  }

 private:
  std::vector<std::function<void()>> steps_;
};

using Tape = TapeT<float>;

}  // namespace mint

#endif  // MINT_TAPE_HPP_
