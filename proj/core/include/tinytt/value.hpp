// Copyright 2026 The tinytt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TINYTT_VALUE_HPP
#define TINYTT_VALUE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tinytt/term.hpp"

namespace tinytt {

/// De Bruijn level: position of a bound variable counted from the outside.
using Level = std::uint32_t;

struct ValueNode;

/// Immutable, shareable handle to a semantic value.
class Value {
 public:
  Value() = default;

  template <typename T>
  static Value make(T&& node);

  [[nodiscard]] const ValueNode& node() const noexcept { return *node_; }

  template <typename T>
  [[nodiscard]] const T* as() const noexcept;

  template <typename T>
  [[nodiscard]] bool is() const noexcept { return as<T>() != nullptr; }

  explicit operator bool() const noexcept { return node_ != nullptr; }

 private:
  std::shared_ptr<const ValueNode> node_;
};

using Env = std::vector<Value>;

/// A term with one extra free variable, paired with the environment that
/// supplies every other free variable.
struct Closure {
  Env env;
  Term body;
  std::string hint;
};

struct VUniverse {
  std::uint32_t level = 0;
};
struct VPi {
  Value domain;
  Closure codomain;
};
struct VLambda {
  Closure body;
};
struct VSigma {
  Value first;
  Closure second;
};
struct VPair {
  Value first;
  Value second;
};
struct VId {
  Value type;
  Value lhs;
  Value rhs;
};
struct VRefl {};
struct VEmpty {};
struct VUnit {};
struct VTT {};
struct VNat {};
struct VZero {};
struct VSucc {
  Value pred;
};

// Eliminations stuck on a neutral. Each stores the evaluated non-target
// arguments of its eliminator.
struct FApp {
  Value arg;
};
struct FFst {};
struct FSnd {};
struct FJ {
  Value type, base, motive, kase, target;
};
struct FK {
  Value type, base, motive, kase;
};
struct FAbsurd {
  Value motive;
};
struct FNatElim {
  Value motive, zcase, scase;
};
using Frame = std::variant<FApp, FFst, FSnd, FJ, FK, FAbsurd, FNatElim>;

/// A free variable (by level) followed by a spine of stuck eliminations.
struct VNeutral {
  Level head = 0;
  std::vector<Frame> spine;
};

struct ValueNode {
  std::variant<VUniverse, VPi, VLambda, VSigma, VPair, VId, VRefl, VEmpty, VUnit, VTT, VNat,
               VZero, VSucc, VNeutral>
      v;
};

template <typename T>
Value Value::make(T&& node) {
  Value out;
  out.node_ = std::make_shared<const ValueNode>(ValueNode{std::forward<T>(node)});
  return out;
}

template <typename T>
const T* Value::as() const noexcept {
  return node_ ? std::get_if<T>(&node_->v) : nullptr;
}

/// The neutral value for the variable bound at `level`.
Value fresh_var(Level level);

/// Extends a neutral's spine by one elimination.
Value push_frame(const VNeutral& n, Frame frame);

}  // namespace tinytt

#endif  // TINYTT_VALUE_HPP
