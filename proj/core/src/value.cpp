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

#include "tinytt/value.hpp"

namespace tinytt {

Value fresh_var(Level level) { return Value::make(VNeutral{level, {}}); }

Value push_frame(const VNeutral& n, Frame frame) {
  VNeutral out{n.head, n.spine};
  out.spine.push_back(std::move(frame));
  return Value::make(std::move(out));
}

}  // namespace tinytt
