// Copyright 2026 The ccgeom Authors.
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

#pragma once

#include <string_view>

#include "ccgeom/geometry.hpp"

namespace ccgeom::distributions {

/// Full tangent space of R^n with the coordinate frame.
Distribution euclidean(int n);

/// Constant span of the first k coordinate axes of R^n.
Distribution coordinate_plane(int k, int n);

/// Frame (1, 0, -y/2), (0, 1, x/2) on R^3.
Distribution heisenberg();

/// Frame (1, 0, 0), (0, 1, x^2) on R^3.
Distribution martinet();

/// Resolves "euclidean:n", "plane:k-of-n", "heisenberg" and "martinet".
/// Throws std::invalid_argument for anything else.
Distribution parse(std::string_view spec);

}  // namespace ccgeom::distributions
