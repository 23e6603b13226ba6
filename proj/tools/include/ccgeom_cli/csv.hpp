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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ccgeom/geometry.hpp"

namespace ccgeom::cli {

/// %.17g, so that values survive a text round trip.
std::string format_double(double v);

/// Header `t,x1,...,xn`, one row per sample.
void write_curve_csv(std::ostream& os, const SampledCurve& curve);
void write_curve_csv(const std::filesystem::path& path, const SampledCurve& curve);

/// Throws MalformedCurveError on a bad header, ragged rows or unparsable numbers.
SampledCurve read_curve_csv(std::istream& is);
SampledCurve read_curve_csv(const std::filesystem::path& path);

}  // namespace ccgeom::cli
