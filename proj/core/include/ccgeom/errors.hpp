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

#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ccgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A frame lost rank at some point of the chart.
class DegenerateFrameError : public Error {
 public:
  DegenerateFrameError(Eigen::VectorXd point, int numerical_rank, int expected_rank,
                       std::optional<double> time = std::nullopt);

  const Eigen::VectorXd& point() const { return point_; }
  int numerical_rank() const { return numerical_rank_; }
  int expected_rank() const { return expected_rank_; }
  /// Integration time at which the collapse was detected, if raised from a flow.
  std::optional<double> time() const { return time_; }

  DegenerateFrameError at_time(double t) const {
    return {point_, numerical_rank_, expected_rank_, t};
  }

 private:
  Eigen::VectorXd point_;
  int numerical_rank_;
  int expected_rank_;
  std::optional<double> time_;
};

class MalformedCurveError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// The CC solver could not close the endpoint gap within its budget.
class UnreachableError : public Error {
 public:
  UnreachableError(const std::string& what, double best_gap)
      : Error(what), best_gap_(best_gap) {}
  double best_gap() const { return best_gap_; }

 private:
  double best_gap_;
};

/// Chain transport did not make progress.
class StagnationError : public Error {
 public:
  StagnationError(const std::string& what, int steps) : Error(what), steps_(steps) {}
  int steps() const { return steps_; }

 private:
  int steps_;
};

std::string format_point(const Eigen::VectorXd& p);

}  // namespace ccgeom
