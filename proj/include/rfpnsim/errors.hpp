// Copyright 2026 The rfpnsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RFPNSIM_ERRORS_HPP
#define RFPNSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rfpnsim {

/// Analog network matrix is numerically rank deficient, so a projector or
/// least-squares stage cannot be formed.
class SingularNetworkError : public std::runtime_error {
 public:
  explicit SingularNetworkError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Effective channel seen by the zero-forcing stage has rank below the
/// requested stream count. Trials hitting this are recorded as failed,
/// not aborted.
class RankDeficientChannelError : public std::runtime_error {
 public:
  explicit RankDeficientChannelError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rfpnsim

#endif  // RFPNSIM_ERRORS_HPP
