// SPDX-License-Identifier: Apache-2.0
//
// robustma: movable-antenna placement and robust beamforming under imperfect CSI
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace robustma {

/// Base class of every exception thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A scalar argument violates an operation's precondition.
class invalid_parameter : public error {
  public:
    using error::error;
};

/// The estimated channel has zero norm, so no beamforming direction exists.
class degenerate_channel : public error {
  public:
    using error::error;
};

/// The requested antenna count cannot be placed under the spacing constraint.
class infeasible_placement : public error {
  public:
    using error::error;
};

/// An exhaustive-search instance exceeds the enumeration guard.
class enumeration_limit : public error {
  public:
    using error::error;
};

/// A closed-form expression lost internal consistency (numerical failure).
class numeric_error : public error {
  public:
    using error::error;
};

/// File input or output failed; the message names the offending path.
class io_error : public error {
  public:
    using error::error;
};

} // namespace robustma
