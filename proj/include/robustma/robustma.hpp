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

#include "robustma/channel_model.hpp"
#include "robustma/core.hpp"
#include "robustma/csi_error.hpp"
#include "robustma/errors.hpp"
#include "robustma/experiment.hpp"
#include "robustma/outage_simulator.hpp"
#include "robustma/position_optimizer.hpp"
#include "robustma/robust_analysis.hpp"
