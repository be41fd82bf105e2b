// SPDX-License-Identifier: Apache-2.0
//
// risplan — deployment planning for RIS-assisted wireless links:
// ergodic-capacity bounds over cascade Rician fading and rotation/location
// optimization of the reflecting surface.
// Copyright (C) 2026 The risplan Authors
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

#ifndef RISPLAN_RISPLAN_HPP
#define RISPLAN_RISPLAN_HPP

#include "risplan/config.hpp"
#include "risplan/deployment.hpp"
#include "risplan/fading.hpp"
#include "risplan/geometry.hpp"
#include "risplan/io.hpp"
#include "risplan/radiometrics.hpp"
#include "risplan/rng.hpp"
#include "risplan/specfun.hpp"

#endif // RISPLAN_RISPLAN_HPP
