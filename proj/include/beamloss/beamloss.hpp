// SPDX-License-Identifier: Apache-2.0
//
// beamloss - orientation-dependent path loss over a multi-elliptical scattering geometry
// Copyright (C) 2026 beamloss contributors
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

#ifndef BEAMLOSS_BEAMLOSS_HPP
#define BEAMLOSS_BEAMLOSS_HPP

#include "beamloss/angles.hpp"
#include "beamloss/antenna.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/geometry.hpp"
#include "beamloss/oracle.hpp"
#include "beamloss/pas.hpp"
#include "beamloss/pathloss.hpp"
#include "beamloss/pdp.hpp"
#include "beamloss/sweep.hpp"

#endif
