// gfra - link-level simulation and solvers for grant-free random access
// Copyright (C) 2026 the gfra authors
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

namespace gfra {

// Physical uplink budget. Defaults are a standard macro-cell setup:
// 23 dBm device transmit power, -169 dBm/Hz noise PSD over 10 MHz, and the
// 128.1 + 37.6 log10(d [km]) urban path-loss model at 1 km.
struct LinkBudget {
    double tx_power_dbm = 23.0;
    double noise_psd_dbm_per_hz = -169.0;
    double bandwidth_hz = 10e6;
    double distance_km = 1.0;
    double pathloss_intercept_db = 128.1;
    double pathloss_slope_db_per_decade = 37.6;
};

// Collapses the budget into the normalized noise power sigma^2 (linear).
// With per-device power control every device contributes a unit-variance
// effective channel, so sigma^2 = noise power / received power carries the
// whole budget.
double normalized_noise_power(const LinkBudget &budget);

} // namespace gfra
