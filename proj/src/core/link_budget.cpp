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

#include "core/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace gfra {

double normalized_noise_power(const LinkBudget &budget) {
    if (!(budget.bandwidth_hz > 0.0))
        throw std::invalid_argument("link budget: bandwidth must be positive");
    if (!(budget.distance_km > 0.0))
        throw std::invalid_argument("link budget: distance must be positive");

    const double noise_dbm =
        budget.noise_psd_dbm_per_hz + 10.0 * std::log10(budget.bandwidth_hz);
    const double pathloss_db = budget.pathloss_intercept_db +
                               budget.pathloss_slope_db_per_decade *
                                   std::log10(budget.distance_km);
    const double rx_power_dbm = budget.tx_power_dbm - pathloss_db;
    return std::pow(10.0, (noise_dbm - rx_power_dbm) / 10.0);
}

} // namespace gfra
