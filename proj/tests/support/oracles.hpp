// SPDX-License-Identifier: Apache-2.0
//
// tvwsplan - coverage, sizing and energy-efficiency planner for TVWS and LTE
// networks.
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

// Hand-coded reference formulas and an exhaustive planner for the micro
// fixture. Nothing here calls into the library's numerical code.

#ifndef TVWS_TEST_ORACLES_HPP
#define TVWS_TEST_ORACLES_HPP

#include "tvws/link_budget.hpp"
#include "tvws/planner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

namespace oracle {

inline double hata_rural_db(double f_mhz, double hb_m, double hm_m, double d_km, double excess_db)
{
    const double lf = std::log10(f_mhz);
    const double a_hm = (1.1 * lf - 0.7) * hm_m - (1.56 * lf - 0.8);
    const double urban = 69.55 + 26.16 * lf - 13.82 * std::log10(hb_m) - a_hm +
                         (44.9 - 6.55 * std::log10(hb_m)) * std::log10(d_km);
    return urban - (4.78 * lf * lf - 18.33 * lf + 40.94) + excess_db;
}

inline double one_slope_db(double pl0_db, double d0_km, double n, double d_km)
{
    return pl0_db + 10.0 * n * std::log10(d_km / d0_km);
}

inline double budget_db(const tvws::TechnologyProfile& p, const tvws::EnvironmentMargins& m, double snr_db)
{
    const double occupied = p.bandwidth_mhz * 1e6 * p.sampling_factor / p.total_subcarriers * p.used_subcarriers;
    const double sens = -174.0 + 10.0 * std::log10(occupied) + p.rx_noise_figure_db + snr_db;
    return p.eirp_dbm + p.rx_antenna_gain_db - p.rx_feeder_loss_db + p.mimo_gain_db - sens - m.shadow_margin_db -
           m.fade_margin_db - p.interference_margin_db;
}

struct Optimum {
    int covered = -1;
    int active = 0;
    std::vector<int> assignment;
};

// Exhaustive search over site subsets and capacity-feasible assignments.
// Objective: most users covered, then fewest active sites.
class BruteForce {
public:
    BruteForce(std::vector<std::vector<double>> pl, double pl_max_db, double capacity_mbps,
               std::vector<double> demand)
        : pl_(std::move(pl)), pl_max_(pl_max_db), cap_(capacity_mbps), demand_(std::move(demand))
    {
    }

    Optimum solve()
    {
        const std::size_t n_sites = pl_.empty() ? 0 : pl_[0].size();
        Optimum best;
        for (unsigned mask = 0; mask < (1u << n_sites); ++mask) {
            const int active = std::popcount(mask);
            mask_ = mask;
            load_.assign(n_sites, 0.0);
            cur_.assign(demand_.size(), -1);
            sub_best_ = -1;
            search(0, 0);
            if (sub_best_ > best.covered || (sub_best_ == best.covered && active < best.active)) {
                best.covered = sub_best_;
                best.active = active;
                best.assignment = sub_assign_;
            }
        }
        return best;
    }

private:
    void search(std::size_t u, int covered)
    {
        if (covered + static_cast<int>(demand_.size() - u) <= sub_best_)
            return;
        if (u == demand_.size()) {
            sub_best_ = covered;
            sub_assign_ = cur_;
            return;
        }
        for (std::size_t s = 0; s < pl_[u].size(); ++s) {
            if (!(mask_ & (1u << s)) || pl_[u][s] > pl_max_ || load_[s] + demand_[u] > cap_ + 1e-9)
                continue;
            load_[s] += demand_[u];
            cur_[u] = static_cast<int>(s);
            search(u + 1, covered + 1);
            load_[s] -= demand_[u];
            cur_[u] = -1;
        }
        search(u + 1, covered);
    }

    std::vector<std::vector<double>> pl_;
    double pl_max_;
    double cap_;
    std::vector<double> demand_;
    unsigned mask_ = 0;
    std::vector<double> load_;
    std::vector<int> cur_;
    int sub_best_ = -1;
    std::vector<int> sub_assign_;
};

// Brute force on a fixed-mode one-slope problem. Losses use the hand formula.
inline Optimum solve_exhaustive(const tvws::PlanningProblem& problem, const tvws::McsEntry& mcs,
                                const tvws::UserPopulation& pop)
{
    const auto& m = std::get<tvws::OneSlopeModel>(problem.model);
    std::vector<std::vector<double>> pl;
    std::vector<double> demand;
    for (const tvws::User& u : pop.users) {
        std::vector<double> row;
        for (const tvws::CandidateSite& s : problem.sites) {
            const double d = std::max(std::hypot(u.position.x - s.position.x, u.position.y - s.position.y), 0.05);
            row.push_back(one_slope_db(m.pl0_db, m.d0_km, m.exponent, d));
        }
        pl.push_back(row);
        demand.push_back(u.demand_mbps);
    }
    BruteForce bf(pl, budget_db(problem.profile, problem.margins, mcs.required_snr_db),
                  mcs.bitrate_at(problem.profile.bandwidth_mhz), demand);
    return bf.solve();
}

} // namespace oracle

#endif
