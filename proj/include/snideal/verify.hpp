// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "snideal/mcn.hpp"
#include "snideal/report.hpp"

namespace snideal {

/// Known campaign names; run_campaign rejects anything else.
const std::vector<std::string>& campaign_names();

/// Runs a named theorem-verification campaign. Reports are deterministic
/// functions of (name, params, seed); cases run concurrently with per-case
/// derived seeds and assemble in case order. Recognized params vary per
/// campaign (documented in the README); unknown names throw.
CampaignReport run_campaign(const CampaignSpec& spec);

struct OracleConfig {
  int spectrum_grid = 6;   // grid resolution per eigenvalue direction
  int unitary_samples = 48;
  int refine_rounds = 500;
  std::uint64_t seed = 0;
};

/// Independent brute-force baseline for ||T||_{Phi,Psi} on small instances
/// (n <= 3, m <= 3): dense grid over diagonal spectra x sampled unitaries
/// for b, plus shrinking-step refinement, evaluating ||rho_T(b)||_Psi
/// directly. Never touches the trace-duality machinery.
double oracle_mcn_bruteforce(const MatrixTuple& t, const SnSpec& phi,
                             const SnSpec& psi, const OracleConfig& config = {});

/// Worker cap honoring SNIDEAL_THREADS (defaults to min(4, hardware)).
int worker_count();

} // namespace snideal
