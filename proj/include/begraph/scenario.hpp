#pragma once

#include <string>
#include <vector>

#include "begraph/profile.hpp"
#include "begraph/standardized.hpp"

namespace begraph {

// CSV emitters behind the CLI subcommands; pure functions of their inputs so
// reports are byte-stable and testable in-process.
// Header: theorem_id,raw,clamped,branch,valid,notes
std::string bounds_csv(const MomentProfile& profile, bool include_baselines);

// Header: family_id,r,delta,exact_abs_cumulant,bound,ratio,pass
std::string cumulant_check_csv(std::size_t count, int rmax, std::uint64_t seed);

// Header: T,lhs_exact_dkol,rhs,slack
std::string feller_check_csv(const StandardizedLaw& law, const std::vector<double>& Ts);

// The command-line tool: args exclude the program name. Returns the exit
// status (0 success, 1 input error, 2 failed verification).
int run_cli(const std::vector<std::string>& args);

}  // namespace begraph
