#pragma once

#include <string>
#include <vector>

#include "core/qss.hpp"

namespace vaidman {

// sweep targets: ghz_game, w_game, wn_game, rulemaker_w, rulemaker_ghz,
// rulemaker_4q, noise
std::string sweep_csv(const std::string& target, int grid_points, int n_max);
const std::vector<std::string>& sweep_targets();
std::string sweep_list();

struct VerifyCheck {
  std::string name;
  std::string status;  // PASS, FAIL, WAIVED, INFO
  double max_dev;
  double tol;
  std::string note;
};

std::vector<VerifyCheck> run_verify(double tolerance, int grid_points);
std::string verify_report_text(const std::vector<VerifyCheck>& checks);
bool verify_all_passed(const std::vector<VerifyCheck>& checks);

// exact classical value, argmax strategy, and comparison with the tabulated
// reference decimal for one game id (vaidman_ghz, vaidman_w, G4_1..G6_3)
std::string classical_report(const std::string& game_id);
const std::vector<std::string>& classical_game_ids();

std::string qss_summary_text(const std::string& protocol, const SessionResult& result);

// basic adds charlieBasis/charlieOut columns; facilitated reports the ruler
// outcome as b0/b1
std::string transcript_csv(const std::vector<RoundRecord>& records, bool basic_protocol);

}  // namespace vaidman
