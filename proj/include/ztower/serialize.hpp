#pragma once

#include <nlohmann/json_fwd.hpp>

#include "ztower/tower.hpp"

namespace ztower {

// All integers cross the wire as decimal strings so downstream consumers
// never face 64-bit overflow.

nlohmann::json to_json(const BlockSpec& spec);
BlockSpec block_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TowerInvariants& t);
TowerInvariants tower_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityReport& r);
IdentityReport identity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankSequence& r);
RankSequence rank_sequence_from_json(const nlohmann::json& j);

/// One campaign trial: spec, derived invariants, identity outcomes.
struct TrialRecord {
  std::uint64_t trial_index = 0;
  BlockSpec spec;
  bool has_tower = false;
  TowerInvariants tower;
  RankSequence ranks;
  std::vector<IdentityReport> identities;
  long wall_time_ms = 0;  // reported by `analyze`, never in campaign JSONL
  std::string error;

  bool all_pass() const;
};

/// `with_wall_time` is off for campaign JSONL lines, which must be
/// byte-identical across reruns of the same config.
nlohmann::json to_json(const TrialRecord& r, bool with_wall_time);
TrialRecord trial_from_json(const nlohmann::json& j);

std::string write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace ztower
