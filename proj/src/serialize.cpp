#include "ztower/serialize.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace ztower {

using nlohmann::json;

namespace {

template <typename T>
std::string dec(T v) {
  static_assert(std::is_integral_v<T>);
  return std::to_string(v);
}

long parse_long(const json& j, const char* field) {
  if (!j.is_string())
    throw std::invalid_argument(std::string("expected decimal string for '") +
                                field + "'");
  try {
    return std::stol(j.get<std::string>());
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed integer in '") + field +
                                "': " + j.get<std::string>());
  }
}

unsigned long parse_ulong(const json& j, const char* field) {
  const long v = parse_long(j, field);
  if (v < 0)
    throw std::invalid_argument(std::string("negative value in '") + field + "'");
  return static_cast<unsigned long>(v);
}

std::vector<long> parse_long_list(const json& j, const char* field) {
  std::vector<long> out;
  for (const auto& e : j) out.push_back(parse_long(e, field));
  return out;
}

json long_list(const std::vector<long>& v) {
  json a = json::array();
  for (long x : v) a.push_back(dec(x));
  return a;
}

}  // namespace

json to_json(const BlockSpec& spec) {
  json fs = json::array();
  for (const auto& f : spec.finite_specs)
    fs.push_back({{"k", dec(static_cast<unsigned long>(f.exponent))},
                  {"e", dec(static_cast<unsigned long>(f.size))},
                  {"seed", dec(f.seed)}});
  json mult = json::array();
  for (unsigned m : spec.multiplicities)
    mult.push_back(dec(static_cast<unsigned long>(m)));
  return json{{"p", dec(spec.p)},
              {"n", dec(static_cast<unsigned long>(spec.n))},
              {"multiplicities", mult},
              {"finite_specs", fs},
              {"conjugator_seed", dec(spec.conjugator_seed)},
              {"conjugator_bound", dec(static_cast<unsigned long>(spec.conjugator_bound))}};
}

BlockSpec block_spec_from_json(const json& j) {
  BlockSpec s;
  try {
  s.p = parse_ulong(j.at("p"), "p");
  s.n = static_cast<unsigned>(parse_ulong(j.at("n"), "n"));
  for (const auto& e : j.at("multiplicities"))
    s.multiplicities.push_back(
        static_cast<unsigned>(parse_ulong(e, "multiplicities")));
  if (s.multiplicities.size() != s.n + 1)
    throw std::invalid_argument(
        "BlockSpec: multiplicities length must equal n+1");
  for (const auto& e : j.at("finite_specs")) {
    FiniteSpec f;
    f.exponent = static_cast<unsigned>(parse_ulong(e.at("k"), "finite_specs.k"));
    f.size = parse_ulong(e.at("e"), "finite_specs.e");
    f.seed = static_cast<std::uint64_t>(parse_ulong(e.at("seed"), "finite_specs.seed"));
    if (f.exponent == 0)
      throw std::invalid_argument("BlockSpec: finite block exponent must be >= 1");
    s.finite_specs.push_back(f);
  }
  s.conjugator_seed = parse_long(j.at("conjugator_seed"), "conjugator_seed");
  s.conjugator_bound = static_cast<unsigned>(
      parse_ulong(j.at("conjugator_bound"), "conjugator_bound"));
  if (s.conjugator_bound == 0)
    throw std::invalid_argument("BlockSpec: conjugator_bound must be positive");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("BlockSpec: ") + e.what());
  }
  return s;
}

json to_json(const TowerInvariants& t) {
  return json{{"p", dec(t.p)},
              {"n", dec(static_cast<unsigned long>(t.n))},
              {"lambda", long_list(t.lambda)},
              {"chi_quotient", long_list(t.chi_quotient)},
              {"chi_subgroup", long_list(t.chi_subgroup)},
              {"chi_layer", long_list(t.chi_layer)}};
}

TowerInvariants tower_from_json(const json& j) {
  TowerInvariants t;
  t.p = parse_ulong(j.at("p"), "p");
  t.n = static_cast<unsigned>(parse_ulong(j.at("n"), "n"));
  t.lambda = parse_long_list(j.at("lambda"), "lambda");
  t.chi_quotient = parse_long_list(j.at("chi_quotient"), "chi_quotient");
  t.chi_subgroup = parse_long_list(j.at("chi_subgroup"), "chi_subgroup");
  t.chi_layer = parse_long_list(j.at("chi_layer"), "chi_layer");
  return t;
}

json to_json(const IdentityReport& r) {
  return json{{"name", r.name},         {"lhs", r.lhs},
              {"rhs", r.rhs},           {"pass", r.pass},
              {"applicable", r.applicable}, {"note", r.note}};
}

IdentityReport identity_from_json(const json& j) {
  return IdentityReport{j.at("name").get<std::string>(),
                        j.at("lhs").get<std::string>(),
                        j.at("rhs").get<std::string>(),
                        j.at("pass").get<bool>(),
                        j.at("applicable").get<bool>(),
                        j.at("note").get<std::string>()};
}

json to_json(const RankSequence& r) {
  json a = json::array();
  for (unsigned long x : r.r) a.push_back(dec(x));
  return json{{"r", a}};
}

RankSequence rank_sequence_from_json(const json& j) {
  RankSequence r;
  for (const auto& e : j.at("r")) r.r.push_back(parse_ulong(e, "r"));
  return r;
}

bool TrialRecord::all_pass() const {
  if (!error.empty()) return false;
  for (const auto& id : identities)
    if (!id.pass) return false;
  return true;
}

json to_json(const TrialRecord& r, bool with_wall_time) {
  json ids = json::array();
  for (const auto& id : r.identities) ids.push_back(to_json(id));
  json j{{"trial_index", dec(r.trial_index)},
         {"spec", to_json(r.spec)},
         {"rank_sequence", to_json(r.ranks)},
         {"identities", ids},
         {"error", r.error}};
  if (r.has_tower) j["tower"] = to_json(r.tower);
  if (with_wall_time) j["wall_time_ms"] = dec(r.wall_time_ms);
  return j;
}

TrialRecord trial_from_json(const json& j) {
  TrialRecord r;
  r.trial_index = parse_ulong(j.at("trial_index"), "trial_index");
  r.spec = block_spec_from_json(j.at("spec"));
  r.ranks = rank_sequence_from_json(j.at("rank_sequence"));
  for (const auto& e : j.at("identities"))
    r.identities.push_back(identity_from_json(e));
  r.error = j.at("error").get<std::string>();
  if (j.contains("tower")) {
    r.has_tower = true;
    r.tower = tower_from_json(j.at("tower"));
  }
  if (j.contains("wall_time_ms"))
    r.wall_time_ms = parse_long(j.at("wall_time_ms"), "wall_time_ms");
  return r;
}

std::string write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const std::string body = j.dump(2) + "\n";
  out << body;
  return body;
}

}  // namespace ztower
