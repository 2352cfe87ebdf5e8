#include "pmod/report.hpp"

#include "pmod/errors.hpp"

namespace pmod {

using nlohmann::json;

GroupSummary summarize(const std::string& name, const PermGroup& g) {
  GroupSummary s{name, g.degree(), g.order(), is_transitive(g), std::nullopt};
  if (s.transitive) s.primitive = is_primitive(g);
  return s;
}

void to_json(json& j, const GroupSummary& s) {
  j = json{{"name", s.name},
           {"degree", s.degree},
           {"order", s.order.str()},
           {"transitive", s.transitive},
           {"primitive", s.primitive ? json(*s.primitive) : json(nullptr)}};
}

void from_json(const json& j, GroupSummary& s) {
  s.name = j.at("name").get<std::string>();
  s.degree = j.at("degree").get<std::size_t>();
  s.order = BigInt(j.at("order").get<std::string>());
  s.transitive = j.at("transitive").get<bool>();
  s.primitive = j.at("primitive").is_null() ? std::nullopt : std::optional<bool>(j.at("primitive").get<bool>());
}

void to_json(json& j, const Report& r) {
  j = json{{"tool_version", r.tool_version},
           {"command", r.command},
           {"input", r.input},
           {"group", r.group ? json(*r.group) : json(nullptr)},
           {"payload", r.payload},
           {"timing", {{"elapsed_seconds", r.elapsed_seconds}}}};
}

void from_json(const json& j, Report& r) {
  r.tool_version = j.at("tool_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input");
  r.group = j.at("group").is_null() ? std::nullopt : std::optional<GroupSummary>(j.at("group").get<GroupSummary>());
  r.payload = j.at("payload");
  r.elapsed_seconds = j.at("timing").at("elapsed_seconds").get<double>();
}

json point_set_json(const PointSet& s) { return s.points(); }

PointSet point_set_from_json(const json& j, std::size_t degree) {
  auto pts = j.get<std::vector<Point>>();
  return PointSet::from_points(degree, pts);
}

void to_json(json& j, const ModerationReport& r) {
  j = json{{"p", r.p},
           {"status", to_string(r.verdict)},
           {"degree", r.degree},
           {"group_p_part", r.group_p_part},
           {"strategy", to_string(r.strategy)},
           {"stage", r.stage},
           {"exhaustive", r.exhaustive},
           {"note", r.note}};
  if (r.verdict == Verdict::Moderate) {
    j["witness"] = point_set_json(*r.witness);
    j["stab_p_part"] = r.witness_p_part;
  } else {
    j["concealed"] = r.concealed ? json(*r.concealed) : json(nullptr);
  }
}

void from_json(const json& j, ModerationReport& r) {
  r.p = j.at("p").get<std::uint64_t>();
  const auto status = j.at("status").get<std::string>();
  if (status != "MODERATE" && status != "EXTREME") throw InvalidArgument("unknown status " + status);
  r.verdict = status == "MODERATE" ? Verdict::Moderate : Verdict::Extreme;
  r.degree = j.at("degree").get<std::size_t>();
  r.group_p_part = j.at("group_p_part").get<std::uint64_t>();
  r.strategy = j.at("strategy").get<std::string>() == "exhaustive" ? Strategy::Exhaustive : Strategy::Constructive;
  r.stage = j.at("stage").get<std::string>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.witness.reset();
  r.witness_p_part = 0;
  r.concealed.reset();
  if (r.verdict == Verdict::Moderate) {
    r.witness = point_set_from_json(j.at("witness"), r.degree);
    r.witness_p_part = j.at("stab_p_part").get<std::uint64_t>();
  } else if (!j.at("concealed").is_null()) {
    r.concealed = j.at("concealed").get<bool>();
  }
}

void to_json(json& j, const CountingCertificate& c) {
  j = json{{"p", c.p},
           {"n", c.n},
           {"z", format_cycles(c.z)},
           {"f", c.f},
           {"sylow_norm_index", c.sylow_norm_index},
           {"lhs", c.sylow_norm_index},
           {"lhs_power", c.lhs_power.str()},
           {"rhs_exponent", c.rhs_exponent},
           {"rhs_power", (BigInt(1) << c.rhs_exponent).str()},
           {"verdict", c.verdict}};
}

void from_json(const json& j, CountingCertificate& c) {
  c.p = j.at("p").get<std::uint64_t>();
  c.n = j.at("n").get<std::size_t>();
  c.z = parse_cycles(j.at("z").get<std::string>(), c.n);
  c.f = j.at("f").get<std::size_t>();
  c.sylow_norm_index = j.at("sylow_norm_index").get<std::uint64_t>();
  c.lhs_power = BigInt(j.at("lhs_power").get<std::string>());
  c.rhs_exponent = j.at("rhs_exponent").get<std::uint64_t>();
  c.verdict = j.at("verdict").get<bool>();
}

void to_json(json& j, const ConcealedResult& c) {
  j = json{{"concealed", c.concealed},
           {"sylow_count", c.sylow_count},
           {"covered_subsets", c.covered_subsets},
           {"uncovered", c.uncovered ? point_set_json(*c.uncovered) : json(nullptr)}};
}

json sylow_json(const SylowData& d) {
  json gens = json::array();
  for (const auto& g : d.representative.generators()) gens.push_back(format_cycles(g));
  json orbit_sizes = json::array();
  for (const auto& o : orbits(d.representative)) orbit_sizes.push_back(o.size());
  return json{{"p", d.p},
              {"order", d.representative.order().str()},
              {"generators", gens},
              {"count", d.count},
              {"normalizer_index", d.normalizer_index},
              {"orbit_sizes", orbit_sizes},
              {"elementary_abelian", is_elementary_abelian(d.representative, d.p)}};
}

json histogram_json(const std::map<std::uint64_t, std::uint64_t>& hist) {
  json j = json::object();
  for (auto [part, count] : hist) j[std::to_string(part)] = count;
  return j;
}

}  // namespace pmod
