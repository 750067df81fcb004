#include "spohn/report.hpp"

#include <json.hpp>

namespace spohn {

using nlohmann::json;

namespace {
std::string dump_line(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }
}  // namespace

std::string equilibrium_points_jsonl(const std::string& command,
                                     const std::vector<EquilibriumPoint>& points,
                                     uint64_t seed, bool degenerate_warning, bool pretty) {
  std::string out;
  json header{{"type", "header"},
              {"command", command},
              {"seed", seed},
              {"points", points.size()}};
  if (degenerate_warning) header["warning"] = "system is degenerate: solutions are not isolated";
  out += dump_line(header, pretty) + "\n";
  for (const auto& pt : points) {
    json j{{"type", "point"},
           {"torus", pt.torus},
           {"probability", pt.probability},
           {"quadric_residual", pt.quadric_residual},
           {"minor_residual", pt.minor_residual},
           {"totally_mixed", pt.totally_mixed},
           {"payoffs", pt.payoffs}};
    out += dump_line(j, pretty) + "\n";
  }
  return out;
}

std::string probe_jsonl(const ProbeResult& probe, uint64_t seed, bool pretty) {
  std::string out;
  json header{{"type", "header"},
              {"command", "probe-dim"},
              {"seed", seed},
              {"dimension", probe.dimension},
              {"per_point", probe.per_point}};
  out += dump_line(header, pretty) + "\n";
  for (const auto& sv : probe.sv_profiles) {
    json j{{"type", "singular_values"}, {"values", sv}};
    out += dump_line(j, pretty) + "\n";
  }
  return out;
}

}  // namespace spohn
