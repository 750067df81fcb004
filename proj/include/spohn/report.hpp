#ifndef SPOHN_REPORT_HPP
#define SPOHN_REPORT_HPP

#include <string>
#include <vector>

#include "spohn/numeric.hpp"

namespace spohn {

// JSON-lines serialization of solver results; the CLI emits these verbatim,
// so byte-identical seeds give byte-identical reports.
std::string equilibrium_points_jsonl(const std::string& command,
                                     const std::vector<EquilibriumPoint>& points,
                                     uint64_t seed, bool degenerate_warning = false,
                                     bool pretty = false);

std::string probe_jsonl(const ProbeResult& probe, uint64_t seed, bool pretty = false);

}  // namespace spohn

#endif
