#pragma once

#include "lgwb/critical.hpp"
#include "lgwb/polytope.hpp"
#include "lgwb/qcoh.hpp"
#include "lgwb/superpotential.hpp"
#include "lgwb/wallcross.hpp"

#include <json.hpp>

#include <string>

namespace lgwb {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Serializes with insertion-ordered keys and every float at 17 significant digits.
std::string dump_report(const Json& j);

Json to_json(const Complex& c);
Json to_json(const LatticePolytope& p);
Json to_json(const Superpotential& w);
Json to_json(const CriticalPoint& p);
Json to_json(const MultisetMatch& m);
Json to_json(const SolverConfig& cfg);
Json to_json(const GluingVerdict& v, const Ring& ring);

} // namespace lgwb
