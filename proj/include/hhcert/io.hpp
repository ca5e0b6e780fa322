#pragma once

#include <string>

#include "json.hpp"

#include "hhcert/gf.hpp"
#include "hhcert/spectrum.hpp"

namespace hhcert {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);
std::string read_file(const std::string& path);

// Rationals as [num, den]; components are JSON integers when they fit,
// decimal strings otherwise.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

// CycNum as {"n": order, "c": [[num,den], ...]}.
json cyc_to_json(const CycNum& v);
CycNum cyc_from_json(const json& j);

// Trace as {"n": ..., "values": [...], "ell": optional}.
json trace_to_json(const CyclicTrace& t);
CyclicTrace trace_from_json(const json& j);

// Spectrum report {"degree", "order", "hall_higman", "missing_eigenvalues"}.
json spectrum_report(const MultVector& m);

// Generator file {"field": {"p","k"}, "dim", "generators": [[row-major], ...]}.
std::vector<Mat> generators_from_json(const json& j);
json generators_to_json(const std::vector<Mat>& gens);

}  // namespace hhcert
