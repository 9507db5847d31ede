#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "ncbtt/algebra/validate.hpp"
#include "ncbtt/deform/probe.hpp"
#include "ncbtt/homology/homology.hpp"

namespace ncbtt::cli {

using Json = nlohmann::ordered_json;

Json cochain_json(const hochschild::Cochain& c);
Json validation_json(const algebra::ValidationReport& r);
Json cohomology_json(const homology::CohomologyReport& r);
Json degeneration_json(const std::vector<homology::DegenerationVerdict>& v);
Json iota_json(const homology::IotaReport& r);
Json probe_json(const deform::ProbeReport& r);
Json cyclicize_json(const deform::CyclicizeResult& r);

// Key/value dump of a report; tables for arrays of flat objects.
void render_text(const Json& report, std::ostream& out);

}  // namespace ncbtt::cli
