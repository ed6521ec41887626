#pragma once

#include <json.hpp>

#include "tourn/inversion.hpp"
#include "tourn/sweep.hpp"

namespace tourn {

using Json = nlohmann::ordered_json;

/// {"n", "base_bits", "arcs": [[from, to], ...], "trace": [...], "final_bits"}
Json certificate_to_json(const InversionCertificate& cert);

/// Inverse of certificate_to_json. Throws std::invalid_argument on malformed
/// input; does not verify the certificate.
InversionCertificate certificate_from_json(const Json& j);

/// {"n", "class_count", "max_Delta", "max_delta", "violations", "fallbacks"}
Json sweep_report_to_json(const SweepReport& report);

Json vertex_lists(const std::vector<VertexSet>& sets);

}  // namespace tourn
