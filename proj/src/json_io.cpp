#include "tourn/json_io.hpp"

#include <stdexcept>

namespace tourn {
namespace {

Tournament tournament_from_bits(int n, const std::string& bits) {
  std::vector<bool> orientation;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit strings may only contain '0' and '1'");
    orientation.push_back(c == '1');
  }
  return Tournament(n, orientation);
}

}  // namespace

Json vertex_lists(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(s.members());
  return out;
}

Json certificate_to_json(const InversionCertificate& cert) {
  Json arcs = Json::array();
  for (const Arc& a : cert.arcs) arcs.push_back({a.from, a.to});
  Json j;
  j["n"] = cert.base.size();
  j["base_bits"] = cert.base.bit_string();
  j["arcs"] = std::move(arcs);
  j["trace"] = cert.trace;
  j["final_bits"] = cert.final.bit_string();
  return j;
}

InversionCertificate certificate_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    InversionCertificate cert{tournament_from_bits(n, j.at("base_bits").get<std::string>()), {}, {},
                              tournament_from_bits(n, j.at("final_bits").get<std::string>()), 0};
    for (const Json& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arcs must be [from, to] pairs");
      cert.arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    cert.trace = j.at("trace").get<std::vector<int>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

Json sweep_report_to_json(const SweepReport& report) {
  Json j;
  j["n"] = report.n;
  j["class_count"] = report.class_count;
  j["max_Delta"] = report.max_Delta;
  j["max_delta"] = report.max_delta ? Json(*report.max_delta) : Json(nullptr);
  j["violations"] = report.violations;
  j["fallbacks"] = report.fallbacks;
  return j;
}

}  // namespace tourn
