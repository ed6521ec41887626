#include "tourn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "tourn/inversion.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/oracle.hpp"

namespace tourn {
namespace {

struct ClassOutcome {
  int Delta = 0;
  int delta = 0;
  int fallbacks = 0;
  bool violation = false;
};

ClassOutcome check_class(const Tournament& t) {
  ClassOutcome r;
  try {
    r.Delta = comodular_index(t);
    if (r.Delta == 1 || r.Delta != oracle::brute_Delta(t) || r.Delta != comodular_index(dual(t)) ||
        (r.Delta == 0) != is_indecomposable(t))
      r.violation = true;
    if (t.size() >= kMinInversionVertices) {
      const InversionCertificate cert = synthesize_certificate(t);
      r.delta = static_cast<int>(cert.arcs.size());
      r.fallbacks = cert.fallback_steps;
      if (!verify_certificate(t, cert) || r.delta != (r.Delta + 1) / 2 || oracle::brute_delta(t) != r.delta)
        r.violation = true;
    }
  } catch (const std::exception&) {
    r.violation = true;
  }
  return r;
}

}  // namespace

int closed_form_Delta(int n) { return (n + 2) / 2; }
int closed_form_delta(int n) { return (n + 4) / 4; }

bool SweepReport::ok() const {
  if (!violations.empty() || max_Delta != closed_form_Delta(n)) return false;
  if (n >= kMinInversionVertices) return max_delta.has_value() && *max_delta == closed_form_delta(n);
  return true;
}

SweepReport sweep_size(int n, int jobs) {
  const std::vector<Tournament> classes = enumerate_tournaments(n);
  std::vector<ClassOutcome> outcomes(classes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < classes.size(); i = next++) outcomes[i] = check_class(classes[i]);
  };
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < std::min(workers, classes.size()); ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  SweepReport report;
  report.n = n;
  report.class_count = static_cast<int>(classes.size());
  if (n >= kMinInversionVertices) report.max_delta = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ClassOutcome& r = outcomes[i];
    report.max_Delta = std::max(report.max_Delta, r.Delta);
    if (report.max_delta) report.max_delta = std::max(*report.max_delta, r.delta);
    report.fallbacks += r.fallbacks;
    if (r.violation) report.violations.push_back(classes[i].bit_string());
  }
  return report;
}

std::vector<SweepReport> sweep_verify(int max_n, int jobs) {
  if (max_n > kSweepBound)
    throw std::out_of_range("sweeps are limited to " + std::to_string(kSweepBound) + " vertices");
  std::vector<SweepReport> reports;
  for (int n = 3; n <= max_n; ++n) reports.push_back(sweep_size(n, jobs));
  return reports;
}

}  // namespace tourn
