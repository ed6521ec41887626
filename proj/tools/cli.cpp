#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "tourn/inversion.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/json_io.hpp"
#include "tourn/oracle.hpp"
#include "tourn/sweep.hpp"
#include "tourn/text_format.hpp"

namespace tourn::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tournament load(const std::string& path) {
  try {
    return read_tournament_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int analyze(const std::string& path, std::ostream& out, std::ostream& err) {
  const Tournament t = load(path);
  const int Delta = comodular_index(t);
  Json record;
  record["n"] = t.size();
  record["indecomposable"] = Delta == 0;
  record["Delta"] = Delta;
  record["delta"] = t.size() >= kMinInversionVertices ? Json((Delta + 1) / 2) : Json(nullptr);
  std::vector<VertexSet> mc;
  for (const CoModule& m : minimal_comodules(t)) mc.push_back(m.members);
  record["mc"] = vertex_lists(mc);
  record["components"] = vertex_lists(transitive_components(t).blocks);
  record["delta_decomposition"] =
      Delta == 0 ? Json::array() : vertex_lists(delta_decomposition(t).member_sets());
  out << record.dump() << '\n';
  err << "n=" << t.size() << " Delta=" << Delta
      << (Delta == 0 ? " (indecomposable)" : " (decomposable)") << '\n';
  return kSuccess;
}

int certify(const std::string& path, std::ostream& out, std::ostream& err) {
  const Tournament t = load(path);
  if (t.size() < kMinInversionVertices)
    throw UsageError("certificates need at least five vertices, got " + std::to_string(t.size()));
  const InversionCertificate cert = synthesize_certificate(t);
  const CertificateStatus status = check_certificate(t, cert);
  if (status != CertificateStatus::ok) {
    err << "certificate failed self-verification: " << to_string(status) << '\n';
    return kViolation;
  }
  if (cert.fallback_steps > 0)
    err << "warning: " << cert.fallback_steps << " step(s) needed the exhaustive fallback\n";
  out << certificate_to_json(cert).dump() << '\n';
  err << "reversed " << cert.arcs.size() << " arc(s); result is indecomposable\n";
  return kSuccess;
}

Json modules_or_trivial(const std::vector<VertexSet>& modules) {
  return modules.empty() ? Json("trivial only") : vertex_lists(modules);
}

int oracle_check(const std::string& path, const std::string& check, std::ostream& out, std::ostream& err) {
  const Tournament t = load(path);
  const int n = t.size();
  Json guided, brute;
  if (check == "Delta") {
    if (n > oracle::kPackingBound) throw UsageError("Delta oracle is limited to 12 vertices");
    guided = comodular_index(t);
    brute = oracle::brute_Delta(t);
  } else if (check == "delta") {
    if (n < kMinInversionVertices || n > oracle::kInversionBound)
      throw UsageError("delta oracle needs 5 to 8 vertices");
    guided = decomposability_index(t);
    brute = oracle::brute_delta(t);
  } else {
    if (n > oracle::kModuleScanBound) throw UsageError("module oracle is limited to 16 vertices");
    std::vector<VertexSet> nontrivial;
    for (VertexSet m : oracle::brute_modules(t))
      if (m.size() >= 2 && m.size() < n) nontrivial.push_back(m);
    std::ranges::sort(nontrivial, size_then_lex_less);
    guided = modules_or_trivial(nontrivial_modules(t));
    brute = modules_or_trivial(nontrivial);
  }
  const bool pass = guided == brute;
  Json record;
  record["check"] = check;
  record["guided"] = guided;
  record["brute"] = brute;
  record["pass"] = pass;
  out << record.dump() << '\n';
  err << check << ": guided " << guided.dump() << ", brute " << brute.dump() << (pass ? " -> pass" : " -> FAIL")
      << '\n';
  return pass ? kSuccess : kViolation;
}

int sweep(int max_n, int jobs, std::ostream& out, std::ostream& err) {
  if (max_n > kSweepBound) throw UsageError("--max-n is limited to " + std::to_string(kSweepBound));
  bool all_ok = true;
  for (const SweepReport& r : sweep_verify(max_n, jobs)) {
    out << sweep_report_to_json(r).dump() << '\n';
    err << "n=" << r.n << ": " << r.class_count << " classes, max Delta " << r.max_Delta;
    if (r.max_delta) err << ", max delta " << *r.max_delta;
    err << (r.ok() ? ", ok" : ", VIOLATIONS") << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? kSuccess : kViolation;
}

int gen(const std::string& type, int n, std::uint64_t seed, const std::string& path, std::ostream& err) {
  if (n < 1 || n > kMaxVertices) throw UsageError("--n must be in 1.." + std::to_string(kMaxVertices));
  const Tournament t = type == "transitive" ? transitive(n) : random_tournament(n, seed);
  write_tournament_file(path, t);
  err << "wrote " << type << " tournament on " << n << " vertices to " << path << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-modular and decomposability indices of tournaments", "tourn"};
  app.require_subcommand(1);

  std::string file, check, type, output;
  int max_n = 0, jobs = 1, n = 0;
  std::uint64_t seed = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Print the module structure and indices of a tournament");
  analyze_cmd->add_option("file", file, "tourn-v1 file")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Emit a minimum indecomposability certificate");
  certify_cmd->add_option("file", file, "tourn-v1 file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare guided and brute-force answers");
  oracle_cmd->add_option("file", file, "tourn-v1 file")->required();
  oracle_cmd->add_option("--check", check, "delta, Delta or modules")
      ->required()
      ->check(CLI::IsMember({"delta", "Delta", "modules"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify the index identities on every class up to --max-n");
  sweep_cmd->add_option("--max-n", max_n, "largest vertex count")->required()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Write a transitive or random tournament");
  gen_cmd->add_option("--type", type, "transitive or random")
      ->required()
      ->check(CLI::IsMember({"transitive", "random"}));
  gen_cmd->add_option("--n", n, "vertex count")->required();
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("-o", output, "output file")->required();

  std::vector<const char*> argv{"tourn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(file, out, err);
    if (certify_cmd->parsed()) return certify(file, out, err);
    if (oracle_cmd->parsed()) return oracle_check(file, check, out, err);
    if (sweep_cmd->parsed()) return sweep(max_n, jobs, out, err);
    if (gen_cmd->parsed()) return gen(type, n, seed, output, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace tourn::cli
