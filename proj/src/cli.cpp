#include "congrep/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "congrep/pipelines.hpp"
#include "congrep/sato.hpp"

namespace congrep::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw UsageError("invalid seed: " + text);
  }
  if (used != text.size()) throw UsageError("invalid seed: " + text);
  return seed;
}

Family require_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) {
    std::string known;
    for (auto x : all_families()) known += (known.empty() ? "" : ", ") + family_name(x);
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  return *f;
}

FamilyParams require_params(Family f, int genus, int n, unsigned p) {
  FamilyParams params;
  if (is_linear_family(f)) {
    if (n == 0) throw UsageError(family_name(f) + " needs --n and --p");
    if (genus != 0) throw UsageError(family_name(f) + " takes --n and --p, not --genus");
    if (n < 3 && f != Family::traceless) throw UsageError("n must be at least 3");
    if (n < 2 || n > kMaxN) throw UsageError("n out of range (at most " + std::to_string(kMaxN) + ")");
    if (!is_prime(p) || p > kMaxP) throw UsageError("p must be a prime at most " + std::to_string(kMaxP));
    params.n = n;
    params.p = p;
  } else {
    if (genus == 0) throw UsageError(family_name(f) + " needs --genus");
    if (n != 0) throw UsageError(family_name(f) + " takes --genus, not --n");
    const int lo = f == Family::mod_level2 ? 2 : 3;
    if (genus < lo || genus > kMaxGenus)
      throw UsageError("genus out of range [" + std::to_string(lo) + ", " + std::to_string(kMaxGenus) + "]");
    params.genus = genus;
  }
  return params;
}

void print_table(std::ostream& os, const FactorReport& r) {
  std::size_t width = 5;
  for (const auto& f : r.factors) width = std::max(width, f.label.size());
  os << describe(r.family, r.params) << "  source dimension " << r.source_dimension << "  seed 0x" << std::hex
     << std::uppercase << r.seed << std::dec << std::nouppercase << '\n';
  os << std::left << std::setw(static_cast<int>(width)) << "label" << "  " << std::right << std::setw(5) << "dim"
     << "  " << std::setw(4) << "mult" << "  weight\n";
  for (const auto& f : r.factors)
    os << std::left << std::setw(static_cast<int>(width)) << f.label << "  " << std::right << std::setw(5)
       << f.dimension << "  " << std::setw(4) << f.multiplicity << "  " << f.weight << '\n';
  os << "verified: " << verification_name(r.verified) << '\n';
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  file << text;
}

nlohmann::json certificate_bundle(const FactorReport& r, const std::vector<ChopNode>& certs) {
  auto j = report_to_json(r);
  j.erase("factors");
  j.erase("verified");
  j.erase("source_dimension");
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : certs) j["certificates"].push_back(certificate_to_json(c));
  return j;
}

struct Job {
  Family family;
  FamilyParams params;
};

struct JobResult {
  std::string line;
  bool ok{true};
  bool internal_error{false};
};

JobResult run_job(const Job& job, std::uint64_t seed) {
  JobResult out;
  try {
    const auto result = run_pipeline(job.family, job.params, seed);
    const auto modules = source_modules(job.family, job.params);
    bool replayed = modules.size() == result.certificates.size();
    for (std::size_t i = 0; replayed && i < modules.size(); ++i)
      replayed = verify_certificate(modules[i], result.certificates[i]);
    const auto& r = result.report;
    std::ostringstream line;
    line << std::left << std::setw(15) << verification_name(r.verified) << describe(job.family, job.params);
    line << "  [";
    for (std::size_t i = 0; i < r.factors.size(); ++i)
      line << (i ? ", " : "") << r.factors[i].label << " x" << r.factors[i].multiplicity;
    line << "]";
    if (!replayed) line << "  certificate replay FAILED";
    out.line = line.str();
    out.ok = r.verified != Verification::mismatch && replayed;
  } catch (const std::exception& e) {
    out.line = "error          " + describe(job.family, job.params) + ": " + e.what();
    out.ok = false;
    out.internal_error = true;
  }
  return out;
}

std::vector<Job> verification_jobs(int max_genus, int max_n) {
  std::vector<Job> jobs;
  for (auto f : all_families()) {
    if (is_linear_family(f)) {
      for (int n = 3; n <= max_n; ++n)
        for (unsigned p : {2U, 3U, 5U, 7U}) jobs.push_back({f, {.n = n, .p = p}});
    } else {
      for (int g = f == Family::mod_level2 ? 2 : 3; g <= max_genus; ++g) jobs.push_back({f, {.genus = g}});
    }
  }
  return jobs;
}

int verify_all(std::ostream& out, int max_genus, int max_n, unsigned threads, std::uint64_t seed) {
  const auto jobs = verification_jobs(max_genus, max_n);
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) results[i] = run_job(jobs[i], seed);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  bool ok = true, internal = false;
  for (std::size_t g = 2; g <= static_cast<std::size_t>(std::min(max_genus, 4)); ++g) {
    const auto report = verify_sato_basis(QuadraticForm(static_cast<int>(g)));
    const bool good = report.independent && report.spans_image && report.exponents[0] == 2 * g &&
                      report.exponents[1] == g * (2 * g - 1) && report.exponents[2] == 2 * g * (2 * g - 1) * (2 * g - 2) / 6;
    out << std::left << std::setw(15) << (good ? "match" : "mismatch") << "sato-basis g=" << g << '\n';
    ok = ok && good;
  }
  for (const auto& r : results) {
    out << r.line << '\n';
    ok = ok && r.ok;
    internal = internal || r.internal_error;
  }
  out << (ok ? "all checks match\n" : "some checks failed\n");
  if (internal) return kExitInternal;
  return ok ? kExitOk : kExitMismatch;
}

int certify(std::ostream& out, Family f, const FamilyParams& params, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  nlohmann::json bundle;
  try {
    bundle = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed certificate file: ") + e.what());
  }
  const auto modules = source_modules(f, params);
  bool ok = bundle.value("family", std::string()) == family_name(f);
  if (!ok) out << "certificate is for family " << bundle.value("family", std::string("?")) << '\n';
  const auto& certs = bundle.at("certificates");
  if (certs.size() != modules.size()) {
    out << "expected " << modules.size() << " certificates, found " << certs.size() << '\n';
    ok = false;
  }
  for (std::size_t i = 0; ok && i < modules.size(); ++i) {
    ChopNode node;
    try {
      node = certificate_from_json(certs[i], modules[i].prime());
    } catch (const std::exception& e) {
      out << "certificate " << i << " unreadable: " << e.what() << '\n';
      ok = false;
      break;
    }
    const bool valid = verify_certificate(modules[i], node);
    out << "certificate " << i << " (module dimension " << modules[i].dim() << "): " << (valid ? "valid" : "INVALID")
        << '\n';
    ok = ok && valid;
  }
  out << describe(f, params) << ": " << (ok ? "certificate verified" : "certificate rejected") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition factors of mod-p homology of congruence subgroups"};
  app.require_subcommand(1);

  std::string family_arg, seed_arg = "0x5A70", out_path, cert_out, cert_in, mode;
  int genus = 0, n = 0, max_genus = 4, max_n = 5;
  unsigned p = 0, threads = 1;
  bool json = false;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("family", family_arg, "Family name")->required();
    sub->add_option("--genus,-g", genus, "Genus");
    sub->add_option("--n", n, "Rank of the free group");
    sub->add_option("--p", p, "Prime");
    sub->add_option("--seed", seed_arg, "Random seed (default 0x5A70)");
  };

  auto* factors = app.add_subcommand("factors", "Composition factors of a family");
  add_params(factors);
  factors->add_flag("--json", json, "Emit JSON");
  factors->add_option("--out", out_path, "Write output to a file");
  factors->add_option("--cert-out", cert_out, "Write chop certificates to a file");

  auto* verify = app.add_subcommand("verify", "Run the verification harness");
  verify->add_option("mode", mode, "all")->required()->check(CLI::IsMember({"all"}));
  verify->add_option("--max-genus", max_genus, "Largest genus")->check(CLI::Range(2, kMaxGenus));
  verify->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(3, kMaxN));
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 64U));
  verify->add_option("--seed", seed_arg, "Random seed (default 0x5A70)");

  auto* sato = app.add_subcommand("sato", "Monomial basis functions");
  sato->add_option("mode", mode, "dump")->required()->check(CLI::IsMember({"dump"}));
  sato->add_option("--genus,-g", genus, "Genus")->required()->check(CLI::Range(1, kMaxGenus));

  auto* certify_cmd = app.add_subcommand("certify", "Replay a stored chop certificate");
  add_params(certify_cmd);
  certify_cmd->add_option("--cert", cert_in, "Certificate file written by factors --cert-out")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const auto seed = parse_seed(seed_arg);
    if (*factors) {
      const auto f = require_family(family_arg);
      const auto params = require_params(f, genus, n, p);
      const auto result = run_pipeline(f, params, seed);
      std::ostringstream text;
      if (json) text << report_to_json(result.report).dump(2) << '\n';
      else print_table(text, result.report);
      emit(out, out_path, text.str());
      if (!cert_out.empty()) emit(out, cert_out, certificate_bundle(result.report, result.certificates).dump() + "\n");
      return result.report.verified == Verification::mismatch ? kExitMismatch : kExitOk;
    }
    if (*verify) return verify_all(out, max_genus, max_n, threads, seed);
    if (*sato) {
      const auto basis = monomial_basis(QuadraticForm(genus));
      for (std::size_t i = 0; i < basis.labels.size(); ++i)
        out << basis.labels[i] << ": " << basis.functions[i].hex() << '\n';
      return kExitOk;
    }
    if (*certify_cmd) {
      const auto f = require_family(family_arg);
      return certify(out, f, require_params(f, genus, n, p), cert_in);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace congrep::cli
