#include "congrep/pipelines.hpp"

#include <algorithm>
#include <stdexcept>

#include "congrep/functors.hpp"
#include "congrep/sato.hpp"
#include "congrep/torelli.hpp"
#include "congrep/weights.hpp"

namespace congrep {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  bool linear;
  int min_param;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::mod_level2, "mod-level2", false, 2},
    {Family::torelli, "torelli", false, 3},
    {Family::sp_level2, "sp-level2", false, 3},
    {Family::punctured, "punctured", false, 3},
    {Family::closed, "closed", false, 3},
    {Family::aut_congruence, "aut-congruence", true, 3},
    {Family::aut_coinvariants, "johnson-target", true, 3},
    {Family::traceless, "traceless", true, 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw std::logic_error("unknown family");
}

void check_params(Family f, const FamilyParams& params) {
  const auto& i = info(f);
  if (i.linear) {
    if (params.n < i.min_param) throw std::invalid_argument(std::string(i.name) + " needs n >= " + std::to_string(i.min_param));
    if (!is_prime(params.p)) throw std::invalid_argument("p must be prime");
  } else if (params.genus < i.min_param) {
    throw std::invalid_argument(std::string(i.name) + " needs genus >= " + std::to_string(i.min_param));
  }
}

Subspace whole(std::uint32_t p, std::size_t n) { return Subspace::span(FFMatrix::identity(p, n)); }

std::string top_weight(const LabeledModule& m, const Subspace& s) { return highest_weight(m, s).render(); }

std::string top_weight(const LabeledModule& m) { return top_weight(m, whole(m.rep.prime(), m.dim())); }

std::map<std::string, std::size_t> expected_map(const Expectation& e) {
  std::map<std::string, std::size_t> out;
  for (const auto& r : e.rows) out[r.label] += r.multiplicity;
  return out;
}

// Labels shared by the symplectic catalog and the expected tables.
const std::string kF = "F", kH1 = "H1", kKd2 = "ker d2", kKd2w = "ker d2/<omega>", kKd3 = "ker d3",
                  kKd3e = "ker d3/Im eps";
const std::string kL0 = "L(0)", kLw1 = "L(w1)", kLjt = "L(w2+w(n-1))", kLad = "L(w1+w(n-1))";

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& i : kFamilies)
    if (name == i.name) return i.family;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> out = [] {
    std::vector<Family> v;
    for (const auto& i : kFamilies) v.push_back(i.family);
    return v;
  }();
  return out;
}

bool is_linear_family(Family f) { return info(f).linear; }

std::string describe(Family f, const FamilyParams& params) {
  if (is_linear_family(f))
    return family_name(f) + " n=" + std::to_string(params.n) + " p=" + std::to_string(params.p);
  return family_name(f) + " g=" + std::to_string(params.genus);
}

std::string verification_name(Verification v) {
  switch (v) {
    case Verification::match: return "match";
    case Verification::mismatch: return "mismatch";
    case Verification::no_expectation: return "no-expectation";
  }
  return "no-expectation";
}

std::map<std::string, std::size_t> FactorReport::label_multiplicities() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : factors) out[r.label] += r.multiplicity;
  return out;
}

std::map<std::string, std::size_t> FactorReport::weight_multiplicities() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : factors) out[r.weight] += r.multiplicity;
  return out;
}

nlohmann::json report_to_json(const FactorReport& r) {
  nlohmann::json params;
  if (is_linear_family(r.family)) {
    params["n"] = r.params.n;
    params["p"] = r.params.p;
    params["field"] = "F" + std::to_string(r.params.p);
  } else {
    params["genus"] = r.params.genus;
    params["field"] = "F2";
  }
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"label", f.label}, {"dimension", f.dimension}, {"multiplicity", f.multiplicity}, {"weight", f.weight}});
  return {{"family", family_name(r.family)},
          {"params", params},
          {"source_dimension", r.source_dimension},
          {"factors", factors},
          {"verified", verification_name(r.verified)},
          {"seed", r.seed}};
}

FactorReport report_from_json(const nlohmann::json& j) {
  FactorReport r;
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("unknown family in report");
  r.family = *family;
  const auto& params = j.at("params");
  if (is_linear_family(r.family)) {
    r.params.n = params.at("n").get<int>();
    r.params.p = params.at("p").get<std::uint32_t>();
  } else {
    r.params.genus = params.at("genus").get<int>();
  }
  r.source_dimension = j.at("source_dimension").get<std::size_t>();
  for (const auto& f : j.at("factors"))
    r.factors.push_back({f.at("label").get<std::string>(), f.at("dimension").get<std::size_t>(),
                         f.at("multiplicity").get<std::size_t>(), f.at("weight").get<std::string>()});
  const auto v = j.at("verified").get<std::string>();
  if (v == "match") r.verified = Verification::match;
  else if (v == "mismatch") r.verified = Verification::mismatch;
  else if (v == "no-expectation") r.verified = Verification::no_expectation;
  else throw std::invalid_argument("unknown verification state " + v);
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::optional<Expectation> expected_table(Family f, const FamilyParams& params) {
  const int g = params.genus;
  const bool odd = g % 2 == 1;
  switch (f) {
    case Family::mod_level2:
    case Family::punctured:
      if (g == 3)
        return Expectation{"genus 3 composition series of W/2W: H1, ker d3/Im d5, H1, F, ker d2, H1",
                           {{kH1, 3}, {kKd3e, 1}, {kF, 1}, {kKd2, 1}}};
      if (g < 4) return std::nullopt;
      if (odd) return Expectation{"level-2 abelianization, g >= 4 odd", {{kH1, 3}, {kF, 1}, {kKd2, 1}, {kKd3e, 1}}};
      return Expectation{"level-2 abelianization, g >= 4 even", {{kH1, 2}, {kF, 2}, {kKd2w, 1}, {kKd3, 1}}};
    case Family::torelli:
      if (g < 3) return std::nullopt;
      if (odd) return Expectation{"Torelli coinvariants, g odd", {{kF, 2}, {kH1, 2}, {kKd2, 1}, {kKd3e, 1}}};
      return Expectation{"Torelli coinvariants, g even", {{kF, 3}, {kH1, 2}, {kKd2w, 1}, {kKd3, 1}}};
    case Family::sp_level2:
      if (g < 3) return std::nullopt;
      if (odd) return Expectation{"Sp(Z)[2] abelianization, g odd", {{kH1, 1}, {kF, 1}, {kKd2, 1}}};
      return Expectation{"Sp(Z)[2] abelianization, g even", {{kH1, 1}, {kF, 2}, {kKd2w, 1}}};
    case Family::closed:
      return std::nullopt;
    case Family::aut_congruence: {
      const auto r = static_cast<std::uint32_t>(params.n) % params.p;
      if (r == 1 % params.p)
        return Expectation{"Aut(F_n)[p] abelianization, n = 1 mod p", {{kLw1, 2}, {kLjt, 1}, {kLad, 1}}};
      if (r == 0)
        return Expectation{"Aut(F_n)[p] abelianization, n = 0 mod p", {{kLjt, 1}, {kLw1, 1}, {kL0, 1}, {kLad, 1}}};
      return Expectation{"Aut(F_n)[p] abelianization, other n", {{kLjt, 1}, {kLw1, 1}, {kLad, 1}}};
    }
    case Family::aut_coinvariants:
      if (static_cast<std::uint32_t>(params.n) % params.p == 1 % params.p)
        return Expectation{"V* (x) Lambda^2 V, n = 1 mod p", {{kLw1, 2}, {kLjt, 1}}};
      return Expectation{"V* (x) Lambda^2 V, n != 1 mod p", {{kLw1, 1}, {kLjt, 1}}};
    case Family::traceless:
      if (static_cast<std::uint32_t>(params.n) % params.p == 0)
        return Expectation{"traceless matrices, p | n", {{kL0, 1}, {kLad, 1}}};
      return Expectation{"traceless matrices, p does not divide n", {{kLad, 1}}};
  }
  return std::nullopt;
}

std::vector<CatalogEntry> symplectic_catalog(int genus) {
  const SymplecticSpace s{genus, 2};
  const auto v = tautological_module(s);
  const auto l0 = exterior_power(v, 0), l2 = exterior_power(v, 2), l3 = exterior_power(v, 3);
  std::vector<CatalogEntry> out;
  out.push_back({kF, top_weight(l0), l0.rep});
  out.push_back({kH1, top_weight(v), v.rep});

  const auto kd2 = Subspace::span(left_kernel(contraction_matrix(s, 2)));
  if (genus % 2 == 1)
    out.push_back({kKd2, top_weight(l2, kd2), sub_quotient(l2.rep, kd2).sub});
  else
    out.push_back({kKd2w, top_weight(l2, kd2), section(l2.rep, kd2, Subspace::span(omega_vector(s)))});

  if (genus >= 3) {
    const auto kd3 = Subspace::span(left_kernel(contraction_matrix(s, 3)));
    if (genus % 2 == 1)
      out.push_back({kKd3e, top_weight(l3, kd3), section(l3.rep, kd3, Subspace::span(epsilon_matrix(s)))});
    else
      out.push_back({kKd3, top_weight(l3, kd3), sub_quotient(l3.rep, kd3).sub});
  }
  return out;
}

std::vector<CatalogEntry> linear_catalog(int n, std::uint32_t p) {
  const auto v = tautological_module(n, p);
  const auto l0 = exterior_power(v, 0);
  std::vector<CatalogEntry> out;
  out.push_back({kL0, top_weight(l0), l0.rep});
  out.push_back({kLw1, top_weight(v), v.rep});

  const auto jt = johnson_target(n, p);
  const auto kk = Subspace::span(left_kernel(kappa_matrix(n, p)));
  if (static_cast<std::uint32_t>(n) % p == 1 % p)
    out.push_back({kLjt, top_weight(jt, kk), section(jt.rep, kk, Subspace::span(tau_matrix(n, p)))});
  else
    out.push_back({kLjt, top_weight(jt, kk), sub_quotient(jt.rep, kk).sub});

  const auto t = traceless_module(n, p);
  if (static_cast<std::uint32_t>(n) % p == 0)
    out.push_back({kLad, top_weight(t), section(t.rep, whole(p, t.dim()), Subspace::span(traceless_identity(n, p)))});
  else
    out.push_back({kLad, top_weight(t), t.rep});
  return out;
}

std::vector<Representation> source_modules(Family f, const FamilyParams& params) {
  check_params(f, params);
  const int g = params.genus;
  switch (f) {
    case Family::mod_level2:
    case Family::punctured:
      return {w_mod2_representation(QuadraticForm(g)).rep};
    case Family::torelli:
      return {b3_representation(g).rep};
    case Family::sp_level2: {
      const QuadraticForm q(g);
      const auto w = w_mod2_representation(q);
      const auto z = w_degree_span(g, 3);
      if (!(subgroup_image(q, SubgroupKind::torelli) == z))
        throw std::runtime_error("spun Torelli image differs from the degree-3 span");
      return {section(w.rep, whole(2, w.dim()), z)};
    }
    case Family::closed: {
      const QuadraticForm q(g);
      const auto w = w_mod2_representation(q);
      return {section(w.rep, whole(2, w.dim()), subgroup_image(q, SubgroupKind::push))};
    }
    case Family::aut_congruence:
      return {johnson_target(params.n, params.p).rep, traceless_module(params.n, params.p).rep};
    case Family::aut_coinvariants:
      return {johnson_target(params.n, params.p).rep};
    case Family::traceless:
      return {traceless_module(params.n, params.p).rep};
  }
  throw std::logic_error("unknown family");
}

PipelineResult run_pipeline(Family f, const FamilyParams& raw, std::uint64_t seed) {
  FamilyParams params = raw;
  if (is_linear_family(f)) params.genus = 0;
  else {
    params.n = 0;
    params.p = 2;
  }
  const auto modules = source_modules(f, params);
  const auto catalog = is_linear_family(f) ? linear_catalog(params.n, params.p) : symplectic_catalog(params.genus);

  PipelineResult out;
  auto& report = out.report;
  report.family = f;
  report.params = params;
  report.seed = seed;

  std::map<std::pair<std::size_t, std::string>, FactorRow> rows;
  for (const auto& m : modules) {
    report.source_dimension += m.dim();
    auto series = chop(m, seed);
    for (const auto& factor : series.factors) {
      const auto label = identify_factor(factor, catalog, seed);
      auto& row = rows[{factor.dim(), label}];
      if (row.multiplicity == 0) {
        row.label = label;
        row.dimension = factor.dim();
        row.weight = "unknown";
        for (const auto& e : catalog)
          if (e.label == label) row.weight = e.weight;
      }
      ++row.multiplicity;
    }
    out.certificates.push_back(std::move(series.certificate));
  }
  for (auto& [key, row] : rows) report.factors.push_back(std::move(row));

  if (const auto expected = expected_table(f, params))
    report.verified = expected_map(*expected) == report.label_multiplicities() ? Verification::match : Verification::mismatch;
  return out;
}

FactorReport factors_mod_level2(int genus, std::uint64_t seed) {
  return run_pipeline(Family::mod_level2, {.genus = genus}, seed).report;
}

FactorReport factors_torelli_coinvariants(int genus, std::uint64_t seed) {
  return run_pipeline(Family::torelli, {.genus = genus}, seed).report;
}

FactorReport factors_sp_level2(int genus, std::uint64_t seed) {
  return run_pipeline(Family::sp_level2, {.genus = genus}, seed).report;
}

FactorReport factors_surface_variants(int genus, bool closed, std::uint64_t seed) {
  return run_pipeline(closed ? Family::closed : Family::punctured, {.genus = genus}, seed).report;
}

FactorReport factors_aut_congruence(int n, std::uint32_t p, std::uint64_t seed) {
  return run_pipeline(Family::aut_congruence, {.n = n, .p = p}, seed).report;
}

PeriodicityResult periodicity_check(Family f, const std::vector<FamilyParams>& range, std::uint64_t seed) {
  if (range.empty()) throw std::invalid_argument("empty parameter range");
  const bool linear = is_linear_family(f);
  for (const auto& params : range) {
    const auto& first = range.front();
    if (linear ? (params.p != first.p || params.n % static_cast<int>(params.p) != first.n % static_cast<int>(first.p))
               : (params.genus % 2 != first.genus % 2))
      throw std::invalid_argument("parameters lie in different congruence classes");
  }
  PeriodicityResult out;
  for (const auto& params : range) {
    const auto report = run_pipeline(f, params, seed).report;
    out.maps.push_back(linear ? report.label_multiplicities() : report.weight_multiplicities());
  }
  out.periodic = std::all_of(out.maps.begin(), out.maps.end(), [&](const auto& m) { return m == out.maps.front(); });
  return out;
}

}  // namespace congrep
