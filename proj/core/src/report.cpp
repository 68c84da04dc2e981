#include "lieidx/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

#include "lieidx/bolsinov.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/orbits.hpp"
#include "lieidx/parallel.hpp"

namespace lieidx {

namespace {

using Clock = std::chrono::steady_clock;

struct OrbitJob {
  std::string id;
  std::string kind;
  std::optional<bool> rigid;
  std::optional<std::size_t> expected_dim_ge;
  std::function<OrbitDescriptor()> build;
};

std::size_t natural_dimension(const CartanType& t) {
  switch (t.family) {
    case 'A': return static_cast<std::size_t>(t.rank) + 1;
    case 'B': return 2 * static_cast<std::size_t>(t.rank) + 1;
    default: return 2 * static_cast<std::size_t>(t.rank);
  }
}

bool is_classical(const CartanType& t) { return t.family >= 'A' && t.family <= 'D'; }

std::string subset_id(const std::vector<std::size_t>& subset) {
  std::string s = "P{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s + "}";
}

std::vector<OrbitJob> orbit_jobs(const LieAlgebraTable& L, const RunConfig& cfg) {
  const CartanType& t = L.cartan_type();
  std::vector<OrbitJob> jobs;
  if (is_classical(t)) {
    for (const auto& p : enumerate_nilpotent_partitions(t.family, natural_dimension(t))) {
      OrbitJob j;
      j.id = p.to_string();
      j.kind = "partition";
      j.rigid = is_rigid_partition(t.family, p);
      j.build = [&L, p] { return nilpotent_from_partition(L, p); };
      jobs.push_back(std::move(j));
    }
  } else {
    for (const auto& subset : proper_subsets(L.rank())) {
      OrbitJob j;
      j.id = subset_id(subset);
      j.kind = "richardson";
      j.rigid = false;
      j.build = [&L, subset, seed = cfg.seed] { return richardson_representative(L, parabolic(L, subset), seed); };
      jobs.push_back(std::move(j));
    }
  }
  for (const auto& path : cfg.case_files) {
    const RigidCaseSpec spec = load_case_file(path);
    if (!(spec.cartan_type == t)) throw InputError("case file " + path + " is not of type " + t.name());
    OrbitJob j;
    j.id = spec.name;
    j.kind = "case";
    if (auto v = spec.expected("dim_ge")) j.expected_dim_ge = std::stoul(*v);
    j.build = [&L, spec] { return nilpotent_from_support(L, resolve_case(spec, L).support); };
    jobs.push_back(std::move(j));
  }
  return jobs;
}

void check_files_exist(const std::vector<std::string>& files) {
  for (const auto& f : files)
    if (!std::filesystem::is_regular_file(f)) throw InputError("case file not found: " + f);
}

CartanType required_type(const RunConfig& cfg) {
  if (!cfg.cartan_type) throw InputError("--type is required for " + cfg.command);
  if (!cfg.cartan_type->valid()) throw InputError("invalid type " + cfg.cartan_type->name());
  return *cfg.cartan_type;
}

VerificationReport empty_report(const RunConfig& cfg, const std::string& type) {
  VerificationReport r;
  r.command = cfg.command;
  r.cartan_type = type;
  r.seed = cfg.seed;
  r.sample_budget = cfg.sample_budget;
  return r;
}

void fill_orbit_fields(ReportRow& row, const LieAlgebraTable& L, const OrbitDescriptor& o) {
  row.dim_ge = o.dim_centralizer;
  row.dim_center = center_of(L, o.centralizer).dim();
  if (o.kind == OrbitDescriptor::Kind::richardson) {
    row.extra["attempts"] = o.attempts;
    row.extra["representative_support"] = nlohmann::json::array();
    for (std::size_t i = 0; i < o.representative.size(); ++i)
      if (sgn(o.representative[i]) != 0)
        row.extra["representative_support"].push_back({L.labels()[i], to_string(o.representative[i])});
  }
}

template <class RowFn>
VerificationReport run_orbit_suite(const RunConfig& cfg, RowFn&& fill) {
  const CartanType type = required_type(cfg);
  check_files_exist(cfg.case_files);
  const LieAlgebraTable L = algebra_for_type(type);
  const auto jobs = orbit_jobs(L, cfg);
  VerificationReport report = empty_report(cfg, type.name());
  report.rigidity_rule = rigidity_rule(type.family);
  report.rows.resize(jobs.size());
  parallel_for(jobs.size(), cfg.parallelism, [&](std::size_t i) {
    const auto start = Clock::now();
    ReportRow& row = report.rows[i];
    row.orbit_id = jobs[i].id;
    row.kind = jobs[i].kind;
    row.rigid = jobs[i].rigid;
    try {
      const OrbitDescriptor orbit = jobs[i].build();
      fill_orbit_fields(row, L, orbit);
      if (jobs[i].expected_dim_ge && *jobs[i].expected_dim_ge != row.dim_ge) {
        row.status = RowStatus::failed;
        row.detail = "dim_ge: expected " + std::to_string(*jobs[i].expected_dim_ge) + ", got " +
                     std::to_string(row.dim_ge);
      } else {
        fill(L, orbit, row);
      }
    } catch (const SamplingFailure& ex) {
      row.status = RowStatus::unresolved;
      row.detail = ex.what();
    } catch (const std::exception& ex) {
      row.status = RowStatus::failed;
      row.detail = ex.what();
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  });
  return report;
}

RowStatus certificate_status(const IndexCertificate& c, std::string& detail) {
  if (!c.parity_ok || !c.vinberg_ok) {
    detail = !c.vinberg_ok ? "Vinberg bound violated" : "odd corank";
    return RowStatus::failed;
  }
  if (c.certified) return RowStatus::certified;
  detail = "no sample reached corank " + std::to_string(c.algebra_rank);
  return RowStatus::unresolved;
}

std::string json_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::certified: return "CERTIFIED";
    case RowStatus::unresolved: return "UNRESOLVED";
    case RowStatus::failed: return "FAILED";
  }
  return "FAILED";
}

std::size_t VerificationReport::count(RowStatus s) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) {
    return r.status == s;
  }));
}

int VerificationReport::exit_code(bool strict) const {
  if (count(RowStatus::failed) > 0) return 1;
  if (strict && count(RowStatus::unresolved) > 0) return 1;
  return 0;
}

VerificationReport cmd_verify_elashvili(const RunConfig& cfg) {
  return run_orbit_suite(cfg, [&](const LieAlgebraTable& L, const OrbitDescriptor& orbit, ReportRow& row) {
    row.certificate = certify_elashvili(L, orbit, cfg.seed, cfg.sample_budget);
    row.status = certificate_status(*row.certificate, row.detail);
  });
}

VerificationReport cmd_verify_bolsinov(const RunConfig& cfg) {
  return run_orbit_suite(cfg, [&](const LieAlgebraTable& L, const OrbitDescriptor& orbit, ReportRow& row) {
    row.certificate = certify_elashvili(L, orbit, cfg.seed, cfg.sample_budget);
    const CriterionResult cr = check_criterion(L, orbit, cfg.seed);
    row.bolsinov = cr.holds;
    row.extra["dim_shift_space"] = cr.dim_space;
    row.extra["expected_dim"] = cr.expected;
    row.extra["regular_tries"] = cr.regular_tries;
    row.extra["x"] = to_string(cr.witness.x);

    if (!cr.witness.saturated) {
      row.status = RowStatus::unresolved;
      row.detail = "shift space did not saturate";
      return;
    }
    const ShiftProperties p = verify_shift_properties(L, cr.witness);
    row.extra["properties"] = {{"contains_gx", p.contains_gx},
                               {"isotropic", p.isotropic},
                               {"brackets_agree", p.brackets_agree},
                               {"intersection_rank", p.intersection_rank},
                               {"dim_bound", p.dim_bound}};
    std::string cert_detail;
    const RowStatus cs = certificate_status(*row.certificate, cert_detail);
    if (!p.all()) {
      row.status = RowStatus::failed;
      row.detail = "shift-space property violated";
    } else if (cs == RowStatus::failed) {
      row.status = RowStatus::failed;
      row.detail = cert_detail;
    } else if (cr.holds && cs == RowStatus::certified) {
      row.status = RowStatus::certified;
    } else {
      row.status = RowStatus::unresolved;
      row.detail = cr.holds ? cert_detail : "dim V below the expected value for the sampled x";
    }
  });
}

std::vector<std::string> case_files_in(const std::string& dir) {
  std::vector<std::string> out;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".case") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport cmd_verify_appendix(const RunConfig& cfg) {
  std::vector<std::string> files = cfg.case_files;
  if (files.empty()) files = case_files_in(cfg.data_dir);
  if (files.empty()) throw InputError("no case files given and none found in '" + cfg.data_dir + "'");
  check_files_exist(files);

  VerificationReport report = empty_report(cfg, cfg.cartan_type ? cfg.cartan_type->name() : "");
  report.rows.resize(files.size());
  parallel_for(files.size(), cfg.parallelism, [&](std::size_t i) {
    const auto start = Clock::now();
    ReportRow& row = report.rows[i];
    row.kind = "case";
    row.orbit_id = files[i];
    try {
      const RigidCaseSpec spec = load_case_file(files[i]);
      row.orbit_id = spec.name;
      const LieAlgebraTable L = algebra_for_type(spec.cartan_type);
      const CaseReport cr = verify_rigid_case(L, spec, cfg.seed, cfg.sample_budget);
      row.dim_ge = cr.dim_ge;
      row.dim_center = cr.dim_center;
      row.certificate = cr.certificate;
      row.extra = to_json(cr);
      row.extra.erase("certificate");
      if (cr.passed()) {
        row.status = RowStatus::certified;
      } else {
        const bool only_sampling = cr.certificate && !cr.certificate->certified &&
                                   std::all_of(cr.checks.begin(), cr.checks.end(), [](const CaseCheck& c) {
                                     return c.ok || c.name == "index_certified" || c.name == "index" ||
                                            c.name == "index_le";
                                   });
        row.status = only_sampling ? RowStatus::unresolved : RowStatus::failed;
        row.detail = cr.failure();
      }
    } catch (const std::exception& ex) {
      row.status = RowStatus::failed;
      row.detail = ex.what();
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  });
  return report;
}

nlohmann::json algebra_info(const CartanType& t) {
  const LieAlgebraTable L = algebra_for_type(t);
  const RootSystemInfo rs = build_root_system(t);
  nlohmann::json j;
  j["type"] = t.name();
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["rank"] = L.rank();
  j["degrees"] = L.degrees();
  j["borel_dim"] = L.borel_dim();
  j["cartan_matrix"] = rs.cartan_matrix;
  j["cartan_convention"] = "a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)";
  j["num_positive_roots"] = rs.num_positive();
  nlohmann::json roots = nlohmann::json::array();
  for (std::size_t i = 0; i < rs.num_positive(); ++i)
    roots.push_back({{"index", i + 1}, {"root", rs.positive_roots[i]}, {"height", rs.height(i)}});
  j["positive_roots"] = roots;
  j["basis"] = L.labels();
  return j;
}

nlohmann::json orbits_list(const CartanType& t) {
  if (!t.valid()) throw InputError("invalid type " + t.name());
  nlohmann::json j;
  j["type"] = t.name();
  j["rigidity_rule"] = rigidity_rule(t.family);
  nlohmann::json rows = nlohmann::json::array();
  const LieAlgebraTable L = algebra_for_type(t);
  if (is_classical(t)) {
    j["source"] = "partitions";
    for (const auto& p : enumerate_nilpotent_partitions(t.family, natural_dimension(t))) {
      const OrbitDescriptor o = nilpotent_from_partition(L, p);
      nlohmann::json row{{"id", p.to_string()},
                         {"dim_ge", o.dim_centralizer},
                         {"dim_orbit", o.dim_orbit},
                         {"rigid", is_rigid_partition(t.family, p)}};
      if (t.family == 'B' || t.family == 'D') row["center_generated_by_powers"] = center_generated_by_powers(t.family, p);
      rows.push_back(row);
    }
  } else {
    j["source"] = "richardson";
    for (const auto& subset : proper_subsets(L.rank())) {
      const ParabolicData pd = parabolic(L, subset);
      std::vector<std::size_t> one_based;
      for (auto s : subset) one_based.push_back(s + 1);
      rows.push_back({{"id", subset_id(subset)},
                      {"levi_simple_roots", one_based},
                      {"dim_ge", pd.levi.dim()},
                      {"dim_orbit", L.dim() - pd.levi.dim()}});
    }
  }
  j["orbits"] = rows;
  return j;
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["type"] = r.cartan_type;
  if (!r.rigidity_rule.empty()) j["rigidity_rule"] = r.rigidity_rule;
  j["seed"] = r.seed;
  j["sample_budget"] = r.sample_budget;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["orbit_id"] = row.orbit_id;
    jr["kind"] = row.kind;
    jr["status"] = to_string(row.status);
    jr["dim_ge"] = row.dim_ge;
    jr["dim_center"] = row.dim_center;
    jr["rigid"] = row.rigid ? json(*row.rigid) : json(nullptr);
    if (row.certificate) jr["certificate"] = to_json(*row.certificate);
    if (row.bolsinov) jr["bolsinov"] = *row.bolsinov;
    if (!row.detail.empty()) jr["detail"] = row.detail;
    if (!row.extra.is_null()) jr["data"] = row.extra;
    if (with_timing) jr["seconds"] = row.seconds;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["totals"] = {{"rows", r.rows.size()},
                 {"certified", r.count(RowStatus::certified)},
                 {"unresolved", r.count(RowStatus::unresolved)},
                 {"failed", r.count(RowStatus::failed)}};
  return j;
}

std::string to_tsv(const VerificationReport& r) {
  std::ostringstream out;
  out << "# command=" << r.command << "\ttype=" << r.cartan_type;
  if (!r.rigidity_rule.empty()) out << "\trigidity_rule=" << r.rigidity_rule;
  out << "\tseed=" << r.seed
      << "\tsample_budget=" << r.sample_budget << "\n";
  out << "orbit_id\tkind\tstatus\tdim_ge\tdim_center\trigid\tindex\twitness_rank\tbolsinov\tseconds\tdetail\n";
  for (const auto& row : r.rows) {
    out << row.orbit_id << '\t' << row.kind << '\t' << to_string(row.status) << '\t' << row.dim_ge << '\t'
        << row.dim_center << '\t' << json_bool(row.rigid) << '\t';
    if (row.certificate && row.certificate->certified)
      out << row.certificate->claimed_index << '\t' << row.certificate->witness_rank;
    else
      out << "-\t-";
    out << '\t' << json_bool(row.bolsinov) << '\t' << row.seconds << '\t' << row.detail << '\n';
  }
  out << "# totals: certified=" << r.count(RowStatus::certified) << " unresolved=" << r.count(RowStatus::unresolved)
      << " failed=" << r.count(RowStatus::failed) << "\n";
  return out.str();
}

}  // namespace lieidx
