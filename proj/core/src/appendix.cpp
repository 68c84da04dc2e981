#include "lieidx/appendix.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "lieidx/errors.hpp"

namespace lieidx {

namespace {

constexpr std::size_t kSymbolicLimit = 5;
constexpr std::size_t kExpansionLimit = 8;
constexpr std::size_t kWitnessTries = 16;

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (sgn(slot) == 0) out.erase(e);
    }
  return out;
}

void add_to(Polynomial& acc, const Polynomial& p, int sign) {
  for (const auto& [e, c] : p) {
    Rational& slot = acc[e];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
    if (sgn(slot) == 0) acc.erase(e);
  }
}

Rational evaluate_linear(const Polynomial& p, std::span<const Rational> xi) {
  Rational v = 0;
  for (const auto& [e, c] : p) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= xi[i];
    v += term;
  }
  return v;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

RatMatrix evaluate_matrix(const std::vector<std::vector<Polynomial>>& m, std::span<const Rational> xi) {
  const std::size_t n = m.size();
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = evaluate_linear(m[i][j], xi);
  return out;
}

std::vector<std::vector<Polynomial>> drop(const std::vector<std::vector<Polynomial>>& m, std::size_t row,
                                          std::size_t col) {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Polynomial> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t variable_count(const std::vector<std::vector<Polynomial>>& m) {
  for (const auto& row : m)
    for (const auto& p : row)
      if (!p.empty()) return p.begin()->first.size();
  return 0;
}

std::string weight_string(std::span<const Rational> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s;
}

RatVector parse_weight(const std::string& text) {
  RatVector w;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    Rational q;
    if (q.set_str(tok, 10) != 0) throw InputError("bad weight component '" + tok + "'");
    q.canonicalize();
    w.push_back(q);
  }
  return w;
}

void add_check(CaseReport& r, std::string name, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  r.checks.push_back({std::move(name), std::move(expected), std::move(observed), ok});
}

void add_flag(CaseReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
}

std::string t_weight_string(const std::map<Rational, std::size_t>& tw) {
  std::string s;
  for (auto it = tw.rbegin(); it != tw.rend(); ++it) {
    if (!s.empty()) s += ",";
    s += to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s;
}

}  // namespace

std::vector<PairingMatrix> pairing_matrices(const LieAlgebraTable& L, const WeightDecomposition& wd,
                                            std::span<const Rational> t_coords) {
  if (t_coords.size() != wd.torus_basis.size()) throw InputError("pairing_matrices: t has the wrong length");
  std::vector<PairingMatrix> out;
  for (const auto& ws : wd.weights) {
    Rational value = 0;
    for (std::size_t i = 0; i < t_coords.size(); ++i) value += t_coords[i] * ws.weight[i];
    if (sgn(value) <= 0) continue;
    RatVector neg = ws.weight;
    for (auto& x : neg) x = -x;
    const auto j = wd.find(neg);
    if (!j) throw InputError("pairing_matrices: weight " + weight_string(ws.weight) + " has no opposite");
    PairingMatrix pm;
    pm.weight = ws.weight;
    pm.v = ws.space.vectors();
    pm.w = wd.weights[*j].space.vectors();
    if (pm.v.size() != pm.w.size()) throw InputError("pairing_matrices: opposite weights differ in multiplicity");
    pm.entries.resize(pm.v.size());
    for (std::size_t k = 0; k < pm.v.size(); ++k)
      for (std::size_t l = 0; l < pm.w.size(); ++l) pm.entries[k].push_back(L.bracket(pm.v[k], pm.w[l]));
    out.push_back(std::move(pm));
  }
  return out;
}

std::vector<std::vector<Polynomial>> entry_forms(const PairingMatrix& pm, const SubspaceBasis& zero_space) {
  const std::size_t nv = zero_space.dim();
  std::vector<std::vector<Polynomial>> out(pm.order());
  for (std::size_t k = 0; k < pm.order(); ++k)
    for (const auto& entry : pm.entries[k]) {
      if (!zero_space.contains(entry)) throw InputError("pairing entry outside the zero weight space");
      const RatVector c = zero_space.coordinates(entry);
      Polynomial p;
      for (std::size_t i = 0; i < nv; ++i)
        if (sgn(c[i]) != 0) {
          std::vector<unsigned> e(nv, 0);
          e[i] = 1;
          p[e] = c[i];
        }
      out[k].push_back(std::move(p));
    }
  return out;
}

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  const std::size_t nv = variable_count(m);
  if (n == 0) return {{std::vector<unsigned>(nv, 0), Rational(1)}};
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    const Polynomial minor = symbolic_determinant(drop(m, 0, j));
    if (minor.empty()) continue;
    add_to(det, multiply(m[0][j], minor), j % 2 == 0 ? 1 : -1);
  }
  return det;
}

Rational evaluated_determinant(const std::vector<std::vector<Polynomial>>& m, std::span<const Rational> xi) {
  return determinant(evaluate_matrix(m, xi));
}

QResult q_nonzero(const PairingMatrix& pm, const SubspaceBasis& zero_space, std::uint64_t seed) {
  const auto forms = entry_forms(pm, zero_space);
  const std::size_t n = pm.order();
  QResult q;
  auto try_witness = [&]() -> bool {
    for (std::size_t s = 0; s < kWitnessTries; ++s) {
      Rng rng = stream_rng(seed, s);
      RatVector xi = random_integer_vector(rng, zero_space.dim(), -99, 99);
      if (sgn(evaluated_determinant(forms, xi)) != 0) {
        q.witness = std::move(xi);
        return true;
      }
    }
    return false;
  };

  if (n > kSymbolicLimit && try_witness()) {
    q.nonzero = true;
    q.method = QResult::Method::evaluation_witness;
    return q;
  }
  if (n > kExpansionLimit) {
    q.method = QResult::Method::refused;
    q.diagnostic = "order " + std::to_string(n) + " exceeds the expansion limit of " +
                   std::to_string(kExpansionLimit) + " and no evaluation witness was found";
    return q;
  }
  const Polynomial det = symbolic_determinant(forms);
  q.method = QResult::Method::symbolic_det;
  q.terms = det.size();
  q.nonzero = !det.empty();
  if (q.nonzero && n <= kSymbolicLimit) try_witness();
  return q;
}

MinorWitness corank_one_minor(const PairingMatrix& pm, const SubspaceBasis& zero_space, std::uint64_t seed) {
  MinorWitness mw;
  const std::size_t n = pm.order();
  if (n == 0) return mw;
  const auto forms = entry_forms(pm, zero_space);
  std::vector<std::pair<std::size_t, std::size_t>> order{{n - 1, n - 1}};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != n - 1 || c != n - 1) order.emplace_back(r, c);
  std::uint64_t stream = 0;
  for (const auto& [r, c] : order) {
    const auto minor = drop(forms, r, c);
    for (std::size_t s = 0; s < kWitnessTries / 2; ++s) {
      Rng rng = stream_rng(seed, stream++);
      RatVector xi = random_integer_vector(rng, zero_space.dim(), -99, 99);
      if (sgn(evaluated_determinant(minor, xi)) != 0) {
        mw.found = true;
        mw.dropped_row = r;
        mw.dropped_col = c;
        mw.witness = std::move(xi);
        return mw;
      }
    }
  }
  return mw;
}

bool CaseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.ok; });
}

std::string CaseReport::failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name + ": expected " + c.expected + ", got " + c.observed;
  return {};
}

CaseReport verify_rigid_case(const LieAlgebraTable& L, const RigidCaseSpec& spec, std::uint64_t seed,
                             std::size_t samples, std::size_t parallelism) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport r;
  r.name = spec.name;
  r.cartan_type = spec.cartan_type.name();
  auto finish = [&]() -> CaseReport {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(r);
  };

  try {
    const ResolvedCase rc = resolve_case(spec, L);
    const OrbitDescriptor orbit = nilpotent_from_support(L, rc.support);
    const SubspaceBasis& ge = orbit.centralizer;
    r.dim_ge = ge.dim();
    if (auto v = spec.expected("dim_ge")) {
      add_check(r, "dim_ge", *v, std::to_string(r.dim_ge));
      if (!r.checks.back().ok) return finish();
    }

    r.dim_center = center_of(L, ge).dim();
    if (auto v = spec.expected("dim_center")) add_check(r, "dim_center", *v, std::to_string(r.dim_center));

    if (!ge.contains(rc.t)) {
      add_flag(r, "t_in_centralizer", false);
      return finish();
    }
    const std::vector<RatVector> tv{rc.t};
    const SubspaceBasis le = centralizer_in(L, ge, tv);
    r.dim_le = le.dim();
    if (auto v = spec.expected("dim_le")) add_check(r, "dim_le", *v, std::to_string(r.dim_le));

    for (const auto& ev : rational_eigenspaces(restricted_ad(L, ge, rc.t))) r.t_weights[ev.value] = ev.space.dim();
    if (auto v = spec.expected("t_weights")) add_check(r, "t_weights", *v, t_weight_string(r.t_weights));

    const SubspaceBasis t1_span = SubspaceBasis::span(L.dim(), rc.t1);
    if (auto v = spec.expected("dim_t1")) add_check(r, "dim_t1", *v, std::to_string(t1_span.dim()));
    if (t1_span.dim() != rc.t1.size()) {
      add_flag(r, "t1_independent", false);
      return finish();
    }
    const auto t_in_t1 = solve(RatMatrix::from_rows(rc.t1, L.dim()).transposed(), rc.t);
    add_flag(r, "t_in_t1", t_in_t1.has_value());
    if (!t_in_t1) return finish();

    const WeightDecomposition wd = weight_decomposition(L, ge, rc.t1);
    for (const auto& ws : wd.weights) r.t1_weights.emplace_back(ws.weight, ws.space.dim());
    add_flag(r, "weight_symmetry", weights_symmetric(wd));
    for (const auto& line : spec.expected_all("t1_weight")) {
      const auto colon = line.rfind(':');
      if (colon == std::string::npos) throw InputError("t1_weight expects weight:multiplicity");
      const RatVector w = parse_weight(line.substr(0, colon));
      add_check(r, "t1_weight " + line.substr(0, colon), line.substr(colon + 1), std::to_string(wd.multiplicity(w)));
    }

    const RatVector zero(rc.t1.size());
    const auto zi = wd.find(zero);
    const SubspaceBasis zero_space = zi ? wd.weights[*zi].space : SubspaceBasis(L.dim());
    r.dim_zero_weight = zero_space.dim();
    add_flag(r, "zero_weight_is_centralizer", zero_space == centralizer_in(L, ge, rc.t1));

    const auto pms = pairing_matrices(L, wd, *t_in_t1);
    std::size_t paired = 0;
    for (const auto& pm : pms) paired += pm.order();
    add_check(r, "tally", std::to_string(r.dim_ge), std::to_string(2 * paired + r.dim_le));

    bool entries_ok = true;
    for (const auto& pm : pms)
      for (const auto& row : pm.entries)
        for (const auto& entry : row) entries_ok = entries_ok && zero_space.contains(entry);
    add_flag(r, "entries_weight_zero", entries_ok);
    if (!entries_ok) return finish();

    std::size_t zeros = 0;
    bool refused = false;
    for (std::size_t i = 0; i < pms.size(); ++i) {
      BlockReport b;
      b.weight = pms[i].weight;
      b.order = pms[i].order();
      b.q = q_nonzero(pms[i], zero_space, seed + 1000 * (i + 1));
      if (b.q.method == QResult::Method::refused) refused = true;
      if (!b.q.nonzero && b.q.method != QResult::Method::refused) {
        ++zeros;
        b.minor = corank_one_minor(pms[i], zero_space, seed + 1000 * (i + 1) + 500);
      }
      r.blocks.push_back(std::move(b));
    }
    r.condition1 = !refused && zeros == 0;
    r.condition2 = !refused && zeros == 1 &&
                   std::any_of(r.blocks.begin(), r.blocks.end(), [](const BlockReport& b) {
                     return b.minor && b.minor->found;
                   });
    if (auto v = spec.expected("condition")) {
      const bool ok = (*v == "1" && r.condition1) || (*v == "2" && (r.condition1 || r.condition2));
      r.checks.push_back({"condition", *v,
                          r.condition1 ? "1" : (r.condition2 ? "2" : (refused ? "refused" : "none")), ok});
    } else {
      add_flag(r, "condition", r.condition1 || r.condition2);
    }
    if (auto v = spec.expected("singular_block")) {
      std::string observed = "none";
      for (const auto& b : r.blocks)
        if (b.minor) observed = std::to_string(b.order) + ":" + std::to_string(b.minor->found ? b.order - 1 : 0);
      add_check(r, "singular_block", *v, observed);
    }

    r.certificate = certify_elashvili(L, orbit, seed, samples, parallelism);
    const auto& c = *r.certificate;
    add_flag(r, "index_certified", c.certified);
    add_flag(r, "parity", c.parity_ok);
    add_flag(r, "vinberg_bound", c.vinberg_ok);
    if (auto v = spec.expected("index"))
      add_check(r, "index", *v, c.certified ? std::to_string(c.claimed_index) : "unresolved");

    const IndexUpperBound lb = index_upper_bound(subalgebra_structure(L, le), samples, seed + 7, parallelism);
    add_check(r, "index_le", std::to_string(L.rank()), std::to_string(lb.bound));
  } catch (const std::exception& ex) {
    r.checks.push_back({"computation", "completed", ex.what(), false});
  }
  return finish();
}

namespace {

nlohmann::json rational_strings(const RatVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

nlohmann::json to_json(const CaseReport& r, bool with_timing) {
  using nlohmann::json;
  json j;
  j["name"] = r.name;
  j["type"] = r.cartan_type;
  j["dim_ge"] = r.dim_ge;
  j["dim_center"] = r.dim_center;
  j["dim_le"] = r.dim_le;
  j["dim_zero_weight"] = r.dim_zero_weight;
  json tw = json::array();
  for (auto it = r.t_weights.rbegin(); it != r.t_weights.rend(); ++it)
    tw.push_back({{"value", to_string(it->first)}, {"multiplicity", it->second}});
  j["t_weights"] = tw;
  json t1 = json::array();
  for (const auto& [w, m] : r.t1_weights) t1.push_back({{"weight", weight_string(w)}, {"multiplicity", m}});
  j["t1_weights"] = t1;
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json jb{{"weight", weight_string(b.weight)}, {"order", b.order}, {"q_nonzero", b.q.nonzero}};
    switch (b.q.method) {
      case QResult::Method::symbolic_det: jb["method"] = "symbolic_det"; break;
      case QResult::Method::evaluation_witness: jb["method"] = "evaluation_witness"; break;
      case QResult::Method::refused: jb["method"] = "refused"; break;
    }
    if (b.q.method == QResult::Method::symbolic_det) jb["terms"] = b.q.terms;
    if (!b.q.witness.empty()) jb["witness"] = rational_strings(b.q.witness);
    if (!b.q.diagnostic.empty()) jb["diagnostic"] = b.q.diagnostic;
    if (b.minor) {
      json jm{{"found", b.minor->found}};
      if (b.minor->found) {
        jm["dropped_row"] = b.minor->dropped_row;
        jm["dropped_col"] = b.minor->dropped_col;
        jm["witness"] = rational_strings(b.minor->witness);
      }
      jb["corank_one_minor"] = jm;
    }
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  j["condition1"] = r.condition1;
  j["condition2"] = r.condition2;
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"ok", c.ok}});
  j["checks"] = checks;
  j["passed"] = r.passed();
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace lieidx
