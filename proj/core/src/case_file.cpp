#include "lieidx/case_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "lieidx/errors.hpp"

namespace lieidx {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) throw InputError("bad number '" + text + "'");
  q.canonicalize();
  return q;
}

SparseCoords parse_sparse(const std::string& rest) {
  SparseCoords out;
  std::istringstream in(rest);
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.rfind(':');
    if (colon == std::string::npos || colon == 0) throw InputError("expected label:coefficient, got '" + tok + "'");
    out.emplace_back(tok.substr(0, colon), parse_rational(tok.substr(colon + 1)));
  }
  if (out.empty()) throw InputError("empty coordinate list");
  return out;
}

}  // namespace

std::optional<std::string> RigidCaseSpec::expected(const std::string& key) const {
  for (const auto& [k, v] : expect)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::string> RigidCaseSpec::expected_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : expect)
    if (k == key) out.push_back(v);
  return out;
}

RigidCaseSpec parse_case(std::istream& in, const std::string& source) {
  RigidCaseSpec spec;
  bool have_type = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError(source + ":" + std::to_string(lineno) + ": missing ':'");
    const std::string key = trim(line.substr(0, colon));
    const std::string rest = trim(line.substr(colon + 1));
    try {
      if (key == "name") {
        spec.name = rest;
      } else if (key == "type") {
        spec.cartan_type = CartanType::parse(rest);
        have_type = true;
      } else if (key == "order") {
        if (rest != "gap" && rest != "internal") throw InputError("order must be 'gap' or 'internal'");
        spec.external_order = rest == "gap";
      } else if (key == "e") {
        std::istringstream ls(rest);
        std::string idx, coef, extra;
        if (!(ls >> idx >> coef) || (ls >> extra)) throw InputError("expected 'e: <index> <coefficient>'");
        spec.e_support.emplace_back(idx, parse_rational(coef));
      } else if (key == "map") {
        std::istringstream ls(rest);
        std::string from, to, extra;
        if (!(ls >> from >> to) || (ls >> extra)) throw InputError("expected 'map: <index> <label>'");
        spec.translation.emplace_back(from, to);
      } else if (key == "t") {
        spec.t = parse_sparse(rest);
      } else if (key == "t1") {
        spec.t1.push_back(parse_sparse(rest));
      } else if (key == "expect") {
        const auto eq = rest.find('=');
        if (eq == std::string::npos) throw InputError("expected 'expect: key=value'");
        spec.expect.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& ex) {
      throw InputError(source + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_type) throw InputError(source + ": missing 'type:' line");
  if (spec.e_support.empty()) throw InputError(source + ": no 'e:' lines");
  if (spec.t.empty()) throw InputError(source + ": missing 't:' line");
  if (spec.name.empty()) spec.name = source;
  return spec;
}

RigidCaseSpec load_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open case file '" + path + "'");
  RigidCaseSpec spec = parse_case(in, path);
  if (spec.name == path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    if (auto dot = base.rfind(".case"); dot != std::string::npos) base.resize(dot);
    spec.name = base;
  }
  return spec;
}

RatVector sparse_to_vector(const SparseCoords& coords, const LieAlgebraTable& L) {
  RatVector v(L.dim());
  for (const auto& [label, c] : coords) {
    auto i = L.label_index(label);
    if (!i) throw InputError("unknown basis label '" + label + "' in " + L.name());
    v[*i] += c;
  }
  return v;
}

ResolvedCase resolve_case(const RigidCaseSpec& spec, const LieAlgebraTable& L) {
  if (!(spec.cartan_type == L.cartan_type())) throw InputError("case type does not match the algebra");
  std::map<std::string, std::string> map(spec.translation.begin(), spec.translation.end());
  ResolvedCase rc;
  for (const auto& [idx, c] : spec.e_support) {
    std::string label = idx;
    if (spec.external_order) {
      auto it = map.find(idx);
      if (it == map.end()) throw InputError("no 'map:' line for external index " + idx);
      label = it->second;
    }
    auto i = L.label_index(label);
    if (!i) throw InputError("unknown basis label '" + label + "' in " + L.name());
    rc.support.push_back({*i, c});
  }
  rc.t = sparse_to_vector(spec.t, L);
  for (const auto& s : spec.t1) rc.t1.push_back(sparse_to_vector(s, L));
  if (rc.t1.empty()) rc.t1.push_back(rc.t);
  return rc;
}

}  // namespace lieidx
