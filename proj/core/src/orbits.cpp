#include "lieidx/orbits.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lieidx/errors.hpp"

namespace lieidx {

int Partition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::size_t Partition::multiplicity(int part) const {
  return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), part));
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int k = 1; k <= parts.front(); ++k) {
    int count = 0;
    for (int p : parts)
      if (p >= k) ++count;
    c.parts.push_back(count);
  }
  return c;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

Partition Partition::parse(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
  std::istringstream in(cleaned);
  Partition p;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v <= 0) throw InputError("invalid partition '" + text + "'");
    p.parts.push_back(v);
  }
  if (p.parts.empty()) throw InputError("empty partition");
  std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
  return p;
}

bool is_valid_partition(char family, const Partition& p) {
  if (p.parts.empty()) return false;
  if (!std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>())) return false;
  if (p.parts.back() <= 0) return false;
  const int parity = family == 'C' ? 1 : 0;  // parts of this parity need even multiplicity
  if (family == 'A') return true;
  if (family != 'B' && family != 'C' && family != 'D') return false;
  for (int part : p.parts)
    if (part % 2 == parity && p.multiplicity(part) % 2 != 0) return false;
  return true;
}

std::vector<Partition> enumerate_nilpotent_partitions(char family, std::size_t n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p{current};
      if (is_valid_partition(family, p)) out.push_back(std::move(p));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(static_cast<int>(n), static_cast<int>(n));
  return out;
}

bool is_rigid_partition(char family, const Partition& p) {
  if (!is_valid_partition(family, p)) throw InputError("partition " + p.to_string() + " is not valid for this family");
  if (family == 'A') return p.parts.front() == 1;
  if (p.parts.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
    if (p.parts[i] - p.parts[i + 1] > 1) return false;
  const int parity = family == 'C' ? 0 : 1;
  for (int part = 1; part <= p.parts.front(); ++part)
    if (part % 2 == parity && p.multiplicity(part) == 2) return false;
  return true;
}

std::string rigidity_rule(char family) {
  switch (family) {
    case 'A': return "zero_orbit_only";
    case 'B':
    case 'D': return "odd_multiplicity_not_2";
    case 'C': return "even_multiplicity_not_2_external";
    default: return "richardson_only";
  }
}

bool center_generated_by_powers(char family, const Partition& p) {
  if (family != 'B' && family != 'D') throw InputError("center_generated_by_powers: families B and D only");
  auto part = [&](std::size_t i) { return i < p.parts.size() ? p.parts[i] : 0; };
  const bool exceptional = part(0) % 2 == 1 && part(1) % 2 == 1 && part(2) < part(1);
  return !exceptional;
}

// ---------------------------------------------------------------------------

bool passes_nilpotency_check(const LieAlgebraTable& L, std::span<const Rational> e) {
  const auto& d = L.degrees();
  const std::size_t bound = 2 * static_cast<std::size_t>(d.empty() ? 1 : d.back());
  return is_ad_nilpotent(L, e, bound);
}

OrbitDescriptor describe_nilpotent(const LieAlgebraTable& L, RatVector e) {
  if (e.size() != L.dim()) throw InputError("describe_nilpotent: coordinate length mismatch");
  if (!passes_nilpotency_check(L, e)) throw InputError("element is not ad-nilpotent");
  OrbitDescriptor d;
  d.representative = std::move(e);
  d.centralizer = centralizer(L, d.representative);
  d.dim_centralizer = d.centralizer.dim();
  d.dim_orbit = L.dim() - d.dim_centralizer;
  return d;
}

namespace {

struct HyperbolicPair {
  RatVector p, q;
};

RatMatrix sl_jordan_matrix(const Partition& p) {
  const auto n = static_cast<std::size_t>(p.total());
  RatMatrix m(n, n);
  std::size_t offset = 0;
  for (int part : p.parts) {
    for (int k = 0; k + 1 < part; ++k) m(offset + k, offset + k + 1) = 1;
    offset += static_cast<std::size_t>(part);
  }
  return m;
}

// Nilpotent of Jordan type p preserving the antidiagonal form of `mr`.
RatMatrix form_jordan_matrix(const MatrixRealization& mr, const Partition& p) {
  const std::size_t n = mr.n;
  const bool symplectic = mr.family == 'C';
  const int self_parity = symplectic ? 0 : 1;  // parts forming a single self-dual block
  RatMatrix N(n, n), B(n, n);
  std::vector<HyperbolicPair> pairs;
  std::vector<std::pair<std::size_t, int>> centers;  // basis index, norm
  auto unit = [n](std::size_t i) { return unit_vector(n, i); };

  std::size_t offset = 0;
  auto new_chain = [&](int d) {
    const std::size_t o = offset;
    for (int k = 0; k + 1 < d; ++k) N(o + k + 1, o + k) = 1;
    offset += static_cast<std::size_t>(d);
    return o;
  };

  std::vector<int> distinct(p.parts);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int d : distinct) {
    const std::size_t mult = p.multiplicity(d);
    if (d % 2 == self_parity) {
      for (std::size_t b = 0; b < mult; ++b) {
        const std::size_t o = new_chain(d);
        int sigma = 1;
        if (!symplectic) {
          const int c = (d + 1) / 2;
          const int target = centers.size() % 2 == 0 ? 1 : -1;
          sigma = target * (c % 2 == 0 ? 1 : -1);
          centers.emplace_back(o + static_cast<std::size_t>(c - 1), target);
        }
        for (int i = 1; i <= d; ++i) {
          const int sign = sigma * (i % 2 == 0 ? 1 : -1);
          B(o + static_cast<std::size_t>(i - 1), o + static_cast<std::size_t>(d - i)) = sign;
        }
        for (int i = 1; 2 * i <= d; ++i) {
          if (2 * i == d + 1) continue;
          const int sign = sigma * (i % 2 == 0 ? 1 : -1);
          RatVector q = unit(o + static_cast<std::size_t>(d - i));
          for (auto& x : q) x *= sign;
          pairs.push_back({unit(o + static_cast<std::size_t>(i - 1)), std::move(q)});
        }
      }
    } else {
      for (std::size_t b = 0; b + 1 < mult; b += 2) {
        const std::size_t oa = new_chain(d);
        const std::size_t ob = new_chain(d);
        for (int i = 1; i <= d; ++i) {
          const int sign = i % 2 == 0 ? 1 : -1;
          const std::size_t ai = oa + static_cast<std::size_t>(i - 1);
          const std::size_t bj = ob + static_cast<std::size_t>(d - i);
          B(ai, bj) = sign;
          B(bj, ai) = symplectic ? -sign : sign;
          RatVector q = unit(bj);
          q[bj] = sign;
          pairs.push_back({unit(ai), std::move(q)});
        }
      }
    }
  }

  for (std::size_t k = 0; k + 1 < centers.size(); k += 2) {
    RatVector pv = unit(centers[k].first), qv(n);
    pv[centers[k + 1].first] = 1;
    qv[centers[k].first] = Rational(1, 2);
    qv[centers[k + 1].first] = Rational(-1, 2);
    pairs.push_back({std::move(pv), std::move(qv)});
  }

  RatMatrix P(n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (std::size_t r = 0; r < n; ++r) {
      P(r, k) = pairs[k].p[r];
      P(r, n - 1 - k) = pairs[k].q[r];
    }
  if (centers.size() % 2 == 1) P(centers.back().first, n / 2) = 1;

  RatMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J(i, j) = mr.form[i][j];
  if (!(P.transposed() * B * P == J)) throw InternalError("partition basis does not realize the standard form");
  const auto Pinv = inverse(P);
  if (!Pinv) throw InternalError("partition basis is singular");
  return *Pinv * N * P;
}

}  // namespace

OrbitDescriptor nilpotent_from_partition(const LieAlgebraTable& L, const Partition& p) {
  const MatrixRealization* mr = L.realization();
  if (mr == nullptr) throw InputError("nilpotent_from_partition: algebra has no matrix realization");
  if (static_cast<std::size_t>(p.total()) != mr->n || !is_valid_partition(mr->family, p))
    throw InputError("partition " + p.to_string() + " does not label a nilpotent orbit of " + L.name());
  const RatMatrix X = mr->family == 'A' ? sl_jordan_matrix(p) : form_jordan_matrix(*mr, p);
  OrbitDescriptor d = describe_nilpotent(L, mr->coordinates_of(X));
  d.kind = OrbitDescriptor::Kind::classical;
  d.partition = p;
  d.id = p.to_string();
  return d;
}

OrbitDescriptor nilpotent_from_support(const LieAlgebraTable& L, std::vector<SupportTerm> support) {
  RatVector e(L.dim());
  for (const auto& t : support) {
    if (t.index >= L.dim()) throw InputError("support index out of range");
    e[t.index] += t.coeff;
  }
  OrbitDescriptor d = describe_nilpotent(L, std::move(e));
  d.kind = OrbitDescriptor::Kind::exceptional;
  std::string id;
  for (const auto& t : support) {
    if (!id.empty()) id += "+";
    if (t.coeff != 1) id += to_string(t.coeff) + "*";
    id += L.labels()[t.index];
  }
  d.id = id;
  d.support = std::move(support);
  return d;
}

// ---------------------------------------------------------------------------

ParabolicData parabolic(const LieAlgebraTable& L, std::vector<std::size_t> subset) {
  const auto& roots = L.basis_roots();
  if (roots.empty()) throw InputError("parabolic: algebra has no root decomposition attached");
  const std::size_t l = L.rank();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto s : subset)
    if (s >= l) throw InputError("parabolic: simple root index out of range");
  if (subset.size() == l) throw InputError("parabolic: subset must be proper");

  std::vector<char> in_subset(l, 0);
  for (auto s : subset) in_subset[s] = 1;
  std::vector<RatVector> levi, nil, opp;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Root& r = roots[i];
    bool outside = false;
    int sign = 0;
    for (std::size_t k = 0; k < l; ++k) {
      if (r[k] != 0) sign = r[k] > 0 ? 1 : -1;
      if (r[k] != 0 && !in_subset[k]) outside = true;
    }
    if (!outside)
      levi.push_back(unit_vector(L.dim(), i));
    else if (sign > 0)
      nil.push_back(unit_vector(L.dim(), i));
    else
      opp.push_back(unit_vector(L.dim(), i));
  }
  ParabolicData pd;
  pd.simple_subset = std::move(subset);
  pd.levi = SubspaceBasis::span(L.dim(), levi);
  pd.nilradical = SubspaceBasis::span(L.dim(), nil);
  pd.opposite_nilradical = SubspaceBasis::span(L.dim(), opp);
  return pd;
}

std::vector<std::vector<std::size_t>> proper_subsets(std::size_t rank) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rank); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < rank; ++k)
      if (mask >> k & 1) s.push_back(k);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

OrbitDescriptor richardson_representative(const LieAlgebraTable& L, const ParabolicData& pd, std::uint64_t seed,
                                          std::size_t max_attempts) {
  Rng rng = stream_rng(seed, 0);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const RatVector c = random_integer_vector(rng, pd.nilradical.dim(), -9, 9);
    RatVector e = pd.nilradical.combine(c);
    if (is_zero(e)) continue;
    const SubspaceBasis ge = centralizer(L, e);
    if (ge.dim() != pd.levi.dim()) continue;
    OrbitDescriptor d;
    d.kind = OrbitDescriptor::Kind::richardson;
    d.parabolic_subset = pd.simple_subset;
    std::string id = "P{";
    for (std::size_t k = 0; k < pd.simple_subset.size(); ++k)
      id += (k ? "," : "") + std::to_string(pd.simple_subset[k] + 1);
    d.id = id + "}";
    d.representative = std::move(e);
    d.centralizer = ge;
    d.dim_centralizer = ge.dim();
    d.dim_orbit = L.dim() - ge.dim();
    d.seed = seed;
    d.attempts = attempt;
    return d;
  }
  throw SamplingFailure("no Richardson element found in " + std::to_string(max_attempts) + " samples");
}

}  // namespace lieidx
