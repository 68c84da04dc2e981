#include "lieidx/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "lieidx/errors.hpp"
#include "lieidx/rational.hpp"

namespace lieidx {

std::string CartanType::name() const { return std::string(1, family) + std::to_string(rank); }

bool CartanType::valid() const {
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      return rank >= 1;
    case 'D':
      return rank >= 2;
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

CartanType CartanType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw InputError("invalid Cartan type '" + text + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw InputError("trailing characters");
  } catch (const std::exception&) {
    throw InputError("invalid Cartan type '" + text + "'");
  }
  if (!t.valid()) throw InputError("invalid Cartan type '" + text + "'");
  return t;
}

std::vector<int> invariant_degrees(const CartanType& t) {
  if (!t.valid()) throw InputError("invalid Cartan type " + t.name());
  std::vector<int> d;
  const int l = t.rank;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case 'E':
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

std::vector<std::vector<int>> inner_product_matrix(const CartanType& t) {
  const int l = t.rank;
  std::vector<std::vector<int>> b(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int v) {  // 1-based
    b[i - 1][j - 1] = v;
    b[j - 1][i - 1] = v;
  };
  for (int i = 0; i < l; ++i) b[i][i] = 2;
  switch (t.family) {
    case 'A':
      for (int i = 1; i < l; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < l; ++i) b[i - 1][i - 1] = 4;
      for (int i = 1; i < l; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      b[l - 1][l - 1] = 4;
      for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
      if (l >= 2) link(l - 1, l, -2);
      break;
    case 'D':
      for (int i = 1; i + 2 <= l - 1; ++i) link(i, i + 1, -1);
      if (l >= 3) {
        link(l - 2, l - 1, -1);
        link(l - 2, l, -1);
      }
      break;
    case 'E':
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < l; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      b[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return b;
}

}  // namespace

int RootSystemInfo::height(std::size_t i) const {
  const Root& r = positive_roots.at(i);
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystemInfo::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * inner_products[i][j];
  }
  return s;
}

int RootSystemInfo::pairing(std::size_t k, const Root& beta) const {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += cartan_matrix[k][j] * beta[j];
  return s;
}

std::optional<std::size_t> RootSystemInfo::positive_index(const Root& r) const {
  auto it = index.find(r);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool RootSystemInfo::is_root(const Root& r) const {
  if (positive_index(r)) return true;
  Root neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  return positive_index(neg).has_value();
}

RootSystemInfo build_root_system(const CartanType& t) {
  if (!t.valid()) throw InputError("invalid Cartan type " + t.name());
  RootSystemInfo rs;
  rs.cartan_type = t;
  rs.inner_products = inner_product_matrix(t);
  const std::size_t l = static_cast<std::size_t>(t.rank);
  rs.cartan_matrix.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      rs.cartan_matrix[i][j] = 2 * rs.inner_products[i][j] / rs.inner_products[i][i];
  rs.degrees = invariant_degrees(t);

  // Grow by height: beta + alpha_k is a root iff q > 0, where
  // p - q = <alpha_k^vee, beta> and p is the length of the downward string.
  std::set<Root> found;
  std::vector<Root> level;
  for (std::size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    level.push_back(r);
    found.insert(r);
  }
  std::vector<Root> all = level;
  while (!level.empty()) {
    std::set<Root> next;
    for (const Root& beta : level) {
      for (std::size_t k = 0; k < l; ++k) {
        int p = 0;
        Root down = beta;
        while (true) {
          down[k] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        const int q = p - rs.pairing(k, beta);
        if (q <= 0) continue;
        Root up = beta;
        up[k] += 1;
        next.insert(up);
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) found.insert(r);
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.positive_roots = std::move(all);
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) rs.index[rs.positive_roots[i]] = i;
  return rs;
}

// ---------------------------------------------------------------------------
// Chevalley constants

ChevalleyConstants::ChevalleyConstants(RootSystemInfo rs) : roots_(std::move(rs)) {
  const std::size_t P = roots_.num_positive();
  const std::size_t l = roots_.rank();
  special_.assign(P * P, 0);

  coroots_.resize(P);
  for (std::size_t i = 0; i < P; ++i) {
    const Root& a = roots_.positive_roots[i];
    const int na = roots_.inner(a, a);
    coroots_[i].assign(l, 0);
    for (std::size_t k = 0; k < l; ++k) {
      const int num = a[k] * roots_.inner_products[k][k];
      if (num % na != 0) throw InternalError("non-integral coroot coefficient");
      coroots_[i][k] = num / na;
    }
  }

  // Special pairs (i, j), i < j, grouped by the sum; roots are processed in
  // height order so every constant the recursion needs is already known.
  for (std::size_t s = 0; s < P; ++s) {
    const Root& xi = roots_.positive_roots[s];
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < s; ++i) {
      Root rest(l);
      for (std::size_t k = 0; k < l; ++k) rest[k] = xi[k] - roots_.positive_roots[i][k];
      auto j = roots_.positive_index(rest);
      if (j && i < *j) pairs.emplace_back(i, *j);
    }
    if (pairs.empty()) continue;
    const auto [a1, b1] = pairs.front();
    auto string_p = [&](std::size_t a, std::size_t b) {
      int p = 0;
      Root r = roots_.positive_roots[b];
      while (true) {
        for (std::size_t k = 0; k < l; ++k) r[k] -= roots_.positive_roots[a][k];
        if (!roots_.is_root(r)) break;
        ++p;
      }
      return p;
    };
    special_[a1 * P + b1] = string_p(a1, b1) + 1;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      const std::size_t na1 = P + a1;  // -alpha1
      const std::size_t nb1 = P + b1;  // -beta1
      Rational acc = 0;
      auto sq = [&](std::size_t u, std::size_t v) {
        Root r = root(u);
        const Root w = root(v);
        for (std::size_t m = 0; m < l; ++m) r[m] += w[m];
        return roots_.inner(r, r);
      };
      if (const int n1 = N(b, na1); n1 != 0) acc += Rational(n1 * N(a, nb1), sq(b, na1));
      if (const int n2 = N(na1, a); n2 != 0) acc += Rational(n2 * N(b, nb1), sq(a, na1));
      acc *= Rational(roots_.inner(xi, xi), special_[a1 * P + b1]);
      acc.canonicalize();
      if (acc.get_den() != 1) throw InternalError("non-integral structure constant");
      const int value = static_cast<int>(acc.get_num().get_si());
      const int expect = string_p(a, b) + 1;
      if (std::abs(value) != expect) throw InternalError("structure constant violates root-string rule");
      special_[a * P + b] = value;
    }
  }
}

Root ChevalleyConstants::root(std::size_t a) const {
  const std::size_t P = roots_.num_positive();
  if (a < P) return roots_.positive_roots[a];
  Root r = roots_.positive_roots[a - P];
  for (auto& c : r) c = -c;
  return r;
}

int ChevalleyConstants::norm(std::size_t a) const {
  const Root r = root(a);
  return roots_.inner(r, r);
}

std::optional<std::size_t> ChevalleyConstants::root_index(const Root& r) const {
  if (auto i = roots_.positive_index(r)) return *i;
  Root neg = r;
  for (auto& c : neg) c = -c;
  if (auto i = roots_.positive_index(neg)) return roots_.num_positive() + *i;
  return std::nullopt;
}

int ChevalleyConstants::N(std::size_t a, std::size_t b) const {
  const std::size_t P = roots_.num_positive();
  Root sum = root(a);
  const Root rb = root(b);
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rb[k];
  auto c_idx = [&]() -> std::optional<std::size_t> {
    Root neg = sum;
    for (auto& c : neg) c = -c;
    return root_index(neg);
  }();
  if (!c_idx) return 0;
  const bool pa = a < P;
  const bool pb = b < P;
  if (pa && pb) return a < b ? special_[a * P + b] : -special_[b * P + a];
  if (!pa && !pb) return -N(a - P, b - P);
  // a + b + c = 0 with mixed signs: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
  const std::size_t c = *c_idx;
  const bool pc = c < P;
  int num;
  int den;
  if (pa == pc) {  // c and a share a sign
    num = norm(c) * N(c, a);
    den = norm(b);
  } else {  // b and c share a sign
    num = norm(c) * N(b, c);
    den = norm(a);
  }
  if (num % den != 0) throw InternalError("non-integral structure constant");
  return num / den;
}

std::vector<ChevalleyConstants::Term> ChevalleyConstants::bracket(std::size_t i, std::size_t j) const {
  const std::size_t P = roots_.num_positive();
  const std::size_t l = roots_.rank();
  std::vector<Term> out;
  if (i == j) return out;
  const bool hi = i >= 2 * P;
  const bool hj = j >= 2 * P;
  if (hi && hj) return out;
  if (hi || hj) {
    const std::size_t h = (hi ? i : j) - 2 * P;
    const std::size_t e = hi ? j : i;
    const int sign = hi ? 1 : -1;
    const int w = roots_.pairing(h, root(e));
    if (w != 0) out.push_back({e, sign * w});
    return out;
  }
  // i, j both root vectors; root indices coincide with basis indices.
  Root sum = root(i);
  const Root rj = root(j);
  bool zero = true;
  for (std::size_t k = 0; k < l; ++k) {
    sum[k] += rj[k];
    if (sum[k] != 0) zero = false;
  }
  if (zero) {
    const std::size_t pos = i < P ? i : j;
    const int sign = i < P ? 1 : -1;
    for (std::size_t k = 0; k < l; ++k)
      if (coroots_[pos][k] != 0) out.push_back({2 * P + k, sign * coroots_[pos][k]});
    return out;
  }
  auto s = root_index(sum);
  if (!s) return out;
  out.push_back({*s, N(i, j)});
  return out;
}

std::string ChevalleyConstants::label(std::size_t i) const {
  const std::size_t P = roots_.num_positive();
  std::ostringstream os;
  if (i < P) {
    os << 'x' << (i + 1);
  } else if (i < 2 * P) {
    os << 'y' << (i - P + 1);
  } else {
    os << 'h' << (i - 2 * P + 1);
  }
  return os.str();
}

}  // namespace lieidx
