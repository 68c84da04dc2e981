#include <doctest.h>

#include <numeric>

#include "../oracles.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/gap_order.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/root_system.hpp"

using namespace lieidx;

namespace {

const std::vector<CartanType> kTypes = {
    {'A', 1}, {'A', 2}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'D', 5},
    {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};

Root negated(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root add(Root a, const Root& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

void check_jacobi(const LieAlgebraTable& L, std::uint64_t seed, int trials) {
  Rng rng = stream_rng(seed, 0);
  for (int k = 0; k < trials; ++k) {
    const auto x = random_integer_vector(rng, L.dim(), -2, 2);
    const auto y = random_integer_vector(rng, L.dim(), -2, 2);
    const auto z = random_integer_vector(rng, L.dim(), -2, 2);
    RatVector s = L.bracket(x, L.bracket(y, z));
    axpy(s, 1, L.bracket(y, L.bracket(z, x)));
    axpy(s, 1, L.bracket(z, L.bracket(x, y)));
    CHECK(is_zero(s));
  }
}

}  // namespace

TEST_CASE("positive roots match the reflection closure") {
  for (const auto& t : kTypes) {
    CAPTURE(t.name());
    const RootSystemInfo rs = build_root_system(t);
    const auto expected = oracle::positive_roots(oracle::cartan_matrix(t.family, t.rank));
    std::set<Root> got(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(got == expected);
    CHECK(got.size() == rs.num_positive());
  }
}

TEST_CASE("Cartan matrices agree with the Bourbaki tables") {
  for (const auto& t : kTypes) {
    CAPTURE(t.name());
    const RootSystemInfo rs = build_root_system(t);
    const auto bourbaki = oracle::cartan_matrix(t.family, t.rank);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) CHECK(rs.cartan_matrix[i][j] == bourbaki[j][i]);
  }
}

TEST_CASE("root counts, dimensions and degrees") {
  const auto a1 = build_root_system({'A', 1});
  CHECK(a1.num_positive() == 1);
  CHECK(a1.borel_dim() == 2);
  CHECK(a1.degrees == std::vector<int>{2});
  CHECK(build_root_system({'G', 2}).num_positive() == 6);
  CHECK(build_root_system({'G', 2}).algebra_dim() == 14);
  CHECK(build_root_system({'F', 4}).num_positive() == 24);
  CHECK(build_root_system({'E', 7}).num_positive() == 63);
  CHECK(build_root_system({'E', 7}).algebra_dim() == 133);
  CHECK(build_root_system({'E', 8}).num_positive() == 120);
  CHECK(build_root_system({'E', 8}).algebra_dim() == 248);
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    CHECK(std::accumulate(rs.degrees.begin(), rs.degrees.end(), std::size_t{0}) == rs.borel_dim());
  }
  CHECK_THROWS_AS(build_root_system({'E', 5}), InputError);
  CHECK_THROWS_AS(CartanType::parse("Q3"), InputError);
  CHECK(CartanType::parse("e7") == CartanType{'E', 7});
}

TEST_CASE("positive roots are ordered by height") {
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    for (std::size_t i = 0; i + 1 < rs.num_positive(); ++i) {
      CHECK(rs.height(i) <= rs.height(i + 1));
      if (rs.height(i) == rs.height(i + 1)) CHECK(rs.positive_roots[i] > rs.positive_roots[i + 1]);
    }
  }
}

TEST_CASE("sl2 relations") {
  const LieAlgebraTable L = chevalley_algebra({'A', 1});
  const auto x = unit_vector(3, 0), y = unit_vector(3, 1), h = unit_vector(3, 2);
  CHECK(L.bracket(x, y) == h);
  CHECK(L.bracket(h, x) == RatVector{2, 0, 0});
  CHECK(L.bracket(h, y) == RatVector{0, -2, 0});
}

TEST_CASE("structure constants follow root strings") {
  for (const auto& t : kTypes) {
    CAPTURE(t.name());
    const ChevalleyConstants cc(build_root_system(t));
    const auto& rs = cc.roots();
    const std::size_t P = rs.num_positive();
    auto root = [&](std::size_t a) { return a < P ? rs.positive_roots[a] : negated(rs.positive_roots[a - P]); };
    for (std::size_t a = 0; a < 2 * P; ++a)
      for (std::size_t b = 0; b < 2 * P; ++b) {
        const Root s = add(root(a), root(b));
        if (is_zero_root(s)) continue;
        CHECK(cc.N(a, b) == -cc.N(b, a));
        if (!rs.is_root(s)) {
          CHECK(cc.N(a, b) == 0);
          continue;
        }
        int p = 0;
        Root down = root(b);
        while (true) {
          down = add(down, negated(root(a)));
          if (!rs.is_root(down)) break;
          ++p;
        }
        CHECK(std::abs(cc.N(a, b)) == p + 1);
      }
  }
}

TEST_CASE("A2 and G2 constant magnitudes") {
  const ChevalleyConstants a2(build_root_system({'A', 2}));
  CHECK(std::abs(a2.N(0, 1)) == 1);
  const LieAlgebraTable L = chevalley_algebra({'A', 2});
  const RatVector sum = L.bracket(unit_vector(8, 0), unit_vector(8, 1));
  CHECK((sum == unit_vector(8, 2) || sum == RatVector{0, 0, -1, 0, 0, 0, 0, 0}));

  const ChevalleyConstants g2(build_root_system({'G', 2}));
  std::set<int> magnitudes;
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b)
      if (g2.N(a, b) != 0) magnitudes.insert(std::abs(g2.N(a, b)));
  CHECK(magnitudes == std::set<int>{1, 2, 3});
}

TEST_CASE("Cartan action and coroots") {
  for (const auto& t : {CartanType{'B', 3}, CartanType{'G', 2}, CartanType{'F', 4}}) {
    const LieAlgebraTable L = chevalley_algebra(t);
    const auto& rs = *L.root_data();
    const std::size_t P = rs.num_positive(), l = rs.rank();
    const ChevalleyConstants cc(rs);
    for (std::size_t a = 0; a < P; ++a) {
      RatVector h(L.dim());
      for (std::size_t i = 0; i < l; ++i) h[2 * P + i] = cc.coroot(a)[i];
      CHECK(L.bracket(unit_vector(L.dim(), a), unit_vector(L.dim(), P + a)) == h);
      for (std::size_t i = 0; i < l; ++i) {
        RatVector expect(L.dim());
        expect[a] = rs.pairing(i, rs.positive_roots[a]);
        CHECK(L.bracket(unit_vector(L.dim(), 2 * P + i), unit_vector(L.dim(), a)) == expect);
      }
    }
  }
}

TEST_CASE("antisymmetry and Jacobi identity") {
  for (const auto& t : {CartanType{'A', 3}, CartanType{'B', 3}, CartanType{'C', 3}, CartanType{'D', 4},
                        CartanType{'G', 2}, CartanType{'F', 4}}) {
    CAPTURE(t.name());
    const LieAlgebraTable L = chevalley_algebra(t);
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        const auto u = unit_vector(L.dim(), i), v = unit_vector(L.dim(), j);
        RatVector s = L.bracket(u, v);
        axpy(s, 1, L.bracket(v, u));
        CHECK(is_zero(s));
      }
    check_jacobi(L, 20 + t.rank, 6);
  }
  check_jacobi(chevalley_algebra({'E', 7}), 31, 2);
}

TEST_CASE("external numbering") {
  const auto e7 = build_root_system({'E', 7});
  CHECK(external_basis_label(e7, 14) == "x14");
  CHECK(external_basis_label(e7, 64) == "y1");
  CHECK(external_basis_label(e7, 133) == "h7");
  CHECK_THROWS_AS(external_basis_label(e7, 134), InputError);
  CHECK_THROWS_AS(external_basis_label(e7, 0), InputError);
  for (const auto& t : {CartanType{'G', 2}, CartanType{'F', 4}, CartanType{'E', 6}, CartanType{'E', 8}}) {
    const auto rs = build_root_system(t);
    const auto order = generation_order(rs);
    REQUIRE(order.size() == rs.num_positive());
    std::set<Root> seen(order.begin(), order.end());
    CHECK(seen.size() == order.size());
  }
}
