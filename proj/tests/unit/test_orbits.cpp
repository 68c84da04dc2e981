#include <doctest.h>

#include "../oracles.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/orbits.hpp"
#include "lieidx/weights.hpp"

using namespace lieidx;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("partition helpers") {
  const Partition p = Partition::parse("[3,2,2]");
  CHECK(p.parts == std::vector<int>{3, 2, 2});
  CHECK(p.total() == 7);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.conjugate().parts == std::vector<int>{3, 3, 1});
  CHECK(Partition::parse("3 2 2") == p);
  CHECK(Partition::parse("2,3").parts == std::vector<int>{3, 2});
  CHECK_THROWS_AS(Partition::parse("2,0"), InputError);
  CHECK_THROWS_AS(Partition::parse("a"), InputError);
}

TEST_CASE("nilpotent partitions") {
  CHECK(names(enumerate_nilpotent_partitions('A', 3)) == std::vector<std::string>{"[3]", "[2,1]", "[1,1,1]"});
  CHECK(names(enumerate_nilpotent_partitions('C', 4)) ==
        std::vector<std::string>{"[4]", "[2,2]", "[2,1,1]", "[1,1,1,1]"});
  const auto so7 = names(enumerate_nilpotent_partitions('B', 7));
  CHECK(std::find(so7.begin(), so7.end(), "[3,2,2]") != so7.end());
  CHECK(std::find(so7.begin(), so7.end(), "[2,2,2,1]") == so7.end());
  CHECK(so7.size() == 7);
  CHECK(enumerate_nilpotent_partitions('D', 8).size() == 10);
  CHECK(is_valid_partition('C', P({3, 3})));
  CHECK_FALSE(is_valid_partition('C', P({3, 1})));
  CHECK_FALSE(is_valid_partition('B', P({2, 1})));
}

TEST_CASE("rigid partitions") {
  CHECK(is_rigid_partition('B', P({2, 2, 1, 1, 1})));
  CHECK_FALSE(is_rigid_partition('B', P({3, 3, 1})));
  for (int n = 2; n <= 6; ++n) CHECK_FALSE(is_rigid_partition('A', P({n})));
  CHECK(is_rigid_partition('A', P({1, 1, 1})));
  CHECK(is_rigid_partition('D', P({1, 1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(is_rigid_partition('D', P({3, 1, 1, 1, 1, 1})));  // gap 1 -> 3
  CHECK(is_rigid_partition('D', P({2, 2, 1, 1, 1, 1})));
  CHECK_FALSE(is_rigid_partition('D', P({3, 3, 1, 1})));  // odd part with multiplicity 2
  CHECK(is_rigid_partition('C', P({2, 1, 1})));
  CHECK_FALSE(is_rigid_partition('C', P({2, 2})));
  CHECK_FALSE(is_rigid_partition('C', P({2, 2, 1, 1})));  // even part with multiplicity 2
  CHECK(is_rigid_partition('C', P({2, 2, 2, 1, 1})));
}

TEST_CASE("center generated by powers") {
  CHECK(center_generated_by_powers('B', P({2, 2, 1, 1, 1})));
  CHECK_FALSE(center_generated_by_powers('B', P({3, 3, 1})));
  CHECK(center_generated_by_powers('B', P({5, 3, 3})));
  CHECK_FALSE(center_generated_by_powers('D', P({3, 3})));
  CHECK_THROWS_AS(center_generated_by_powers('C', P({2, 2})), InputError);
}

TEST_CASE("partition representatives have the expected centralizer dimension") {
  struct Family {
    char family;
    std::size_t n;
  };
  for (const auto& f : {Family{'A', 3}, Family{'A', 4}, Family{'A', 5}, Family{'B', 5}, Family{'B', 7},
                        Family{'C', 4}, Family{'C', 6}, Family{'D', 8}}) {
    const LieAlgebraTable L = classical_matrix_algebra(f.family, f.n);
    for (const auto& p : enumerate_nilpotent_partitions(f.family, f.n)) {
      CAPTURE(L.name());
      CAPTURE(p.to_string());
      const OrbitDescriptor o = nilpotent_from_partition(L, p);
      CHECK(o.dim_centralizer == oracle::classical_centralizer_dim(f.family, p.parts));
      CHECK(o.dim_orbit + o.dim_centralizer == L.dim());
      CHECK(o.dim_orbit % 2 == 0);
      CHECK(passes_nilpotency_check(L, o.representative));
      // Jordan type of the matrix: rank of X^k is sum over parts of max(0, p - k).
      const MatrixRealization& mr = *L.realization();
      RatMatrix X = mr.matrix_of(o.representative), power = X;
      for (int k = 1; k <= p.parts.front(); ++k) {
        std::size_t expect = 0;
        for (int part : p.parts) expect += static_cast<std::size_t>(std::max(0, part - k));
        CHECK(rank(power) == expect);
        power = power * X;
      }
    }
  }
  CHECK(nilpotent_from_partition(classical_matrix_algebra('A', 3), P({2, 1})).dim_centralizer == 4);
  CHECK(nilpotent_from_partition(classical_matrix_algebra('A', 4), P({4})).dim_centralizer == 3);
  CHECK(nilpotent_from_partition(classical_matrix_algebra('C', 4), P({2, 1, 1})).dim_centralizer == 6);
  CHECK_THROWS_AS(nilpotent_from_partition(classical_matrix_algebra('C', 4), P({3, 1})), InputError);
}

TEST_CASE("describe_nilpotent rejects non-nilpotent input") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  CHECK_THROWS_AS(describe_nilpotent(sl2, RatVector{0, 0, 1}), InputError);
  CHECK_FALSE(passes_nilpotency_check(sl2, RatVector{0, 0, 1}));
}

TEST_CASE("Jacobson-Morozov triples") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const Sl2Triple t = jacobson_morozov(sl2, RatVector{1, 0, 0});
  CHECK(t.h == RatVector{0, 0, 1});
  CHECK(t.f == RatVector{0, 1, 0});
  CHECK_THROWS_AS(jacobson_morozov(sl2, RatVector(3)), InputError);

  const LieAlgebraTable sl3 = classical_matrix_algebra('A', 3);
  const OrbitDescriptor minimal = nilpotent_from_partition(sl3, P({2, 1}));
  const Sl2Triple t3 = jacobson_morozov(sl3, minimal.representative);
  CHECK(is_sl2_triple(sl3, t3));
  std::map<Rational, std::size_t> eig;
  for (const auto& ev : rational_eigenspaces(sl3.ad(t3.h))) eig[ev.value] = ev.space.dim();
  CHECK(eig == std::map<Rational, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});

  const LieAlgebraTable E7 = chevalley_algebra({'E', 7});
  RatVector e(E7.dim());
  for (const char* l : {"x14", "x26", "x28", "x49"}) e[*E7.label_index(l)] = 1;
  const Sl2Triple t7 = jacobson_morozov(E7, e);
  RatVector two_e = e;
  for (auto& c : two_e) c *= 2;
  CHECK(E7.bracket(t7.h, e) == two_e);
  CHECK(is_sl2_triple(E7, t7));
}

TEST_CASE("standard parabolics") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const ParabolicData b = parabolic(sl2, {});
  CHECK(b.nilradical.dim() == 1);
  CHECK(b.levi.dim() == 1);

  const LieAlgebraTable sl3 = classical_matrix_algebra('A', 3);
  const ParabolicData p1 = parabolic(sl3, {0});
  CHECK(p1.levi.dim() == 4);
  CHECK(p1.nilradical.dim() == 2);
  CHECK(is_subalgebra(sl3, p1.levi));

  const LieAlgebraTable F4 = chevalley_algebra({'F', 4});
  CHECK(parabolic(F4, {}).nilradical.dim() == 24);
  CHECK_THROWS_AS(parabolic(F4, {0, 1, 2, 3}), InputError);
  CHECK(proper_subsets(3).size() == 7);
  CHECK(proper_subsets(3).front().empty());
}

TEST_CASE("Richardson representatives") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const OrbitDescriptor r2 = richardson_representative(sl2, parabolic(sl2, {}), 1);
  CHECK(r2.dim_centralizer == 1);

  const LieAlgebraTable sl3 = classical_matrix_algebra('A', 3);
  const OrbitDescriptor r3 = richardson_representative(sl3, parabolic(sl3, {}), 1);
  CHECK(r3.dim_orbit == 6);
  CHECK(r3.dim_orbit == 2 * parabolic(sl3, {}).nilradical.dim());

  const LieAlgebraTable G2 = chevalley_algebra({'G', 2});
  const ParabolicData short_root = parabolic(G2, {0});
  const OrbitDescriptor g = richardson_representative(G2, short_root, 1);
  CHECK(g.dim_centralizer == 4);
  CHECK(g.dim_centralizer == short_root.levi.dim());
  CHECK(short_root.nilradical.contains(g.representative));
}
