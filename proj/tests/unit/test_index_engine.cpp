#include <doctest.h>

#include "../oracles.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/index_engine.hpp"

using namespace lieidx;

namespace {

// Kirillov matrix of xi on sub, assembled from ambient brackets.
std::size_t reference_rank(const LieAlgebraTable& L, const SubspaceBasis& sub, const RatVector& xi) {
  std::vector<std::vector<mpq_class>> m(sub.dim(), std::vector<mpq_class>(sub.dim()));
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      const RatVector b = L.bracket(sub[i], sub[j]);
      const RatVector c = sub.coordinates(b);
      for (std::size_t k = 0; k < c.size(); ++k) m[i][j] += xi[k] * c[k];
    }
  return oracle::rank(m);
}

OrbitDescriptor support_orbit(const LieAlgebraTable& L, std::initializer_list<const char*> labels) {
  std::vector<SupportTerm> s;
  for (const char* l : labels) s.push_back({*L.label_index(l), 1});
  return nilpotent_from_support(L, s);
}

}  // namespace

TEST_CASE("Kirillov ranks") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const SubspaceBasis full = SubspaceBasis::full(3);
  CHECK(kirillov_rank(sl2, full, RatVector{1, 2, 3}) == 2);
  CHECK(index_upper_bound(subalgebra_structure(sl2, full), 4, 1).bound == 1);

  const SubspaceBasis cartan = SubspaceBasis::span(3, std::vector<RatVector>{{0, 0, 1}});
  CHECK(kirillov_rank(sl2, cartan, RatVector{5}) == 0);

  const SubspaceBasis borel = SubspaceBasis::span(3, std::vector<RatVector>{{1, 0, 0}, {0, 0, 1}});
  CHECK(index_upper_bound(subalgebra_structure(sl2, borel), 4, 1).bound == 0);

  const LieAlgebraTable A3 = classical_matrix_algebra('A', 4);
  const OrbitDescriptor regular = nilpotent_from_partition(A3, Partition{{4}});
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(kirillov_rank(A3, regular.centralizer, sample_functional(3, k, regular.dim_centralizer)) == 0);

  const LieAlgebraTable C3 = classical_matrix_algebra('C', 6);
  const SubspaceBasis abelian = SubspaceBasis::span(C3.dim(), std::vector<RatVector>{unit_vector(C3.dim(), 0)});
  CHECK(index_upper_bound(subalgebra_structure(C3, abelian), 2, 1).bound == 1);

  CHECK_THROWS_AS(kirillov_rank(sl2, full, RatVector{1, 2}), InputError);
  const SubspaceBasis not_closed = SubspaceBasis::span(3, std::vector<RatVector>{{1, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(subalgebra_structure(sl2, not_closed), InputError);
}

TEST_CASE("Kirillov rank agrees with a reference assembly") {
  const LieAlgebraTable D4 = classical_matrix_algebra('D', 8);
  for (const auto& p : enumerate_nilpotent_partitions('D', 8)) {
    const OrbitDescriptor o = nilpotent_from_partition(D4, p);
    const RatVector xi = sample_functional(17, 0, o.dim_centralizer);
    CHECK(kirillov_rank(D4, o.centralizer, xi) == reference_rank(D4, o.centralizer, xi));
  }
}

TEST_CASE("sample functionals are reproducible") {
  CHECK(sample_functional(5, 2, 10) == sample_functional(5, 2, 10));
  CHECK(sample_functional(5, 2, 10) != sample_functional(5, 3, 10));
  for (const auto& q : sample_functional(9, 0, 50)) {
    CHECK(q >= -99);
    CHECK(q <= 99);
  }
}

TEST_CASE("small certificates") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const IndexCertificate c2 = certify_elashvili(sl2, describe_nilpotent(sl2, RatVector{1, 0, 0}), 1);
  CHECK(c2.certified);
  CHECK(c2.claimed_index == 1);

  const LieAlgebraTable sl3 = classical_matrix_algebra('A', 3);
  const OrbitDescriptor minimal = nilpotent_from_partition(sl3, Partition{{2, 1}});
  const IndexCertificate c3 = certify_elashvili(sl3, minimal, 1);
  CHECK(c3.subalgebra_dim == 4);
  CHECK(c3.witness_rank == 2);
  CHECK(c3.claimed_index == 2);
  CHECK(c3.certified);
  CHECK(c3.lower_bound_source == IndexCertificate::LowerBound::vinberg_rank);
  CHECK(c3.claimed_index == c3.subalgebra_dim - c3.witness_rank);
  CHECK(replay_certificate(sl3, minimal.centralizer, c3));
}

TEST_CASE("certificate serialization") {
  const LieAlgebraTable B2 = classical_matrix_algebra('B', 5);
  const OrbitDescriptor o = nilpotent_from_partition(B2, Partition{{3, 1, 1}});
  const IndexCertificate c = certify_elashvili(B2, o, 42);
  const IndexCertificate back = certificate_from_json(to_json(c));
  CHECK(back.witness_functional == c.witness_functional);
  CHECK(back.claimed_index == c.claimed_index);
  CHECK(back.sampled_ranks == c.sampled_ranks);
  CHECK(back.rng_seed == 42);
  CHECK(replay_certificate(B2, o.centralizer, back));
  IndexCertificate tampered = back;
  tampered.witness_rank += 2;
  CHECK_FALSE(replay_certificate(B2, o.centralizer, tampered));
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"claimed_index", 1}}), InputError);
}

TEST_CASE("exceptional certificates") {
  const LieAlgebraTable E7 = chevalley_algebra({'E', 7});
  const OrbitDescriptor o7 = support_orbit(E7, {"x14", "x26", "x28", "x49"});
  const IndexCertificate c7 = certify_elashvili(E7, o7, 1);
  CHECK(c7.certified);
  CHECK(c7.claimed_index == 7);
  CHECK(c7.witness_rank == 34);
  CHECK(c7.samples_tried <= 3);

  const LieAlgebraTable E8 = chevalley_algebra({'E', 8});
  const OrbitDescriptor o8 = support_orbit(E8, {"x54", "x61", "x77", "x97"});
  CHECK(o8.dim_centralizer == 84);
  const IndexCertificate c8 = certify_elashvili(E8, o8, 1, 8, 2);
  CHECK(c8.certified);
  CHECK(c8.claimed_index == 8);
  CHECK(c8.witness_rank == 76);
  CHECK(c8.parity_ok);
  CHECK(c8.vinberg_ok);
}
