#include <doctest.h>

#include <sstream>

#include "lieidx/appendix.hpp"
#include "lieidx/errors.hpp"

using namespace lieidx;

namespace {

const std::string kCaseDir = LIEIDX_TEST_CASE_DIR;

RigidCaseSpec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_case(in, "test");
}

struct E7Setup {
  LieAlgebraTable L = chevalley_algebra({'E', 7});
  RigidCaseSpec spec = load_case_file(kCaseDir + "/e7-41.case");
  ResolvedCase rc = resolve_case(spec, L);
  OrbitDescriptor orbit = nilpotent_from_support(L, rc.support);
};

E7Setup& e7() {
  static E7Setup s;
  return s;
}

}  // namespace

TEST_CASE("rational eigenspaces") {
  RatMatrix m(3, 3);
  m(0, 0) = 2;
  m(1, 1) = Rational(-1, 2);
  m(2, 2) = 2;
  m(0, 2) = 0;
  const auto eig = rational_eigenspaces(m);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0].value == Rational(-1, 2));
  CHECK(eig[1].space.dim() == 2);

  RatMatrix jordan(2, 2);
  jordan(0, 1) = 1;
  CHECK_THROWS_AS(rational_eigenspaces(jordan), InputError);
  RatMatrix rotation(2, 2);
  rotation(0, 1) = -1;
  rotation(1, 0) = 1;
  CHECK_THROWS_AS(rational_eigenspaces(rotation), InputError);
  RatMatrix irrational(2, 2);
  irrational(0, 1) = 2;
  irrational(1, 0) = 1;
  CHECK_THROWS_AS(rational_eigenspaces(irrational), InputError);
}

TEST_CASE("weight decomposition of an sl2 triple") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const SubspaceBasis full = SubspaceBasis::full(3);
  const WeightDecomposition wd = weight_decomposition(sl2, full, {RatVector{0, 0, 1}});
  REQUIRE(wd.weights.size() == 3);
  CHECK(wd.multiplicity(RatVector{2}) == 1);
  CHECK(wd.multiplicity(RatVector{0}) == 1);
  CHECK(wd.multiplicity(RatVector{-2}) == 1);
  CHECK(weights_symmetric(wd));

  const SubspaceBasis line = SubspaceBasis::span(3, std::vector<RatVector>{{1, 0, 0}, {0, 0, 1}});
  const WeightDecomposition b = weight_decomposition(sl2, line, {RatVector{0, 0, 1}});
  CHECK(b.multiplicity(RatVector{2}) == 1);
  CHECK_FALSE(weights_symmetric(b));

  CHECK_THROWS_AS(weight_decomposition(sl2, full, {RatVector{1, 0, 0}, RatVector{0, 0, 1}}), InputError);
  const SubspaceBasis ge = centralizer(sl2, RatVector{1, 0, 0});
  CHECK_THROWS_AS(weight_decomposition(sl2, ge, {RatVector{0, 0, 1}}), InputError);
}

TEST_CASE("pairing matrices and determinants") {
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  const SubspaceBasis full = SubspaceBasis::full(3);
  const WeightDecomposition wd = weight_decomposition(sl2, full, {RatVector{0, 0, 1}});
  const auto pms = pairing_matrices(sl2, wd, RatVector{1});
  REQUIRE(pms.size() == 1);
  CHECK(pms[0].order() == 1);
  CHECK(pms[0].entries[0][0] == RatVector{0, 0, 1});
  const SubspaceBasis zero = wd.weights[*wd.find(RatVector{0})].space;
  const QResult q = q_nonzero(pms[0], zero, 1);
  CHECK(q.nonzero);
  CHECK(q.method == QResult::Method::symbolic_det);

  // Abelian: a Cartan subalgebra of sl3 acting trivially on itself.
  const LieAlgebraTable sl3 = chevalley_algebra({'A', 2});
  const SubspaceBasis h = SubspaceBasis::span(8, std::vector<RatVector>{unit_vector(8, 6), unit_vector(8, 7)});
  const WeightDecomposition flat = weight_decomposition(sl3, h, {unit_vector(8, 6)});
  CHECK(pairing_matrices(sl3, flat, RatVector{1}).empty());
}

TEST_CASE("symbolic determinant") {
  // [[a, b], [b, a]] over two variables: a^2 - b^2.
  const Polynomial a{{{1, 0}, Rational(1)}}, b{{{0, 1}, Rational(1)}};
  const Polynomial det = symbolic_determinant({{a, b}, {b, a}});
  const Polynomial expect{{{2, 0}, Rational(1)}, {{0, 2}, Rational(-1)}};
  CHECK(det == expect);
  CHECK(symbolic_determinant({{a, a}, {a, a}}).empty());
  CHECK(evaluated_determinant({{a, b}, {b, a}}, RatVector{3, 1}) == 8);
}

TEST_CASE("case file parsing") {
  const RigidCaseSpec s = parse(
      "name: demo\n"
      "type: A1\n"
      "e: x1 1   # comment\n"
      "t: h1:1\n"
      "expect: dim_ge=1\n");
  CHECK(s.name == "demo");
  CHECK(s.cartan_type == CartanType{'A', 1});
  CHECK_FALSE(s.external_order);
  CHECK(s.expected("dim_ge") == std::optional<std::string>("1"));
  CHECK_FALSE(s.expected("dim_le"));

  CHECK_THROWS_AS(parse("type: A1\ne: x1 1\n"), InputError);
  CHECK_THROWS_AS(parse("type: A1\nt: h1:1\n"), InputError);
  CHECK_THROWS_AS(parse("type: A1\ne: x1 1\nt: h1\n"), InputError);
  CHECK_THROWS_AS(parse("type: A1\ne: x1 1\nt: h1:1\nbogus: 3\n"), InputError);
  try {
    parse("type: A1\ne: x1 1 2\nt: h1:1\n");
    FAIL("expected an error");
  } catch (const InputError& ex) {
    CHECK(std::string(ex.what()).find("test:2") != std::string::npos);
  }
  const LieAlgebraTable sl2 = chevalley_algebra({'A', 1});
  CHECK_THROWS_AS(resolve_case(parse("type: A1\norder: gap\ne: 1 1\nt: h1:1\n"), sl2), InputError);
  CHECK_THROWS_AS(resolve_case(parse("type: A2\ne: x1 1\nt: h1:1\n"), sl2), InputError);
  CHECK_THROWS_AS(load_case_file(kCaseDir + "/missing.case"), InputError);
}

TEST_CASE("E7 weight structure") {
  auto& s = e7();
  const SubspaceBasis& ge = s.orbit.centralizer;
  const WeightDecomposition by_t = weight_decomposition(s.L, ge, {s.rc.t});
  CHECK(by_t.multiplicity(RatVector{2}) == 1);
  CHECK(by_t.multiplicity(RatVector{1}) == 8);
  CHECK(by_t.multiplicity(RatVector{-1}) == 8);
  CHECK(by_t.multiplicity(RatVector{-2}) == 1);

  const WeightDecomposition wd = weight_decomposition(s.L, ge, s.rc.t1);
  CHECK(weights_symmetric(wd));
  std::size_t total = 0;
  for (const auto& w : wd.weights) total += w.space.dim();
  CHECK(total == 41);
  const SubspaceBasis zero = wd.weights[*wd.find(RatVector(3))].space;
  CHECK(zero == centralizer_in(s.L, ge, s.rc.t1));

  const auto pms = pairing_matrices(s.L, wd, RatVector{1, 0, 0});
  for (const auto& pm : pms) {
    for (const auto& row : pm.entries)
      for (const auto& entry : row) CHECK(zero.contains(entry));
    CHECK(q_nonzero(pm, zero, 2).nonzero);
    if (pm.order() == 1) CHECK_FALSE(is_zero(pm.entries[0][0]));
  }
}

TEST_CASE("shipped E7 case") {
  auto& s = e7();
  const CaseReport r = verify_rigid_case(s.L, s.spec, 1);
  CHECK_MESSAGE(r.passed(), r.failure());
  CHECK(r.dim_ge == 41);
  CHECK(r.dim_le == 23);
  CHECK(r.dim_center == 2);
  CHECK(r.condition1);
  REQUIRE(r.certificate);
  CHECK(r.certificate->claimed_index == 7);
  const nlohmann::json j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("shipped E8 case") {
  const LieAlgebraTable L = chevalley_algebra({'E', 8});
  const RigidCaseSpec spec = load_case_file(kCaseDir + "/e8-84.case");
  const CaseReport r = verify_rigid_case(L, spec, 1);
  CHECK_MESSAGE(r.passed(), r.failure());
  CHECK(r.dim_le == 48);
  CHECK(r.t_weights.at(1) == 17);
  CHECK_FALSE(r.condition1);
  CHECK(r.condition2);
  std::size_t singular = 0;
  for (const auto& b : r.blocks) {
    if (b.q.nonzero) continue;
    ++singular;
    CHECK(b.order == 5);
    CHECK(b.q.method == QResult::Method::symbolic_det);
    REQUIRE(b.minor);
    CHECK(b.minor->found);
    CHECK(b.minor->dropped_row == 4);
    CHECK(b.minor->dropped_col == 4);
  }
  CHECK(singular == 1);
}

TEST_CASE("wrong expected dimension is a named failure") {
  auto& s = e7();
  RigidCaseSpec bad = s.spec;
  for (auto& [k, v] : bad.expect)
    if (k == "dim_ge") v = "42";
  const CaseReport r = verify_rigid_case(s.L, bad, 1);
  CHECK_FALSE(r.passed());
  CHECK(r.failure().find("dim_ge") == 0);
  CHECK_FALSE(r.certificate);
  CHECK(r.blocks.empty());

  RigidCaseSpec wrong_t = s.spec;
  wrong_t.t = {{"x1", 1}};
  const CaseReport r2 = verify_rigid_case(s.L, wrong_t, 1);
  CHECK_FALSE(r2.passed());
}
