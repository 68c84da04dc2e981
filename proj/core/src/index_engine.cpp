#include "lieidx/index_engine.hpp"

#include "lieidx/errors.hpp"
#include "lieidx/parallel.hpp"

namespace lieidx {

SubalgebraStructure subalgebra_structure(const LieAlgebraTable& L, const SubspaceBasis& sub) {
  if (sub.ambient_dim() != L.dim()) throw InputError("subalgebra_structure: wrong ambient dimension");
  SubalgebraStructure s;
  s.basis = sub;
  const std::size_t d = sub.dim();
  s.table.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVector v = L.bracket(sub[i], sub[j]);
      if (is_zero(v)) continue;
      if (!sub.contains(v)) throw InputError("subspace is not closed under the bracket");
      auto& terms = s.table[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(v[sub.pivots()[k]]) != 0) terms.push_back({k, v[sub.pivots()[k]]});
    }
  return s;
}

std::size_t kirillov_rank(const SubalgebraStructure& s, std::span<const Rational> xi) {
  const std::size_t d = s.dim();
  if (xi.size() != d) throw InputError("kirillov_rank: functional has the wrong length");
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational v = 0;
      for (const auto& t : s.table[i * d + j]) v += xi[t.index] * t.coeff;
      m(j, i) = -v;
      m(i, j) = std::move(v);
    }
  const std::size_t r = rank(m);
  if (r % 2 != 0) throw InternalError("odd rank of an alternating matrix");
  return r;
}

std::size_t kirillov_rank(const LieAlgebraTable& L, const SubspaceBasis& sub, std::span<const Rational> xi) {
  return kirillov_rank(subalgebra_structure(L, sub), xi);
}

RatVector sample_functional(std::uint64_t seed, std::size_t index, std::size_t dim) {
  Rng rng = stream_rng(seed, index);
  return random_integer_vector(rng, dim, -99, 99);
}

IndexUpperBound index_upper_bound(const SubalgebraStructure& s, std::size_t samples, std::uint64_t seed,
                                  std::size_t parallelism) {
  IndexUpperBound out;
  out.bound = s.dim();
  out.sampled_ranks.assign(samples, 0);
  std::vector<RatVector> xis(samples);
  parallel_for(samples, parallelism, [&](std::size_t i) {
    xis[i] = sample_functional(seed, i, s.dim());
    out.sampled_ranks[i] = kirillov_rank(s, xis[i]);
  });
  for (std::size_t i = 0; i < samples; ++i)
    if (i == 0 || out.sampled_ranks[i] > out.best_rank) {
      out.best_rank = out.sampled_ranks[i];
      out.best_functional = xis[i];
    }
  out.bound = s.dim() - out.best_rank;
  return out;
}

IndexCertificate certify_elashvili(const LieAlgebraTable& L, const OrbitDescriptor& orbit, std::uint64_t seed,
                                   std::size_t samples, std::size_t parallelism) {
  const SubalgebraStructure s = subalgebra_structure(L, orbit.centralizer);
  const std::size_t d = s.dim();
  const std::size_t l = L.rank();

  IndexCertificate c;
  c.subalgebra_dim = d;
  c.algebra_rank = l;
  c.rng_seed = seed;
  c.lower_bound_source = IndexCertificate::LowerBound::vinberg_rank;
  c.claimed_index = d;

  const std::size_t batch = std::max<std::size_t>(1, parallelism);
  std::size_t best = 0;
  for (std::size_t start = 0; start < samples && !c.certified; start += batch) {
    const std::size_t count = std::min(batch, samples - start);
    std::vector<std::size_t> ranks(count);
    std::vector<RatVector> xis(count);
    parallel_for(count, parallelism, [&](std::size_t k) {
      xis[k] = sample_functional(seed, start + k, d);
      ranks[k] = kirillov_rank(s, xis[k]);
    });
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t r = ranks[k];
      c.sampled_ranks.push_back(r);
      c.samples_tried = start + k + 1;
      if (d < r + l) c.vinberg_ok = false;
      if ((d - r + l) % 2 != 0) c.parity_ok = false;
      if (c.samples_tried == 1 || r > best) {
        best = r;
        c.witness_rank = r;
        c.witness_functional = xis[k];
      }
      if (d == r + l) {
        c.certified = true;
        break;
      }
    }
  }
  c.claimed_index = d - c.witness_rank;
  c.certified = c.certified && c.vinberg_ok;
  return c;
}

bool replay_certificate(const LieAlgebraTable& L, const SubspaceBasis& sub, const IndexCertificate& cert) {
  if (sub.dim() != cert.subalgebra_dim || cert.witness_functional.size() != sub.dim()) return false;
  return kirillov_rank(L, sub, cert.witness_functional) == cert.witness_rank;
}

nlohmann::json to_json(const IndexCertificate& c) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& q : c.witness_functional) witness.push_back(to_string(q));
  return {
      {"subalgebra_dim", c.subalgebra_dim},
      {"algebra_rank", c.algebra_rank},
      {"claimed_index", c.claimed_index},
      {"witness_functional", witness},
      {"witness_rank", c.witness_rank},
      {"samples_tried", c.samples_tried},
      {"sampled_ranks", c.sampled_ranks},
      {"rng_seed", c.rng_seed},
      {"lower_bound_source", c.lower_bound_source == IndexCertificate::LowerBound::vinberg_rank ? "vinberg_rank" : "none"},
      {"certified", c.certified},
      {"parity_ok", c.parity_ok},
      {"vinberg_ok", c.vinberg_ok},
  };
}

IndexCertificate certificate_from_json(const nlohmann::json& j) {
  IndexCertificate c;
  try {
    c.subalgebra_dim = j.at("subalgebra_dim").get<std::size_t>();
    c.algebra_rank = j.at("algebra_rank").get<std::size_t>();
    c.claimed_index = j.at("claimed_index").get<std::size_t>();
    for (const auto& s : j.at("witness_functional")) c.witness_functional.emplace_back(s.get<std::string>());
    for (auto& q : c.witness_functional) q.canonicalize();
    c.witness_rank = j.at("witness_rank").get<std::size_t>();
    c.samples_tried = j.at("samples_tried").get<std::size_t>();
    c.sampled_ranks = j.at("sampled_ranks").get<std::vector<std::size_t>>();
    c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    c.lower_bound_source = j.at("lower_bound_source").get<std::string>() == "vinberg_rank"
                               ? IndexCertificate::LowerBound::vinberg_rank
                               : IndexCertificate::LowerBound::none;
    c.certified = j.at("certified").get<bool>();
    c.parity_ok = j.at("parity_ok").get<bool>();
    c.vinberg_ok = j.at("vinberg_ok").get<bool>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed certificate: ") + ex.what());
  }
  return c;
}

}  // namespace lieidx
