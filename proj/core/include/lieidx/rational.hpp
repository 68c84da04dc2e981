#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lieidx {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

using Rng = std::mt19937_64;

/// Independent, reproducible stream `stream` derived from a user seed.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

RatVector random_integer_vector(Rng& rng, std::size_t n, long lo, long hi);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);

RatVector unit_vector(std::size_t n, std::size_t i);

/// a += s * b
void axpy(std::span<Rational> a, const Rational& s, std::span<const Rational> b);

}  // namespace lieidx
