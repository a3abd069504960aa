#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace edp {

// Arbitrary-precision signed integer. Every coefficient in the library is one
// of these; nothing is ever rounded.
using Int = mpz_class;

// Parses an optionally signed decimal integer. Throws ParseError.
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

// Moduli at or above this bound are rejected: the fixed Miller-Rabin witness
// set {2, ..., 41} is only proven deterministic below it.
const Int& primality_bound();

// Deterministic Miller-Rabin. Throws InvalidModulus when n >= primality_bound().
bool is_prime(const Int& n);

// Uniform integer in [0, bound) drawn from raw generator output, so the
// sequence is identical across standard library implementations.
Int random_below(std::mt19937_64& rng, const Int& bound);

// Uniform integer in [0, bound) for small bounds.
std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace edp
