#include "edp/algebra/integer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "edp/errors.hpp"

namespace edp {

Int parse_int(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

std::string to_string(const Int& value) { return value.get_str(10); }

const Int& primality_bound() {
  static const Int bound("3317044064679887385961981", 10);
  return bound;
}

namespace {

bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& odd, unsigned long twos,
                        unsigned long witness) {
  Int x;
  Int base(witness);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n >= primality_bound()) {
    throw InvalidModulus("modulus " + to_string(n) + " exceeds the deterministic primality bound");
  }
  static constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17,
                                                              19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned long w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w) != 0) return false;
  }
  Int n_minus_1 = n - 1;
  Int odd = n_minus_1;
  unsigned long twos = mpz_scan1(odd.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), twos);
  for (unsigned long w : kWitnesses) {
    if (!miller_rabin_round(n, n_minus_1, odd, twos, w)) return false;
  }
  return true;
}

Int random_below(std::mt19937_64& rng, const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    Int candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t word = rng();
      if (i == 0 && spare > 0) word >>= spare;
      Int part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate <<= 64;
      candidate += part;
    }
    if (candidate < bound) return candidate;
  }
}

std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("random_below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

}  // namespace edp
