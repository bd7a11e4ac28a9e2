#pragma once

// Elementary 64-bit number theory shared by every module: modular
// arithmetic, primality, factorisation, valuations and residue symbols.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace hgkit {

using Rational = boost::rational<std::int64_t>;

/// Raised when an input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace nt {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
/// Representative of a in [0, m).
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorisation (Pollard-Brent rho), sorted by prime.
std::vector<PrimePower> factor(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo an odd prime (or 2).
std::uint64_t primitive_root(std::uint64_t p);

/// Checked a^k; throws OverflowError past 2^63.
std::uint64_t checked_pow(std::uint64_t a, unsigned k);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::uint64_t p);
/// p-adic valuation of a nonzero rational.
int valuation(const Rational& r, std::uint64_t p);
/// Residue modulo p of the p-unit part r / p^{v_p(r)}.
std::uint64_t unit_residue(const Rational& r, std::uint64_t p);

/// Legendre symbol (a | p) for an odd prime p, in {-1, 0, 1}.
int legendre(std::int64_t a, std::uint64_t p);

bool is_square(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Primes up to `bound` by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// "a" or "a/b" with b != 0; throws PreconditionError otherwise.
Rational parse_rational(std::string_view text);
/// "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& r);

}  // namespace nt
}  // namespace hgkit
