#pragma once

// Primes of Q sorted by how many d-th roots of unity their completions
// contain: p lies in S_e^(d) when mu_d n Q_p = mu_e, i.e. gcd(d, p - 1) = e.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hgkit/ntheory.hpp"

namespace hgkit::strata {

/// A query whose answer would be empty at the requested bound.
class EmptyResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeStratum {
  std::uint64_t d;
  std::uint64_t e;
  std::uint64_t bound;
  std::vector<std::uint64_t> primes;
  /// Members over all odd primes up to the bound not dividing d.
  Rational empirical_density;
  /// #{a in (Z/d)^x : gcd(d, a - 1) = e} / phi(d).
  Rational predicted_density;
};

/// gcd(d, p - 1) for an odd prime p not dividing d.
std::uint64_t stratum_of(std::uint64_t p, std::uint64_t d);

PrimeStratum enumerate_stratum(std::uint64_t d, std::uint64_t e, std::uint64_t bound);
Rational predicted_density(std::uint64_t d, std::uint64_t e);

/// Primes p <= bound, p != q, with p = 1 mod r and p != 1 mod q: split in
/// Q(zeta_r), not split in Q(zeta_q). Only the cyclotomic part of the
/// obstruction set is modelled. Rejects q = 2 and q = r; throws
/// EmptyResultError when nothing qualifies.
std::vector<std::uint64_t> lemma32_prime_set(std::uint64_t q, std::uint64_t r, std::uint64_t bound);

/// Indices j in {1, 2, 3} of the quadratic fields Q(sqrt a), Q(sqrt b),
/// Q(sqrt ab') (ab' = ab / gcd(a, b)^2) in which p splits.
std::vector<int> biquadratic_split(std::int64_t a, std::int64_t b, std::uint64_t p);

void to_json(nlohmann::json& j, const PrimeStratum& s);

}  // namespace hgkit::strata
