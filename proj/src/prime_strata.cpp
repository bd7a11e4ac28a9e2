#include "hgkit/prime_strata.hpp"

#include <string>

namespace hgkit::strata {

namespace {

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::uint64_t stratum_of(std::uint64_t p, std::uint64_t d) {
  if (d == 0) throw PreconditionError("d must be positive");
  if (p == 2 || !nt::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
  if (d % p == 0) throw PreconditionError(std::to_string(p) + " divides d = " + std::to_string(d));
  return nt::gcd(d, p - 1);
}

Rational predicted_density(std::uint64_t d, std::uint64_t e) {
  if (d == 0 || e == 0 || d % e != 0) throw PreconditionError("e must divide d");
  std::int64_t hits = 0;
  for (std::uint64_t a = 1; a <= d; ++a)
    if (nt::gcd(a, d) == 1 && nt::gcd(d, a - 1) == e) ++hits;
  return Rational(hits, static_cast<std::int64_t>(nt::euler_phi(d)));
}

PrimeStratum enumerate_stratum(std::uint64_t d, std::uint64_t e, std::uint64_t bound) {
  PrimeStratum out{d, e, bound, {}, Rational(0), predicted_density(d, e)};
  std::int64_t eligible = 0;
  for (std::uint64_t p : nt::primes_up_to(bound)) {
    if (p == 2 || d % p == 0) continue;
    ++eligible;
    if (nt::gcd(d, p - 1) == e) out.primes.push_back(p);
  }
  if (eligible > 0) out.empirical_density = Rational(static_cast<std::int64_t>(out.primes.size()), eligible);
  return out;
}

std::vector<std::uint64_t> lemma32_prime_set(std::uint64_t q, std::uint64_t r, std::uint64_t bound) {
  if (!nt::is_prime(q) || !nt::is_prime(r)) throw PreconditionError("q and r must be primes");
  if (q == 2) throw PreconditionError("q = 2 is rejected: p != 1 mod 2 is vacuous for odd p");
  if (q == r) throw PreconditionError("q and r must be distinct");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : nt::primes_up_to(bound))
    if (p != q && p % r == 1 && p % q != 1) out.push_back(p);
  if (out.empty())
    throw EmptyResultError("no prime p <= " + std::to_string(bound) + " with p = 1 mod " + std::to_string(r) +
                           " and p != 1 mod " + std::to_string(q));
  return out;
}

std::vector<int> biquadratic_split(std::int64_t a, std::int64_t b, std::uint64_t p) {
  if (!nt::is_squarefree(a) || !nt::is_squarefree(b)) throw PreconditionError("a and b must be squarefree");
  if (p == 2 || !nt::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
  if (a % static_cast<std::int64_t>(p) == 0 || b % static_cast<std::int64_t>(p) == 0)
    throw PreconditionError(std::to_string(p) + " ramifies in the biquadratic field");
  const auto g = static_cast<std::int64_t>(nt::gcd(a < 0 ? -a : a, b < 0 ? -b : b));
  const std::int64_t c = (a / g) * (b / g);
  if (a == 1 || b == 1 || c == 1) throw PreconditionError("degenerate: not a biquadratic field");
  std::vector<int> out;
  const std::int64_t radicands[] = {a, b, c};
  for (int j = 0; j < 3; ++j)
    if (nt::legendre(radicands[j], p) == 1) out.push_back(j + 1);
  return out;
}

void to_json(nlohmann::json& j, const PrimeStratum& s) {
  j = nlohmann::json{{"d", s.d},
                     {"e", s.e},
                     {"bound", s.bound},
                     {"primes", s.primes},
                     {"empirical_density", rational_text(s.empirical_density)},
                     {"predicted_density", rational_text(s.predicted_density)},
                     {"empirical_density_value", boost::rational_cast<double>(s.empirical_density)},
                     {"predicted_density_value", boost::rational_cast<double>(s.predicted_density)}};
}

}  // namespace hgkit::strata
