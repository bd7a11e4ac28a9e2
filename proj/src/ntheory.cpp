#include "hgkit/ntheory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace hgkit::nt {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = gcd(a, b);
  const u128 r = static_cast<u128>(a / g) * b;
  if (r > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("lcm overflow");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1)
    throw PreconditionError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  const __int128 r = static_cast<__int128>(a) % static_cast<__int128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

bool is_prime(std::uint64_t n) {
  if (n < kTrialDivisionLimit) return trial_division_prime(n);
  if (n % 2 == 0) return false;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL})
    if (miller_rabin_witness(n, a, d, s)) return false;
  return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cannot factor 0");
  std::map<std::uint64_t, unsigned> acc;
  factor_into(n, acc);
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (auto [p, e] : acc) out.push_back({p, e});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (std::uint64_t p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factor(n).size() == 1; }

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  if (gcd(a, m) != 1)
    throw PreconditionError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  std::uint64_t ord = euler_phi(m);
  for (std::uint64_t r : prime_divisors(ord))
    while (ord % r == 0 && pow_mod(a, ord / r, m) == 1) ord /= r;
  return ord;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const auto rs = prime_divisors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t r : rs)
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

std::uint64_t checked_pow(std::uint64_t a, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (a != 0 && r > (std::numeric_limits<std::uint64_t>::max() >> 1) / a)
      throw OverflowError(std::to_string(a) + "^" + std::to_string(k) + " exceeds 2^63");
    r *= a;
  }
  return r;
}

int valuation(std::int64_t n, std::uint64_t p) {
  if (n == 0) throw PreconditionError("valuation of 0");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& r, std::uint64_t p) {
  return valuation(r.numerator(), p) - valuation(r.denominator(), p);
}

std::uint64_t unit_residue(const Rational& r, std::uint64_t p) {
  std::int64_t num = r.numerator(), den = r.denominator();
  const auto sp = static_cast<std::int64_t>(p);
  while (num % sp == 0) num /= sp;
  while (den % sp == 0) den /= sp;
  return mul_mod(reduce(num, p), inv_mod(reduce(den, p), p), p);
}

int legendre(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s * s == n;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  const std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  if (m == 1) return true;
  for (const auto& pp : factor(m))
    if (pp.exponent > 1) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto parse = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw PreconditionError("bad rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse(text));
  const std::int64_t den = parse(text.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hgkit::nt
