#include "hgkit/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hgkit/ntheory.hpp"

namespace hgkit::group {

namespace {

void check_order(std::size_t n) {
  if (n == 0 || n > kMaxOrder)
    throw PreconditionError("group order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
}

using Perm = std::vector<std::uint8_t>;

FiniteGroup permutation_group(std::vector<Perm> elems, std::string label) {
  std::sort(elems.begin(), elems.end());  // identity is lexicographically first
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  Perm prod(elems.front().size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // apply a first, then b
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = elems[b][elems[a][i]];
      table[a * n + b] = index.at(prod);
    }
  return FiniteGroup(n, std::move(table), std::move(label));
}

std::vector<Perm> all_permutations(unsigned degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  check_order(n);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  check_order(2 * n);
  auto g = semidirect_cyclic(n, 2, static_cast<std::int64_t>(n) - 1);
  g.set_label("D" + std::to_string(n));
  return g;
}

FiniteGroup quaternion(std::size_t n) {
  check_order(n);
  if (n < 8 || (n & (n - 1)) != 0)
    throw PreconditionError("generalized quaternion order must be a power of two >= 8, got " + std::to_string(n));
  // a^i b^j, index i + half*j; b a = a^-1 b, b^2 = a^(half/2)
  const std::size_t half = n / 2;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = x % half, j = x / half, s = y % half, t = y / half;
      std::size_t ai, bj;
      if (j == 0) {
        ai = (i + s) % half;
        bj = t;
      } else {
        ai = (i + half - s) % half;
        bj = 1 + t;
        if (bj == 2) {
          ai = (ai + half / 2) % half;
          bj = 0;
        }
      }
      table[x * n + y] = static_cast<Element>(ai + half * bj);
    }
  return FiniteGroup(n, std::move(table), "Q" + std::to_string(n));
}

FiniteGroup symmetric(unsigned degree) {
  if (degree == 0 || degree > 6) throw PreconditionError("symmetric group degree must be in [1, 6]");
  return permutation_group(all_permutations(degree), "S" + std::to_string(degree));
}

FiniteGroup alternating(unsigned degree) {
  if (degree == 0 || degree > 7) throw PreconditionError("alternating group degree must be in [1, 7]");
  auto perms = all_permutations(degree);
  std::erase_if(perms, [](const Perm& p) { return !is_even(p); });
  return permutation_group(std::move(perms), "A" + std::to_string(degree));
}

FiniteGroup semidirect_cyclic(std::size_t P, std::size_t Q, std::int64_t k) {
  if (P == 0 || Q == 0) throw PreconditionError("semidirect_cyclic: P and Q must be positive");
  check_order(P * Q);
  const std::uint64_t kk = nt::reduce(k, P);
  if (nt::gcd(kk, P) != 1 && P > 1)
    throw PreconditionError("semidirect_cyclic: gcd(" + std::to_string(k) + ", " + std::to_string(P) + ") != 1");
  if (nt::pow_mod(kk, Q, P) != 1 % P)
    throw PreconditionError("semidirect_cyclic: " + std::to_string(k) + "^" + std::to_string(Q) +
                            " is not congruent to 1 mod " + std::to_string(P));
  // b^j a^s b^-j = a^(s * k^-j)
  const std::uint64_t kinv = P > 1 ? nt::inv_mod(kk, P) : 0;
  std::vector<std::uint64_t> twist(Q, 1 % P);
  for (std::size_t j = 1; j < Q; ++j) twist[j] = P > 1 ? nt::mul_mod(twist[j - 1], kinv, P) : 0;
  const std::size_t n = P * Q;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % P, j = x / P;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t s = y % P, t = y / P;
      const std::size_t ai = (i + s * twist[j]) % P;
      const std::size_t bj = (j + t) % Q;
      table[x * n + y] = static_cast<Element>(ai + P * bj);
    }
  }
  return FiniteGroup(n, std::move(table),
                     "SD:" + std::to_string(P) + "," + std::to_string(Q) + "," + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_order(n);
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto l = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto r = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(l * nb + r);
    }
  return FiniteGroup(n, std::move(table), "X:" + a.label() + "*" + b.label());
}

}  // namespace hgkit::group
