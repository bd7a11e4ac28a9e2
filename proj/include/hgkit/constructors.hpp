#pragma once

#include <cstdint>
#include <string>

#include "hgkit/group.hpp"

namespace hgkit::group {

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n.
FiniteGroup dihedral(std::size_t n);
/// Generalized quaternion group of order n (a power of two, n >= 8).
FiniteGroup quaternion(std::size_t n);
FiniteGroup symmetric(unsigned degree);
FiniteGroup alternating(unsigned degree);

/// C_P x| C_Q with a^P = b^Q = 1 and b^-1 a b = a^k. Elements a^i b^j are
/// numbered i + P*j. Requires gcd(k, P) = 1 and ord_P(k) | Q.
FiniteGroup semidirect_cyclic(std::size_t P, std::size_t Q, std::int64_t k);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace hgkit::group
