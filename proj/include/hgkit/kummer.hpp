#pragma once

// Ground-truth local invariants of X^d - u over the p-adic completion of Q
// for u = p^v * w with w a p-adic unit, in the tame case p does not divide d.
//
// Q_p(mu_d) is unramified of degree f0 = ord_d(p), and its multiplicative
// group modulo d-th powers is Z/d (valuation) x F_q^x / (F_q^x)^d with
// q = p^f0. The splitting field is Q_p(mu_d)(u^(1/d)); its degree over
// Q_p(mu_d) is the order n of the class of (v, w) there, the ramification
// index is the order e of v in Z/d, and the residue degree over Q_p is
// f0 * n / e.

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "hgkit/finite_field.hpp"

namespace hgkit::oracle {

struct KummerLocalInvariants {
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  std::uint64_t total_degree = 1;
  std::uint64_t f0 = 1;
  /// Order of the residue of w in F_q^x / (F_q^x)^d.
  std::uint64_t unit_class_order = 1;

  bool operator==(const KummerLocalInvariants&) const = default;
};

/// w given by its residue modulo p. Uses a discrete logarithm in F_{p^f0}
/// when that field fits in 64 bits, and otherwise a discrete logarithm in
/// F_p transported through the norm map.
KummerLocalInvariants kummer_local_invariants(std::uint64_t p, std::uint64_t d, std::int64_t v, std::int64_t w);

/// w given as an element of F_{p^f0} (the field returned by build_field(p, f0)).
KummerLocalInvariants kummer_local_invariants(std::uint64_t p, std::uint64_t d, std::int64_t v, const FieldElement& w);

/// Order of w in F_{p^f0}^x / d-th powers via the extension-field route.
/// Empty when p^f0 does not fit.
std::optional<std::uint64_t> unit_class_order_extension(std::uint64_t p, std::uint64_t d, std::int64_t w);
/// Same quantity via a discrete logarithm in the prime field.
std::uint64_t unit_class_order_prime_field(std::uint64_t p, std::uint64_t d, std::int64_t w);

/// Cached deterministic field F_{p^k} with its primitive element.
const FiniteField& cached_field(std::uint64_t p, unsigned k);

void to_json(nlohmann::json& j, const KummerLocalInvariants& inv);

}  // namespace hgkit::oracle
