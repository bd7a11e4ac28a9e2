#pragma once

// Tame local Galois theory over Q_p. A tamely ramified Galois extension of
// Q_p has group generated by sigma (a Frobenius lift) and tau (inertia)
// with sigma^-1 tau sigma = tau^q, where q = p is the residue cardinality.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgkit/group.hpp"
#include "hgkit/ntheory.hpp"

namespace hgkit::tame {

using group::Element;
using group::FiniteGroup;

/// Residue field cardinality of a p-adic completion of Q.
struct TameLocalField {
  std::uint64_t q;
  explicit TameLocalField(std::uint64_t q);
};

/// A pair (sigma, tau) of elements of some group with sigma^-1 tau sigma =
/// tau^q and gcd(ord tau, q) = 1. The group is kept by the caller.
struct TamePair {
  Element sigma;
  Element tau;
  std::uint64_t q;
  bool operator==(const TamePair&) const = default;
};

bool verify_tame_pair(const FiniteGroup& g, const TamePair& pair);

/// Whether Q_q has a cyclic extension of degree d with ramification index
/// exactly e: iff e | q - 1. Requires q prime, e | d and gcd(d, q) = 1.
bool cyclic_tame_exists(std::uint64_t q, std::uint64_t d, std::uint64_t e);

/// All generating tame pairs of g for residue cardinality q, ordered by
/// (tau, sigma).
std::vector<TamePair> enumerate_tame_pairs(const FiniteGroup& g, std::uint64_t q);

struct LocalExtensionSpec {
  std::uint64_t p = 2;
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  /// Decomposition group the local extension must have, up to isomorphism.
  std::optional<FiniteGroup> group;
  std::string group_spec;
};

/// "p=<prime>,e=<int>,f=<int>[,D=<group-spec>]"; D must come last since
/// group specs may contain commas.
LocalExtensionSpec parse_local_spec(std::string_view text);
/// A JSON array whose entries are spec strings or objects {p, e, f, D?}.
std::vector<LocalExtensionSpec> parse_local_specs(const nlohmann::json& batch);

struct LocalFeasibility {
  LocalExtensionSpec spec;
  bool feasible = false;
  /// Pair generating the decomposition subgroup, when feasible.
  std::optional<TamePair> witness;
};

struct GrunwaldReport {
  std::vector<LocalFeasibility> problems;
  bool feasible = true;
};

/// A problem at p is feasible iff some subgroup D = <sigma, tau> of g has a
/// tame pair over p with ord tau = e and |D| = e f (and D isomorphic to the
/// requested group, if any). Wild problems (p | e) raise PreconditionError.
LocalFeasibility local_feasible(const FiniteGroup& g, const LocalExtensionSpec& spec);
GrunwaldReport grunwald_feasible(const FiniteGroup& g, const std::vector<LocalExtensionSpec>& problems);

struct C4Embedding {
  bool embeddable;
  /// a is a rational square, so Q(sqrt a) is trivial.
  bool degenerate;
};

/// Q(sqrt a) embeds in a C4-extension iff a is a sum of two rational
/// squares: a > 0 and v_l(a) even for every prime l = 3 mod 4.
C4Embedding c4_embeddable_quadratic(const Rational& a);

void to_json(nlohmann::json& j, const TamePair& pair);
void to_json(nlohmann::json& j, const LocalExtensionSpec& spec);
void to_json(nlohmann::json& j, const LocalFeasibility& r);
void to_json(nlohmann::json& j, const GrunwaldReport& r);
void to_json(nlohmann::json& j, const C4Embedding& r);

}  // namespace hgkit::tame
