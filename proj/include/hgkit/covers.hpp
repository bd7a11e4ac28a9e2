#pragma once

// Kummer covers X^d - c t^m of the projective t-line and the local behaviour
// of their specializations t -> t0 at a prime p. The cover is branched only
// over t = 0 and t = infinity, with cyclic inertia of order d / gcd(d, m)
// at both.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgkit/kummer.hpp"
#include "hgkit/ntheory.hpp"

namespace hgkit::covers {

struct KummerCover {
  std::uint64_t d;
  std::uint64_t m;
  Rational c;
  /// Requires d >= 2, m >= 1, c != 0.
  KummerCover(std::uint64_t d, std::uint64_t m, Rational c);
};

/// "d=<int>,m=<int>,c=<rational>"
KummerCover parse_cover_spec(std::string_view text);

enum class BranchPoint { Zero, Infinity };

struct BranchDatum {
  BranchPoint point;
  std::uint64_t inertia_order;
  bool operator==(const BranchDatum&) const = default;
};

/// Zero and Infinity with inertia order d / gcd(d, m); empty when that is 1.
std::vector<BranchDatum> branch_data(const KummerCover& cover);

/// max(0, v_p(t0)) at Zero, max(0, -v_p(t0)) at Infinity. t0 != 0.
std::uint64_t intersection_multiplicity(const Rational& t0, BranchPoint point, std::uint64_t p);

/// p = 2, p | d, or p divides the numerator or denominator of c.
bool is_exceptional(const KummerCover& cover, std::uint64_t p);

struct Prediction {
  /// Branch point that t0 meets at p, if any.
  std::optional<BranchPoint> point;
  std::uint64_t multiplicity = 0;
  std::uint64_t branch_inertia = 1;
  std::uint64_t predicted_e = 1;
  std::optional<std::uint64_t> predicted_f;
  bool exceptional = false;
};

/// predicted_e = e_i / gcd(e_i, k). predicted_f (only when gcd(k, e_i) = 1
/// and p is tame with c a p-unit) is the residue degree of X^d - c^{e_i}
/// over Q_p: the unit part of c t0^m contributes to the residue degree
/// only through c^{e_i}, since e_i m = 0 mod d.
Prediction predict_specialization(const KummerCover& cover, const Rational& t0, std::uint64_t p);

struct SpecializationReport {
  KummerCover cover;
  Rational t0;
  std::uint64_t p;
  Prediction prediction;
  oracle::KummerLocalInvariants oracle;
  bool agree;
};

/// Oracle on u = c t0^m, with v = v_p(c) + m v_p(t0) and w the residue of
/// unit(c) unit(t0)^m. Wild primes (p | d) are rejected.
SpecializationReport verify_beckmann(const KummerCover& cover, const Rational& t0, std::uint64_t p);

struct SweepOptions {
  std::uint64_t prime_bound = 10000;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SweepSummary {
  std::size_t samples = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t exceptional = 0;
  std::size_t ramified = 0;
  std::size_t with_predicted_f = 0;
};

/// Per-stratum tally for d an odd prime power: primes with gcd(d, p-1) = e,
/// and how often a totally ramified specialization has f = d / e.
struct StratumTally {
  std::uint64_t e;
  std::size_t samples = 0;
  std::size_t totally_ramified = 0;
  std::size_t f_equals_d_over_e = 0;
};

struct SweepResult {
  std::vector<SpecializationReport> reports;
  SweepSummary summary;
  /// Present when d is an odd prime power.
  std::optional<std::vector<StratumTally>> stratum_law;
};

/// Random (t0, p): p uniform among primes <= prime_bound that are not
/// exceptional for the cover, t0 = p^j a / b with a, b in [1, 10^4] and
/// |j| small enough that the result fits. Samples are drawn sequentially
/// from the seed and evaluated on `threads` workers; the report order is
/// the draw order.
SweepResult sweep(const KummerCover& cover, const SweepOptions& options);

std::string to_string(BranchPoint point);

void to_json(nlohmann::json& j, const KummerCover& cover);
void to_json(nlohmann::json& j, const BranchDatum& b);
void to_json(nlohmann::json& j, const SpecializationReport& r);
void to_json(nlohmann::json& j, const SweepSummary& s);
void to_json(nlohmann::json& j, const StratumTally& s);

}  // namespace hgkit::covers
