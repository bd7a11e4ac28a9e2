#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "hgkit/ntheory.hpp"

namespace hgkit::oracle {

inline constexpr unsigned kMaxFieldDegree = 12;
/// Baby-step/giant-step is only attempted below this subgroup order.
inline constexpr std::uint64_t kMaxDlogGroupOrder = std::uint64_t{1} << 40;

/// x is not a power of the base.
class NotInSubgroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FieldElement;

/// F_{p^k} as F_p[x]/(m), with m the least monic irreducible of degree k
/// under the ordering of its coefficient vector read from x^{k-1} down to x^0.
/// Handles are cheap to copy and immutable.
class FiniteField {
 public:
  /// Requires p prime, 1 <= k <= 12 and p^k < 2^63 (OverflowError otherwise).
  static FiniteField build(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t cardinality() const;
  /// Monic modulus, coefficients from x^0 up to x^k.
  const std::vector<std::uint64_t>& modulus() const;
  /// Factorisation of the multiplicative group order.
  const std::vector<nt::PrimePower>& group_order_factors() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer in the prime field.
  FieldElement from_int(std::int64_t n) const;
  /// Element with the given base-p digits as coefficients of 1, x, x^2, ...
  FieldElement from_index(std::uint64_t index) const;
  FieldElement from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
  /// The residue class of x.
  FieldElement generator() const;
  /// Least element (by index) of multiplicative order q - 1.
  FieldElement primitive_element() const;

  bool operator==(const FiniteField& other) const;

  struct Data;

 private:
  explicit FiniteField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
  friend class FieldElement;
};

class FieldElement {
 public:
  const FiniteField& field() const { return field_; }
  const std::array<std::uint64_t, kMaxFieldDegree>& coeffs() const { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement pow(std::uint64_t exp) const;
  FieldElement inverse() const;
  /// x -> x^p
  FieldElement frobenius() const;

  bool operator==(const FieldElement& o) const { return coeffs_ == o.coeffs_ && field_ == o.field_; }

 private:
  explicit FieldElement(FiniteField field) : field_(std::move(field)), coeffs_{} {}
  FiniteField field_;
  std::array<std::uint64_t, kMaxFieldDegree> coeffs_;
  friend class FiniteField;
};

/// Same as FiniteField::build.
FiniteField build_field(std::uint64_t p, unsigned k);

/// Least n >= 1 with x^n = 1; PreconditionError for x = 0.
std::uint64_t multiplicative_order(const FieldElement& x);

/// Least n >= 0 with base^n = x, by baby-step/giant-step in <base>.
/// NotInSubgroupError when x is not in <base>; OverflowError when the
/// order of base is 2^40 or more.
std::uint64_t discrete_log(const FieldElement& base, const FieldElement& x);

}  // namespace hgkit::oracle
