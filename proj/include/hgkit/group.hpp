#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hgkit::group {

using Element = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 2048;

/// A finite group given by its full Cayley table. Element 0 is the identity.
///
/// Construction validates the Latin-square property, the two-sided identity,
/// and associativity (Light's test over a generating set, which is exact).
class FiniteGroup {
 public:
  /// Validating constructor; `table` is row-major, order*order entries.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string label);

  static FiniteGroup trivial();

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element identity() const { return 0; }
  Element pow(Element a, std::int64_t n) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  /// b^-1 a b
  Element conjugate(Element a, Element b) const { return mul(mul(inverse_[b], a), b); }

  /// Smallest n >= 1 with a^n = 1. Throws PreconditionError on a bad index.
  std::size_t element_order(Element a) const;
  std::span<const std::size_t> element_orders() const { return orders_; }
  std::size_t exponent() const;

  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<Element> center() const;

  /// Membership mask of the subgroup generated by `gens`.
  std::vector<bool> closure_mask(std::span<const Element> gens) const;
  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<Element> closure(std::span<const Element> gens) const;
  std::vector<Element> cyclic_subgroup(Element g) const;
  bool is_normal(std::span<const Element> subgroup) const;

  std::span<const Element> table() const { return table_; }

  /// Same group with elements renamed by `perm` (new index of old element i
  /// is perm[i]); perm[0] must be 0.
  FiniteGroup relabel(std::span<const Element> perm) const;

 private:
  void validate() const;

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
  std::string label_;
};

}  // namespace hgkit::group
