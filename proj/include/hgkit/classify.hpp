#pragma once

// Group-theoretic eligibility predicates: obstruction detection, Sylow shape,
// Frobenius recognition with cyclic kernel and complement, and the
// classification report combining them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgkit/group.hpp"

namespace hgkit::group {

enum class ObstructionKind { NonCyclicAbelian, CompositeOrderElement, OrderFourElement };

std::string to_string(ObstructionKind kind);

/// NonCyclicAbelian: two commuting elements of equal prime order, the second
/// outside the cyclic group of the first. Otherwise a single element.
struct ObstructionWitness {
  ObstructionKind kind;
  std::vector<Element> witness;
};

std::vector<ObstructionWitness> detect_obstructions(const FiniteGroup& g);

/// Recomputes orders and commutation from the table.
bool verify_witness(const FiniteGroup& g, const ObstructionWitness& w);

enum class SylowKind { Cyclic, GeneralizedQuaternion, Other };

struct SylowShape {
  SylowKind kind;
  std::size_t order;
  bool operator==(const SylowShape&) const = default;
};

std::string to_string(SylowKind kind);

/// One Sylow p-subgroup, built by extending a p-subgroup with p-elements of
/// its normaliser until it reaches the full p-part of the order.
std::vector<Element> sylow_subgroup(const FiniteGroup& g, std::uint64_t p);
SylowShape sylow_shape(const FiniteGroup& g, std::uint64_t p);
/// Shape of the subgroup `sub` (which must be a p-group).
SylowShape classify_p_group(const FiniteGroup& g, const std::vector<Element>& sub);

struct FrobeniusDecomposition {
  std::size_t kernel_order;      // P
  std::size_t complement_order;  // Q
  std::vector<Element> kernel;
  std::vector<Element> complement;
};

/// Cyclic normal K of order P > 1 with a cyclic complement H of coprime
/// order Q > 1 such that no non-identity element of H centralises a
/// non-identity element of K.
std::optional<FrobeniusDecomposition> frobenius_cyclic_decomposition(const FiniteGroup& g);

struct ClassificationReport {
  std::string group_label;
  std::size_t order = 1;
  bool is_trivial = false;
  bool hg_real = false;
  bool hg_sqrt_minus1 = false;
  bool pd1_candidate = false;
  std::optional<std::pair<std::size_t, std::size_t>> frobenius_decomposition;
  std::map<std::uint64_t, SylowShape> sylow_shapes;
  std::vector<ObstructionWitness> obstructions;
};

ClassificationReport classify(const FiniteGroup& g);

void to_json(nlohmann::json& j, const ObstructionWitness& w);
void to_json(nlohmann::json& j, const SylowShape& s);
void to_json(nlohmann::json& j, const ClassificationReport& r);

}  // namespace hgkit::group
