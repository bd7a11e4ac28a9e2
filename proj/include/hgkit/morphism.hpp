#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hgkit/group.hpp"

namespace hgkit::group {

/// If sending gens[i] -> images[i] extends to a homomorphism h -> g (gens
/// must generate h), returns the full map indexed by elements of h.
std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& h, std::span<const Element> gens,
                                                        const FiniteGroup& g, std::span<const Element> images);

bool is_injective(std::span<const Element> map, std::size_t target_order);

}  // namespace hgkit::group
