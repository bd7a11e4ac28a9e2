#include "hgkit/morphism.hpp"

namespace hgkit::group {

std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& h, std::span<const Element> gens,
                                                        const FiniteGroup& g, std::span<const Element> images) {
  constexpr std::size_t unset = kMaxOrder;
  std::vector<std::size_t> phi(h.order(), unset);
  phi[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = h.mul(x, gens[k]);
      const Element img = g.mul(static_cast<Element>(phi[x]), images[k]);
      if (phi[y] == unset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != h.order()) return std::nullopt;
  return std::vector<Element>(phi.begin(), phi.end());
}

bool is_injective(std::span<const Element> map, std::size_t target_order) {
  std::vector<bool> seen(target_order, false);
  for (auto x : map) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace hgkit::group
