#pragma once

// Test-only brute-force isomorphism search: pick a generating set of the
// first group, try every order-preserving image tuple in the second, and
// check the induced map. Fine up to order 64.

#include <algorithm>
#include <optional>
#include <vector>

#include "hgkit/group.hpp"

namespace hgkit::testing {

inline std::vector<group::Element> greedy_generators(const group::FiniteGroup& g) {
  std::vector<group::Element> gens;
  auto mask = g.closure_mask(gens);
  for (std::size_t a = g.order(); a-- > 1;) {
    if (mask[a]) continue;
    gens.push_back(static_cast<group::Element>(a));
    mask = g.closure_mask(gens);
  }
  return gens;
}

/// Returns phi with phi[x] the image of x, if the tuple `images` of the
/// generators extends to an isomorphism.
inline std::optional<std::vector<group::Element>> extend(const group::FiniteGroup& g, const group::FiniteGroup& h,
                                                         const std::vector<group::Element>& gens,
                                                         const std::vector<group::Element>& images) {
  std::vector<int> phi(g.order(), -1);
  phi[0] = 0;
  std::vector<group::Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = g.mul(x, gens[k]);
      const auto img = h.mul(static_cast<group::Element>(phi[x]), images[k]);
      if (phi[y] < 0) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(h.order(), false);
  for (int v : phi) {
    if (v < 0 || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  std::vector<group::Element> out(phi.begin(), phi.end());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (out[g.mul(a, b)] != h.mul(out[a], out[b])) return std::nullopt;
  return out;
}

inline bool isomorphic(const group::FiniteGroup& g, const group::FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  auto profile = [](const group::FiniteGroup& x) {
    std::vector<std::size_t> o(x.element_orders().begin(), x.element_orders().end());
    std::sort(o.begin(), o.end());
    return o;
  };
  if (profile(g) != profile(h)) return false;
  const auto gens = greedy_generators(g);
  std::vector<group::Element> images(gens.size(), 0);
  // odometer over candidate images with matching element orders
  std::vector<std::vector<group::Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t b = 0; b < h.order(); ++b)
      if (h.element_order(static_cast<group::Element>(b)) == g.element_order(gens[k]))
        candidates[k].push_back(static_cast<group::Element>(b));
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][idx[k]];
    if (extend(g, h, gens, images)) return true;
    std::size_t k = 0;
    while (k < gens.size() && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == gens.size()) return false;
  }
}

}  // namespace hgkit::testing
