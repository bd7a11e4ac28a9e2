#include "hgkit/classify.hpp"

#include <algorithm>
#include <numeric>

#include "hgkit/ntheory.hpp"

namespace hgkit::group {

namespace {

bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, std::uint64_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// 2, or a power of an odd prime.
bool two_or_odd_prime_power(std::size_t n) {
  return n == 2 || (n % 2 == 1 && nt::is_prime_power(n));
}

}  // namespace

std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::NonCyclicAbelian: return "NonCyclicAbelian";
    case ObstructionKind::CompositeOrderElement: return "CompositeOrderElement";
    case ObstructionKind::OrderFourElement: return "OrderFourElement";
  }
  return "?";
}

std::string to_string(SylowKind kind) {
  switch (kind) {
    case SylowKind::Cyclic: return "Cyclic";
    case SylowKind::GeneralizedQuaternion: return "GeneralizedQuaternion";
    case SylowKind::Other: return "Other";
  }
  return "?";
}

std::vector<ObstructionWitness> detect_obstructions(const FiniteGroup& g) {
  std::vector<ObstructionWitness> out;
  const auto orders = g.element_orders();
  const std::size_t n = g.order();

  // Elements of prime order, bucketed by prime.
  std::map<std::size_t, std::vector<Element>> by_prime;
  for (std::size_t a = 1; a < n; ++a)
    if (nt::is_prime(orders[a])) by_prime[orders[a]].push_back(static_cast<Element>(a));

  std::vector<bool> in_cyclic(n, false);
  bool found = false;
  for (const auto& [q, elems] : by_prime) {
    for (std::size_t i = 0; i < elems.size() && !found; ++i) {
      const Element x = elems[i];
      const auto cyc = g.cyclic_subgroup(x);
      for (Element c : cyc) in_cyclic[c] = true;
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const Element y = elems[j];
        if (!in_cyclic[y] && g.commute(x, y)) {
          out.push_back({ObstructionKind::NonCyclicAbelian, {x, y}});
          found = true;
          break;
        }
      }
      for (Element c : cyc) in_cyclic[c] = false;
    }
    if (found) break;
  }

  for (std::size_t a = 1; a < n; ++a)
    if (nt::prime_divisors(orders[a]).size() >= 2) {
      out.push_back({ObstructionKind::CompositeOrderElement, {static_cast<Element>(a)}});
      break;
    }
  for (std::size_t a = 1; a < n; ++a)
    if (orders[a] == 4) {
      out.push_back({ObstructionKind::OrderFourElement, {static_cast<Element>(a)}});
      break;
    }
  return out;
}

bool verify_witness(const FiniteGroup& g, const ObstructionWitness& w) {
  for (Element e : w.witness)
    if (e >= g.order()) return false;
  switch (w.kind) {
    case ObstructionKind::NonCyclicAbelian: {
      if (w.witness.size() != 2) return false;
      const Element x = w.witness[0], y = w.witness[1];
      const std::size_t q = g.element_order(x);
      if (!nt::is_prime(q) || g.element_order(y) != q || !g.commute(x, y)) return false;
      Element p = 0;
      for (std::size_t i = 0; i < q; ++i, p = g.mul(p, x))
        if (p == y) return false;
      return true;
    }
    case ObstructionKind::CompositeOrderElement:
      return w.witness.size() == 1 && nt::prime_divisors(g.element_order(w.witness[0])).size() >= 2;
    case ObstructionKind::OrderFourElement:
      return w.witness.size() == 1 && g.element_order(w.witness[0]) == 4;
  }
  return false;
}

std::vector<Element> sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  const std::size_t n = g.order();
  if (p < 2 || !nt::is_prime(p) || n % p != 0)
    throw PreconditionError(std::to_string(p) + " is not a prime divisor of the group order " + std::to_string(n));
  const std::size_t target = p_part(n, p);
  const auto orders = g.element_orders();

  std::vector<Element> p_elements;
  for (std::size_t a = 1; a < n; ++a)
    if (is_p_power(orders[a], p)) p_elements.push_back(static_cast<Element>(a));

  std::vector<Element> gens;
  std::vector<Element> sub{0};
  std::vector<bool> in = g.closure_mask(gens);
  while (sub.size() < target) {
    bool extended = false;
    for (Element x : p_elements) {
      if (in[x]) continue;
      // x normalises sub, so <sub, x> = sub<x> is again a p-group.
      bool normalises = true;
      for (Element h : sub)
        if (!in[g.conjugate(h, x)]) {
          normalises = false;
          break;
        }
      if (!normalises) continue;
      gens.push_back(x);
      in = g.closure_mask(gens);
      sub.clear();
      for (std::size_t a = 0; a < n; ++a)
        if (in[a]) sub.push_back(static_cast<Element>(a));
      extended = true;
      break;
    }
    // A proper p-subgroup always has p-elements in its normaliser outside it.
    if (!extended) throw std::logic_error("Sylow search stalled");
  }
  return sub;
}

SylowShape classify_p_group(const FiniteGroup& g, const std::vector<Element>& sub) {
  const std::size_t m = sub.size();
  const auto orders = g.element_orders();
  auto has_order = [&](std::size_t o) {
    return std::any_of(sub.begin(), sub.end(), [&](Element x) { return orders[x] == o; });
  };
  if (has_order(m)) return {SylowKind::Cyclic, m};
  if (m >= 8) {
    const auto involutions = std::count_if(sub.begin(), sub.end(), [&](Element x) { return orders[x] == 2; });
    if (involutions == 1) {
      for (Element a : sub) {
        if (orders[a] != m / 2) continue;
        const auto cyc = g.cyclic_subgroup(a);
        const Element a_inv = g.inverse(a);
        for (Element b : sub)
          if (orders[b] == 4 && !std::binary_search(cyc.begin(), cyc.end(), b) && g.conjugate(a, b) == a_inv)
            return {SylowKind::GeneralizedQuaternion, m};
        break;
      }
    }
  }
  return {SylowKind::Other, m};
}

SylowShape sylow_shape(const FiniteGroup& g, std::uint64_t p) {
  return classify_p_group(g, sylow_subgroup(g, p));
}

std::optional<FrobeniusDecomposition> frobenius_cyclic_decomposition(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto orders = g.element_orders();
  std::vector<bool> kernel_seen(n, false);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t P = orders[k];
    const std::size_t Q = n / P;
    if (kernel_seen[k] || Q == 1 || nt::gcd(P, Q) != 1) continue;
    const auto kernel = g.cyclic_subgroup(static_cast<Element>(k));
    for (Element x : kernel)
      if (orders[x] == P) kernel_seen[x] = true;
    if (!g.is_normal(kernel)) continue;

    std::vector<bool> complement_seen(n, false);
    for (std::size_t h = 1; h < n; ++h) {
      if (orders[h] != Q || complement_seen[h]) continue;
      const auto complement = g.cyclic_subgroup(static_cast<Element>(h));
      for (Element x : complement)
        if (orders[x] == Q) complement_seen[x] = true;
      bool fixed_point_free = true;
      for (std::size_t i = 1; i < complement.size() && fixed_point_free; ++i)
        for (std::size_t j = 1; j < kernel.size(); ++j)
          if (g.commute(complement[i], kernel[j])) {
            fixed_point_free = false;
            break;
          }
      if (fixed_point_free) return FrobeniusDecomposition{P, Q, kernel, complement};
    }
  }
  return std::nullopt;
}

ClassificationReport classify(const FiniteGroup& g) {
  ClassificationReport r;
  r.group_label = g.label();
  r.order = g.order();
  r.obstructions = detect_obstructions(g);
  if (g.order() == 1) {
    r.is_trivial = true;
    return r;
  }
  for (const auto& pp : nt::factor(g.order())) r.sylow_shapes.emplace(pp.prime, sylow_shape(g, pp.prime));

  const std::size_t n = g.order();
  const bool cyclic = g.is_cyclic();
  std::optional<FrobeniusDecomposition> frob;
  if (!cyclic) frob = frobenius_cyclic_decomposition(g);
  if (frob) r.frobenius_decomposition = std::pair{frob->kernel_order, frob->complement_order};

  r.hg_real = (cyclic && two_or_odd_prime_power(n)) ||
              (frob && two_or_odd_prime_power(frob->kernel_order) && two_or_odd_prime_power(frob->complement_order));

  const bool whole_quaternion = r.sylow_shapes.size() == 1 &&
                                r.sylow_shapes.begin()->second.kind == SylowKind::GeneralizedQuaternion;
  r.hg_sqrt_minus1 = (cyclic && nt::is_prime_power(n)) ||
                     (frob && nt::is_prime_power(frob->kernel_order) && nt::is_prime_power(frob->complement_order)) ||
                     whole_quaternion;

  const bool prime_kernel = frob && nt::is_prime(frob->kernel_order);
  r.pd1_candidate = (cyclic && nt::is_prime(n)) ||
                    (prime_kernel && frob->complement_order == 2 && frob->kernel_order >= 3) ||
                    (prime_kernel && frob->complement_order == 3 && frob->kernel_order % 3 == 1);
  return r;
}

void to_json(nlohmann::json& j, const ObstructionWitness& w) {
  j = nlohmann::json{{"kind", to_string(w.kind)}, {"witness", w.witness}};
}

void to_json(nlohmann::json& j, const SylowShape& s) {
  j = nlohmann::json{{"kind", to_string(s.kind)}, {"order", s.order}};
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
  j = nlohmann::json::object();
  j["group_label"] = r.group_label;
  j["order"] = r.order;
  j["is_trivial"] = r.is_trivial;
  j["hg_real"] = r.hg_real;
  j["hg_sqrt_minus1"] = r.hg_sqrt_minus1;
  j["pd1_candidate"] = r.pd1_candidate;
  if (r.frobenius_decomposition)
    j["frobenius_decomposition"] = {{"P", r.frobenius_decomposition->first}, {"Q", r.frobenius_decomposition->second}};
  else
    j["frobenius_decomposition"] = nullptr;
  auto shapes = nlohmann::json::object();
  for (const auto& [p, s] : r.sylow_shapes) shapes[std::to_string(p)] = s;
  j["sylow_shapes"] = shapes;
  j["obstructions"] = r.obstructions;
}

}  // namespace hgkit::group
