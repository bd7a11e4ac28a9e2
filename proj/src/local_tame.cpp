#include "hgkit/local_tame.hpp"

#include <charconv>

#include "hgkit/group_spec.hpp"
#include "hgkit/morphism.hpp"

namespace hgkit::tame {

namespace {

void require_prime(std::uint64_t q) {
  if (!nt::is_prime(q)) throw PreconditionError(std::to_string(q) + " is not prime");
}

/// |<sigma, tau>| when sigma normalises <tau>: |<tau>| |<sigma>| / |<sigma> n <tau>|.
std::size_t metacyclic_order(const FiniteGroup& g, Element sigma, const std::vector<bool>& tau_mask,
                             std::size_t tau_order) {
  std::size_t sigma_order = 0, common = 0;
  Element x = 0;
  do {
    ++sigma_order;
    if (tau_mask[x]) ++common;
    x = g.mul(x, sigma);
  } while (x != 0);
  return tau_order * sigma_order / common;
}

std::vector<bool> cyclic_mask(const FiniteGroup& g, Element tau) {
  std::vector<bool> mask(g.order(), false);
  Element x = 0;
  do {
    mask[x] = true;
    x = g.mul(x, tau);
  } while (x != 0);
  return mask;
}

std::uint64_t parse_uint(std::string_view s, std::string_view key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw PreconditionError("bad value for " + std::string(key) + ": '" + std::string(s) + "'");
  return v;
}

void validate(LocalExtensionSpec& spec) {
  require_prime(spec.p);
  if (spec.e == 0 || spec.f == 0) throw PreconditionError("e and f must be positive");
  if (spec.e % spec.p == 0)
    throw PreconditionError("wild problem: p = " + std::to_string(spec.p) + " divides e = " + std::to_string(spec.e));
}

}  // namespace

TameLocalField::TameLocalField(std::uint64_t q_) : q(q_) { require_prime(q); }

bool verify_tame_pair(const FiniteGroup& g, const TamePair& pair) {
  if (pair.sigma >= g.order() || pair.tau >= g.order()) return false;
  if (nt::gcd(g.element_order(pair.tau), pair.q) != 1) return false;
  return g.conjugate(pair.tau, pair.sigma) == g.pow(pair.tau, static_cast<std::int64_t>(pair.q % g.order()));
}

bool cyclic_tame_exists(std::uint64_t q, std::uint64_t d, std::uint64_t e) {
  require_prime(q);
  if (d == 0 || e == 0) throw PreconditionError("d and e must be positive");
  if (d % e != 0) throw PreconditionError("e = " + std::to_string(e) + " does not divide d = " + std::to_string(d));
  if (nt::gcd(d, q) != 1) throw PreconditionError("wild case: q = " + std::to_string(q) + " divides d");
  return (q - 1) % e == 0;
}

std::vector<TamePair> enumerate_tame_pairs(const FiniteGroup& g, std::uint64_t q) {
  require_prime(q);
  std::vector<TamePair> out;
  const std::size_t n = g.order();
  for (std::size_t t = 0; t < n; ++t) {
    const auto tau = static_cast<Element>(t);
    const std::size_t tau_order = g.element_order(tau);
    if (nt::gcd(tau_order, q) != 1) continue;
    const Element target = g.pow(tau, static_cast<std::int64_t>(q % tau_order));
    const auto mask = cyclic_mask(g, tau);
    for (std::size_t s = 0; s < n; ++s) {
      const auto sigma = static_cast<Element>(s);
      if (g.conjugate(tau, sigma) != target) continue;
      if (metacyclic_order(g, sigma, mask, tau_order) == n) out.push_back({sigma, tau, q});
    }
  }
  return out;
}

LocalExtensionSpec parse_local_spec(std::string_view text) {
  LocalExtensionSpec spec;
  bool seen_p = false, seen_e = false, seen_f = false;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) throw PreconditionError("expected key=value in '" + std::string(text) + "'");
    const auto key = rest.substr(0, eq);
    rest.remove_prefix(eq + 1);
    if (key == "D") {
      spec.group_spec = std::string(rest);
      spec.group = group::parse_group_spec(rest);
      break;
    }
    const auto comma = rest.find(',');
    const auto value = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (key == "p") {
      spec.p = parse_uint(value, key);
      seen_p = true;
    } else if (key == "e") {
      spec.e = parse_uint(value, key);
      seen_e = true;
    } else if (key == "f") {
      spec.f = parse_uint(value, key);
      seen_f = true;
    } else {
      throw PreconditionError("unknown key '" + std::string(key) + "' in '" + std::string(text) + "'");
    }
  }
  if (!seen_p || !seen_e || !seen_f) throw PreconditionError("local spec needs p, e and f: '" + std::string(text) + "'");
  validate(spec);
  return spec;
}

std::vector<LocalExtensionSpec> parse_local_specs(const nlohmann::json& batch) {
  if (!batch.is_array()) throw PreconditionError("local spec batch must be a JSON array");
  std::vector<LocalExtensionSpec> out;
  for (const auto& item : batch) {
    if (item.is_string()) {
      out.push_back(parse_local_spec(item.get<std::string>()));
      continue;
    }
    if (!item.is_object() || !item.contains("p") || !item.contains("e") || !item.contains("f"))
      throw PreconditionError("local spec entry needs p, e, f: " + item.dump());
    LocalExtensionSpec spec;
    spec.p = item.at("p").get<std::uint64_t>();
    spec.e = item.at("e").get<std::uint64_t>();
    spec.f = item.at("f").get<std::uint64_t>();
    if (item.contains("D")) {
      spec.group_spec = item.at("D").get<std::string>();
      spec.group = group::parse_group_spec(spec.group_spec);
    }
    validate(spec);
    out.push_back(std::move(spec));
  }
  return out;
}

LocalFeasibility local_feasible(const FiniteGroup& g, const LocalExtensionSpec& spec) {
  LocalExtensionSpec checked = spec;
  validate(checked);
  LocalFeasibility out{spec, false, std::nullopt};
  const std::uint64_t p = spec.p, e = spec.e, target_order = spec.e * spec.f;
  if (g.order() % target_order != 0) return out;

  // With a prescribed D, fix one generating tame pair of D and look for its
  // image under an embedding D -> g.
  std::optional<TamePair> model;
  if (spec.group) {
    const FiniteGroup& h = *spec.group;
    if (h.order() != target_order) return out;
    for (const auto& pair : enumerate_tame_pairs(h, p))
      if (h.element_order(pair.tau) == e) {
        model = pair;
        break;
      }
    if (!model) return out;
  }

  const std::size_t n = g.order();
  for (std::size_t t = 0; t < n; ++t) {
    const auto tau = static_cast<Element>(t);
    if (g.element_order(tau) != e) continue;
    const Element target = g.pow(tau, static_cast<std::int64_t>(p % e));
    const auto mask = cyclic_mask(g, tau);
    for (std::size_t s = 0; s < n; ++s) {
      const auto sigma = static_cast<Element>(s);
      if (g.conjugate(tau, sigma) != target) continue;
      if (model) {
        const FiniteGroup& h = *spec.group;
        if (g.element_order(sigma) != h.element_order(model->sigma)) continue;
        const Element gens[] = {model->sigma, model->tau};
        const Element images[] = {sigma, tau};
        const auto phi = group::extend_homomorphism(h, gens, g, images);
        if (!phi || !group::is_injective(*phi, n)) continue;
      } else if (metacyclic_order(g, sigma, mask, e) != target_order) {
        continue;
      }
      out.feasible = true;
      out.witness = TamePair{sigma, tau, p};
      return out;
    }
  }
  return out;
}

GrunwaldReport grunwald_feasible(const FiniteGroup& g, const std::vector<LocalExtensionSpec>& problems) {
  GrunwaldReport report;
  for (const auto& spec : problems) {
    report.problems.push_back(local_feasible(g, spec));
    report.feasible = report.feasible && report.problems.back().feasible;
  }
  return report;
}

C4Embedding c4_embeddable_quadratic(const Rational& a) {
  if (a.numerator() == 0) throw PreconditionError("a must be nonzero");
  const std::int64_t num = a.numerator(), den = a.denominator();
  if (num > 0 && nt::is_square(num) && nt::is_square(den)) return {true, true};
  if (num < 0) return {false, false};
  for (std::int64_t part : {num, den})
    for (const auto& [l, k] : nt::factor(static_cast<std::uint64_t>(part)))
      if (l % 4 == 3 && k % 2 == 1) return {false, false};
  return {true, false};
}

void to_json(nlohmann::json& j, const TamePair& pair) {
  j = nlohmann::json{{"sigma", pair.sigma}, {"tau", pair.tau}, {"q", pair.q}};
}

void to_json(nlohmann::json& j, const LocalExtensionSpec& spec) {
  j = nlohmann::json{{"p", spec.p}, {"e", spec.e}, {"f", spec.f}};
  j["D"] = spec.group ? nlohmann::json(spec.group_spec) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const LocalFeasibility& r) {
  j = nlohmann::json{{"spec", r.spec}, {"feasible", r.feasible}};
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const GrunwaldReport& r) {
  j = nlohmann::json{{"problems", r.problems}, {"feasible", r.feasible}};
}

void to_json(nlohmann::json& j, const C4Embedding& r) {
  j = nlohmann::json{{"embeddable", r.embeddable}, {"degenerate", r.degenerate}};
}

}  // namespace hgkit::tame
