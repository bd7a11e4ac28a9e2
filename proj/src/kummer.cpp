#include "hgkit/kummer.hpp"

#include <map>
#include <mutex>

namespace hgkit::oracle {

namespace {

struct CachedField {
  FiniteField field;
  std::optional<FieldElement> primitive;
  std::map<std::uint64_t, FieldElement> roots_of_unity;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, unsigned>, CachedField>& cache() {
  static std::map<std::pair<std::uint64_t, unsigned>, CachedField> c;
  return c;
}

const FieldElement& cached_primitive(std::uint64_t p, unsigned k) {
  const FiniteField& f = cached_field(p, k);
  std::lock_guard lock(cache_mutex());
  auto& entry = cache().at({p, k});
  if (!entry.primitive) entry.primitive = f.primitive_element();
  return *entry.primitive;
}

/// A generator of mu_d in F_{p^k}, found as the first z^((q-1)/d) of exact
/// order d; only the prime divisors of d are needed.
FieldElement cached_root_of_unity(std::uint64_t p, unsigned k, std::uint64_t d) {
  const FiniteField& f = cached_field(p, k);
  {
    std::lock_guard lock(cache_mutex());
    auto& roots = cache().at({p, k}).roots_of_unity;
    if (auto it = roots.find(d); it != roots.end()) return it->second;
  }
  const std::uint64_t q = f.cardinality();
  if ((q - 1) % d != 0) throw PreconditionError("mu_d is not contained in the field");
  const auto rs = nt::prime_divisors(d == 1 ? 2 : d);
  // Elements of a proper subfield rarely work when k > 1, so start at x.
  const std::uint64_t start = k > 1 ? p : 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    const std::uint64_t idx = start + i < q ? start + i : start + i - q + 1;
    const FieldElement z = f.from_index(idx).pow((q - 1) / d);
    bool exact = true;
    if (d > 1)
      for (auto r : rs)
        if (z.pow(d / r).is_one()) {
          exact = false;
          break;
        }
    if (!exact) continue;
    std::lock_guard lock(cache_mutex());
    cache().at({p, k}).roots_of_unity.emplace(d, z);
    return z;
  }
  throw std::logic_error("no root of unity of the requested order");
}

bool fits(std::uint64_t p, std::uint64_t k) {
  if (k > kMaxFieldDegree) return false;
  try {
    nt::checked_pow(p, static_cast<unsigned>(k));
    return true;
  } catch (const OverflowError&) {
    return false;
  }
}

void check_tame(std::uint64_t p, std::uint64_t d) {
  if (!nt::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (d == 0) throw PreconditionError("degree d must be positive");
  if (d % p == 0)
    throw PreconditionError("wild case: p = " + std::to_string(p) + " divides d = " + std::to_string(d));
}

/// Order of y in F_q^x / d-th powers, y in F_q with d | q - 1.
std::uint64_t class_order_in_field(const FieldElement& y, std::uint64_t d) {
  const std::uint64_t q = y.field().cardinality();
  // the d-th power residue symbol of y lives in mu_d = <zeta>
  const FieldElement zeta = cached_root_of_unity(y.field().characteristic(), y.field().degree(), d);
  const std::uint64_t l = discrete_log(zeta, y.pow((q - 1) / d));
  return d / nt::gcd(d, l);
}

KummerLocalInvariants assemble(std::uint64_t d, std::int64_t v, std::uint64_t f0, std::uint64_t unit_order) {
  KummerLocalInvariants out;
  const std::uint64_t abs_v = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
  out.e = d / nt::gcd(d, abs_v);
  out.f0 = f0;
  out.unit_class_order = unit_order;
  const std::uint64_t n = nt::lcm(out.e, unit_order);
  out.f = f0 * (n / out.e);
  out.total_degree = out.e * out.f;
  return out;
}

}  // namespace

const FiniteField& cached_field(std::uint64_t p, unsigned k) {
  std::lock_guard lock(cache_mutex());
  auto& c = cache();
  auto it = c.find({p, k});
  if (it == c.end()) it = c.emplace(std::pair{p, k}, CachedField{build_field(p, k), std::nullopt, {}}).first;
  return it->second.field;
}

std::optional<std::uint64_t> unit_class_order_extension(std::uint64_t p, std::uint64_t d, std::int64_t w) {
  check_tame(p, d);
  const std::uint64_t f0 = nt::multiplicative_order(p % d, d);
  if (!fits(p, f0)) return std::nullopt;
  const FiniteField& field = cached_field(p, static_cast<unsigned>(f0));
  const FieldElement y = field.from_int(w);
  if (y.is_zero()) throw PreconditionError("w must be a unit at p");
  return class_order_in_field(y, d);
}

std::uint64_t unit_class_order_prime_field(std::uint64_t p, std::uint64_t d, std::int64_t w) {
  check_tame(p, d);
  const std::uint64_t wr = nt::reduce(w, p);
  if (wr == 0) throw PreconditionError("w must be a unit at p");
  const std::uint64_t f0 = nt::multiplicative_order(p % d, d);
  const FiniteField& fp = cached_field(p, 1);
  const FieldElement& g = cached_primitive(p, 1);
  const std::uint64_t l = discrete_log(g, fp.from_int(static_cast<std::int64_t>(wr)));
  // w^((q-1)/d) = g^(l (q-1)/d) with q = p^f0; only (q-1)/d mod (p-1) matters.
  const std::uint64_t modulus = d * (p - 1);
  const std::uint64_t r = (nt::pow_mod(p, f0, modulus) + modulus - 1) % modulus;  // q - 1 mod d(p-1)
  const std::uint64_t exponent = nt::mul_mod(l, r / d, p - 1);
  const std::uint64_t order_in_fp = (p - 1) / nt::gcd(p - 1, exponent);
  return order_in_fp;
}

KummerLocalInvariants kummer_local_invariants(std::uint64_t p, std::uint64_t d, std::int64_t v, std::int64_t w) {
  check_tame(p, d);
  if (nt::reduce(w, p) == 0) throw PreconditionError("w must be a unit at p");
  const std::uint64_t f0 = nt::multiplicative_order(p % d, d);
  const auto ext = unit_class_order_extension(p, d, w);
  const std::uint64_t unit_order = ext ? *ext : unit_class_order_prime_field(p, d, w);
  return assemble(d, v, f0, unit_order);
}

KummerLocalInvariants kummer_local_invariants(std::uint64_t p, std::uint64_t d, std::int64_t v, const FieldElement& w) {
  check_tame(p, d);
  const std::uint64_t f0 = nt::multiplicative_order(p % d, d);
  if (w.field().characteristic() != p || w.field().degree() != f0)
    throw PreconditionError("w must lie in F_{p^f0} with f0 = ord_d(p) = " + std::to_string(f0));
  if (w.is_zero()) throw PreconditionError("w must be a unit at p");
  return assemble(d, v, f0, class_order_in_field(w, d));
}

void to_json(nlohmann::json& j, const KummerLocalInvariants& inv) {
  j = nlohmann::json{{"e", inv.e},   {"f", inv.f}, {"total_degree", inv.total_degree},
                     {"f0", inv.f0}, {"unit_class_order", inv.unit_class_order}};
}

}  // namespace hgkit::oracle
