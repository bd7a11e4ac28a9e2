#include "hgkit/finite_field.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

namespace hgkit::oracle {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return p < (std::uint64_t{1} << 31) ? a * b % p : nt::mul_mod(a, b, p);
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = nt::inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = mulp(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulp(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulp(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (exp) {
    if (exp & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

/// Ben-Or's test: a monic f of degree k is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every i <= k/2.
bool is_irreducible(const Poly& m, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  const Poly x{0, 1};
  Poly h = x;
  for (unsigned i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, m, p);
    if (poly_gcd(m, poly_sub(h, x, p), p).size() != 1) return false;
  }
  return true;
}

}  // namespace

struct FiniteField::Data {
  std::uint64_t p;
  unsigned k;
  std::uint64_t q;
  Poly modulus;  // monic, size k + 1
  mutable std::once_flag factors_once;
  mutable std::vector<nt::PrimePower> group_factors;
};

FiniteField FiniteField::build(std::uint64_t p, unsigned k) {
  if (!nt::is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0 || k > kMaxFieldDegree)
    throw PreconditionError("field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
  auto data = std::make_shared<Data>();
  data->p = p;
  data->k = k;
  data->q = nt::checked_pow(p, k);
  data->modulus.assign(k + 1, 0);
  data->modulus[k] = 1;
  for (std::uint64_t idx = 0;; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      data->modulus[i] = rest % p;
      rest /= p;
    }
    if (is_irreducible(data->modulus, p)) break;
  }
  return FiniteField(std::move(data));
}

FiniteField build_field(std::uint64_t p, unsigned k) { return FiniteField::build(p, k); }

std::uint64_t FiniteField::characteristic() const { return data_->p; }
unsigned FiniteField::degree() const { return data_->k; }
std::uint64_t FiniteField::cardinality() const { return data_->q; }
const std::vector<std::uint64_t>& FiniteField::modulus() const { return data_->modulus; }
const std::vector<nt::PrimePower>& FiniteField::group_order_factors() const {
  std::call_once(data_->factors_once, [d = data_.get()] { d->group_factors = nt::factor(d->q - 1); });
  return data_->group_factors;
}

bool FiniteField::operator==(const FiniteField& other) const {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->modulus == other.data_->modulus);
}

FieldElement FiniteField::zero() const { return FieldElement(*this); }

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(std::int64_t n) const {
  FieldElement e(*this);
  e.coeffs_[0] = nt::reduce(n, data_->p);
  return e;
}

FieldElement FiniteField::from_index(std::uint64_t index) const {
  if (index >= data_->q) throw PreconditionError("field element index out of range");
  FieldElement e(*this);
  for (unsigned i = 0; i < data_->k; ++i) {
    e.coeffs_[i] = index % data_->p;
    index /= data_->p;
  }
  return e;
}

FieldElement FiniteField::from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
  Poly a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c %= data_->p;
  a = poly_mod(std::move(a), data_->modulus, data_->p);
  FieldElement e(*this);
  for (std::size_t i = 0; i < a.size(); ++i) e.coeffs_[i] = a[i];
  return e;
}

FieldElement FiniteField::generator() const { return from_coeffs({0, 1}); }

FieldElement FiniteField::primitive_element() const {
  for (std::uint64_t idx = 1; idx < data_->q; ++idx) {
    const FieldElement x = from_index(idx);
    if (multiplicative_order(x) == data_->q - 1) return x;
  }
  throw std::logic_error("no primitive element found");
}

std::uint64_t FieldElement::index() const {
  const auto& d = *field_.data_;
  std::uint64_t idx = 0;
  for (unsigned i = d.k; i-- > 0;) idx = idx * d.p + coeffs_[i];
  return idx;
}

bool FieldElement::is_zero() const {
  for (auto c : coeffs_)
    if (c) return false;
  return true;
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const std::uint64_t p = field_.data_->p;
  FieldElement r(field_);
  for (unsigned i = 0; i < field_.data_->k; ++i) r.coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const std::uint64_t p = field_.data_->p;
  FieldElement r(field_);
  for (unsigned i = 0; i < field_.data_->k; ++i) r.coeffs_[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const auto& d = *field_.data_;
  const std::uint64_t p = d.p;
  const unsigned k = d.k;
  std::array<std::uint64_t, 2 * kMaxFieldDegree> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + mulp(coeffs_[i], o.coeffs_[j], p)) % p;
  }
  // reduce by the monic modulus from the top
  for (unsigned top = 2 * k - 1; top-- > k;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (unsigned i = 0; i < k; ++i) prod[top - k + i] = (prod[top - k + i] + p - mulp(c, d.modulus[i], p)) % p;
  }
  FieldElement r(field_);
  for (unsigned i = 0; i < k; ++i) r.coeffs_[i] = prod[i];
  return r;
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exp) {
    if (exp & 1) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw PreconditionError("zero has no inverse");
  return pow(field_.cardinality() - 2);
}

FieldElement FieldElement::frobenius() const { return pow(field_.characteristic()); }

std::uint64_t multiplicative_order(const FieldElement& x) {
  if (x.is_zero()) throw PreconditionError("multiplicative order of zero");
  std::uint64_t ord = x.field().cardinality() - 1;
  for (const auto& [r, e] : x.field().group_order_factors())
    for (unsigned i = 0; i < e && x.pow(ord / r).is_one(); ++i) ord /= r;
  return ord;
}

std::uint64_t discrete_log(const FieldElement& base, const FieldElement& x) {
  if (!(base.field() == x.field())) throw PreconditionError("discrete_log: elements of different fields");
  if (base.is_zero() || x.is_zero()) throw PreconditionError("discrete_log: zero argument");
  const std::uint64_t m = multiplicative_order(base);
  if (m >= kMaxDlogGroupOrder)
    throw OverflowError("discrete_log: subgroup order " + std::to_string(m) + " is at least 2^40");
  auto s = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(m))));
  while (s * s < m) ++s;

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(s);
  FieldElement cur = base.field().one();
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(cur.index(), j);
    cur = cur * base;
  }
  const FieldElement giant = base.pow(m - (s % m == 0 ? 0 : s % m));  // base^-s
  FieldElement y = x;
  for (std::uint64_t i = 0; i <= s; ++i) {
    if (auto it = baby.find(y.index()); it != baby.end()) {
      const std::uint64_t n = i * s + it->second;
      if (n < m) return n;
    }
    y = y * giant;
  }
  throw NotInSubgroupError("discrete_log: element is not a power of the base");
}

}  // namespace hgkit::oracle
