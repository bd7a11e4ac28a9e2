#include "hgkit/group.hpp"

#include <algorithm>
#include <numeric>

#include "hgkit/ntheory.hpp"

namespace hgkit::group {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ == 0) throw PreconditionError("group order must be positive");
  if (order_ > kMaxOrder)
    throw PreconditionError("group order " + std::to_string(order_) + " exceeds the cap " +
                            std::to_string(kMaxOrder));
  if (table_.size() != order_ * order_)
    throw PreconditionError("Cayley table must have order*order entries");
  validate();

  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }

  orders_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t n = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = mul(x, static_cast<Element>(a));
      ++n;
    }
    orders_[a] = n;
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, "C1"); }

void FiniteGroup::validate() const {
  const std::size_t n = order_;
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      const Element x = table_[a * n + b];
      if (x >= n || seen[x]) throw PreconditionError("Cayley table row " + std::to_string(a) + " is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t a = 0; a < n; ++a) {
      const Element x = table_[a * n + b];
      if (seen[x]) throw PreconditionError("Cayley table column " + std::to_string(b) + " is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[a] != a || table_[a * n] != a) throw PreconditionError("element 0 is not a two-sided identity");

  // Light's test: the set of a with (xa)y = x(ay) for all x, y is closed under
  // products, so it suffices to test a set whose product closure is everything.
  std::vector<Element> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::vector<Element> frontier{0};
  std::size_t count = 1;
  while (count < n) {
    Element fresh = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (!reached[x]) {
        fresh = static_cast<Element>(x);
        break;
      }
    gens.push_back(fresh);
    std::vector<Element> stack(frontier);
    for (std::size_t x = 0; x < n; ++x)
      if (reached[x]) stack.push_back(static_cast<Element>(x));
    while (!stack.empty()) {
      const Element x = stack.back();
      stack.pop_back();
      for (Element g : gens) {
        const Element y = table_[static_cast<std::size_t>(x) * n + g];
        if (!reached[y]) {
          reached[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  for (Element g : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xg = table_[x * n + g];
      const Element* grow = &table_[static_cast<std::size_t>(g) * n];
      const Element* xrow = &table_[x * n];
      const Element* xgrow = &table_[xg * n];
      for (std::size_t y = 0; y < n; ++y)
        if (xgrow[y] != xrow[grow[y]])
          throw PreconditionError("Cayley table is not associative");
    }
}

Element FiniteGroup::pow(Element a, std::int64_t n) const {
  const auto ord = static_cast<std::int64_t>(orders_[a]);
  std::int64_t e = n % ord;
  if (e < 0) e += ord;
  Element result = 0;
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  if (a >= order_)
    throw PreconditionError("element index " + std::to_string(a) + " out of range for order " +
                            std::to_string(order_));
  return orders_[a];
}

std::size_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (std::size_t o : orders_) e = nt::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (!commute(static_cast<Element>(a), static_cast<Element>(b))) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  return std::find(orders_.begin(), orders_.end(), order_) != orders_.end();
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> z;
  for (std::size_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < order_ && central; ++b)
      central = commute(static_cast<Element>(a), static_cast<Element>(b));
    if (central) z.push_back(static_cast<Element>(a));
  }
  return z;
}

std::vector<bool> FiniteGroup::closure_mask(std::span<const Element> gens) const {
  std::vector<bool> in(order_, false);
  in[0] = true;
  std::vector<Element> members{0};
  // Right-multiplying every member by every generator reaches the whole
  // subgroup in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element g : gens) {
      const Element y = mul(members[i], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return in;
}

std::vector<Element> FiniteGroup::closure(std::span<const Element> gens) const {
  const auto mask = closure_mask(gens);
  std::vector<Element> out;
  for (std::size_t a = 0; a < order_; ++a)
    if (mask[a]) out.push_back(static_cast<Element>(a));
  return out;
}

std::vector<Element> FiniteGroup::cyclic_subgroup(Element g) const {
  std::vector<Element> out;
  Element x = 0;
  do {
    out.push_back(x);
    x = mul(x, g);
  } while (x != 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_normal(std::span<const Element> subgroup) const {
  std::vector<bool> in(order_, false);
  for (Element h : subgroup) in[h] = true;
  for (std::size_t g = 0; g < order_; ++g)
    for (Element h : subgroup)
      if (!in[conjugate(h, static_cast<Element>(g))]) return false;
  return true;
}

FiniteGroup FiniteGroup::relabel(std::span<const Element> perm) const {
  if (perm.size() != order_ || perm[0] != 0) throw PreconditionError("relabelling must fix the identity");
  std::vector<Element> table(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      table[static_cast<std::size_t>(perm[a]) * order_ + perm[b]] = perm[mul(static_cast<Element>(a), static_cast<Element>(b))];
  return FiniteGroup(order_, std::move(table), label_);
}

}  // namespace hgkit::group
