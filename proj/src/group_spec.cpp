#include "hgkit/group_spec.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <vector>

#include "hgkit/constructors.hpp"
#include "hgkit/ntheory.hpp"

namespace hgkit::group {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw PreconditionError("bad integer '" + std::string(s) + "' in group spec '" + std::string(context) + "'");
  return v;
}

std::size_t parse_size(std::string_view s, std::string_view context) {
  const auto v = parse_int(s, context);
  if (v <= 0) throw PreconditionError("expected a positive integer in group spec '" + std::string(context) + "'");
  return static_cast<std::size_t>(v);
}

FiniteGroup parse_atom(std::string_view spec) {
  if (spec.empty()) throw PreconditionError("empty group spec");
  if (spec.starts_with("SD:")) {
    std::vector<std::string_view> parts;
    std::string_view rest = spec.substr(3);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      parts.push_back(rest.substr(0, pos));
    parts.push_back(rest);
    if (parts.size() != 3) throw PreconditionError("SD spec needs P,Q,k: '" + std::string(spec) + "'");
    auto g = semidirect_cyclic(parse_size(parts[0], spec), parse_size(parts[1], spec), parse_int(parts[2], spec));
    g.set_label(std::string(spec));
    return g;
  }
  const char head = spec.front();
  const std::string_view tail = spec.substr(1);
  switch (head) {
    case 'C': return cyclic(parse_size(tail, spec));
    case 'D': return dihedral(parse_size(tail, spec));
    case 'Q': {
      const auto n = parse_size(tail, spec);
      if (n != 8 && n != 16 && n != 32) throw PreconditionError("quaternion spec must be Q8, Q16 or Q32");
      return quaternion(n);
    }
    case 'S': {
      const auto n = parse_size(tail, spec);
      if (n != 3 && n != 4) throw PreconditionError("symmetric spec must be S3 or S4");
      return symmetric(static_cast<unsigned>(n));
    }
    case 'A': {
      const auto n = parse_size(tail, spec);
      if (n != 4 && n != 5) throw PreconditionError("alternating spec must be A4 or A5");
      return alternating(static_cast<unsigned>(n));
    }
    default: break;
  }
  throw PreconditionError("unrecognised group spec '" + std::string(spec) + "'");
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  if (spec.starts_with("X:")) {
    std::string_view rest = spec.substr(2);
    std::vector<std::string_view> factors;
    for (std::size_t pos; (pos = rest.find('*')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      factors.push_back(rest.substr(0, pos));
    factors.push_back(rest);
    if (factors.size() < 2) throw PreconditionError("direct product needs at least two factors: '" + std::string(spec) + "'");
    FiniteGroup g = parse_atom(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_atom(factors[i]));
    g.set_label(std::string(spec));
    return g;
  }
  if (spec.ends_with(".json")) {
    const std::filesystem::path path{std::string(spec)};
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open group table file '" + path.string() + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError("malformed JSON in '" + path.string() + "': " + e.what());
    }
    return group_from_json(j, path.filename().string());
  }
  return parse_atom(spec);
}

FiniteGroup group_from_json(const nlohmann::json& j, std::string label) {
  try {
    const auto n = j.at("order").get<std::size_t>();
    if (n == 0 || n > kMaxOrder) throw PreconditionError("table order outside [1, 2048]");
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) throw PreconditionError("table must have `order` rows");
    std::vector<Element> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw PreconditionError("table rows must have `order` entries");
      for (const auto& x : row) {
        const auto v = x.get<std::int64_t>();
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw PreconditionError("table entry out of range");
        table.push_back(static_cast<Element>(v));
      }
    }
    if (j.contains("label")) label = j.at("label").get<std::string>();
    return FiniteGroup(n, std::move(table), std::move(label));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("bad group table JSON: ") + e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto rows = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Element> row(g.table().begin() + static_cast<std::ptrdiff_t>(a * n),
                             g.table().begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
    rows.push_back(row);
  }
  return {{"order", n}, {"label", g.label()}, {"table", rows}};
}

}  // namespace hgkit::group
