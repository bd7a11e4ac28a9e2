#include "hgkit/covers.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "hgkit/random.hpp"

namespace hgkit::covers {

namespace {

std::uint64_t parse_positive(std::string_view s, std::string_view key) {
  const Rational r = nt::parse_rational(s);
  if (r.denominator() != 1 || r.numerator() <= 0)
    throw PreconditionError(std::string(key) + " must be a positive integer, got '" + std::string(s) + "'");
  return static_cast<std::uint64_t>(r.numerator());
}

std::uint64_t branch_inertia(const KummerCover& cover) { return cover.d / nt::gcd(cover.d, cover.m); }

/// Largest j with p^j <= 10^12, at most 6.
int max_shift(std::uint64_t p) {
  int j = 0;
  for (std::uint64_t x = p; j < 6 && x <= 1'000'000'000'000ULL; x *= p) ++j;
  return j;
}

}  // namespace

KummerCover::KummerCover(std::uint64_t d_, std::uint64_t m_, Rational c_) : d(d_), m(m_), c(c_) {
  if (d < 2) throw PreconditionError("cover degree d must be at least 2");
  if (m < 1) throw PreconditionError("exponent m must be positive");
  if (c.numerator() == 0) throw PreconditionError("constant c must be nonzero");
}

KummerCover parse_cover_spec(std::string_view text) {
  std::optional<std::uint64_t> d, m;
  std::optional<Rational> c;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw PreconditionError("expected key=value in cover spec '" + std::string(text) + "'");
    const auto key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "d")
      d = parse_positive(value, key);
    else if (key == "m")
      m = parse_positive(value, key);
    else if (key == "c")
      c = nt::parse_rational(value);
    else
      throw PreconditionError("unknown key '" + std::string(key) + "' in cover spec '" + std::string(text) + "'");
  }
  if (!d || !m || !c) throw PreconditionError("cover spec needs d, m and c: '" + std::string(text) + "'");
  return KummerCover(*d, *m, *c);
}

std::vector<BranchDatum> branch_data(const KummerCover& cover) {
  const std::uint64_t e = branch_inertia(cover);
  if (e == 1) return {};
  return {{BranchPoint::Zero, e}, {BranchPoint::Infinity, e}};
}

std::uint64_t intersection_multiplicity(const Rational& t0, BranchPoint point, std::uint64_t p) {
  if (t0.numerator() == 0) throw PreconditionError("t0 = 0 is a branch point");
  if (!nt::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const int v = nt::valuation(t0, p);
  const int k = point == BranchPoint::Zero ? v : -v;
  return k > 0 ? static_cast<std::uint64_t>(k) : 0;
}

bool is_exceptional(const KummerCover& cover, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return p == 2 || cover.d % p == 0 || cover.c.numerator() % sp == 0 || cover.c.denominator() % sp == 0;
}

Prediction predict_specialization(const KummerCover& cover, const Rational& t0, std::uint64_t p) {
  Prediction out;
  for (auto point : {BranchPoint::Zero, BranchPoint::Infinity}) {
    const auto k = intersection_multiplicity(t0, point, p);
    if (k > 0) {
      out.point = point;
      out.multiplicity = k;
    }
  }
  out.branch_inertia = branch_inertia(cover);
  const std::uint64_t g = nt::gcd(out.branch_inertia, out.multiplicity);
  out.predicted_e = out.branch_inertia / g;
  out.exceptional = is_exceptional(cover, p);
  const auto sp = static_cast<std::int64_t>(p);
  const bool tame_unit = cover.d % p != 0 && cover.c.numerator() % sp != 0 && cover.c.denominator() % sp != 0;
  if (g == 1 && tame_unit) {
    const std::uint64_t w = nt::pow_mod(nt::unit_residue(cover.c, p), out.branch_inertia, p);
    out.predicted_f = oracle::kummer_local_invariants(p, cover.d, 0, static_cast<std::int64_t>(w)).f;
  }
  return out;
}

SpecializationReport verify_beckmann(const KummerCover& cover, const Rational& t0, std::uint64_t p) {
  if (cover.d % p == 0)
    throw PreconditionError("wild prime p = " + std::to_string(p) + " divides d = " + std::to_string(cover.d));
  const Prediction pred = predict_specialization(cover, t0, p);
  const std::int64_t v = nt::valuation(cover.c, p) + static_cast<std::int64_t>(cover.m) * nt::valuation(t0, p);
  const std::uint64_t w =
      nt::mul_mod(nt::unit_residue(cover.c, p), nt::pow_mod(nt::unit_residue(t0, p), cover.m, p), p);
  const auto inv = oracle::kummer_local_invariants(p, cover.d, v, static_cast<std::int64_t>(w));
  const bool agree = pred.predicted_e == inv.e && (!pred.predicted_f || *pred.predicted_f == inv.f);
  return SpecializationReport{cover, t0, p, pred, inv, agree};
}

SweepResult sweep(const KummerCover& cover, const SweepOptions& options) {
  std::vector<std::uint64_t> primes;
  for (auto p : nt::primes_up_to(options.prime_bound))
    if (!is_exceptional(cover, p)) primes.push_back(p);
  if (primes.empty())
    throw PreconditionError("no non-exceptional prime up to " + std::to_string(options.prime_bound));

  SweepRng rng(options.seed);
  std::vector<std::pair<Rational, std::uint64_t>> draws;
  draws.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::uint64_t p = primes[rng.uniform(0, primes.size() - 1)];
    const int jmax = max_shift(p);
    const auto j = rng.uniform_signed(-jmax, jmax);
    const auto a = static_cast<std::int64_t>(rng.uniform(1, 10000));
    const auto b = static_cast<std::int64_t>(rng.uniform(1, 10000));
    const auto shift = static_cast<std::int64_t>(nt::checked_pow(p, static_cast<unsigned>(j < 0 ? -j : j)));
    draws.emplace_back(j >= 0 ? Rational(a * shift, b) : Rational(a, b * shift), p);
  }

  std::vector<std::optional<SpecializationReport>> slots(draws.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(draws.size())));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < draws.size(); i += workers)
        slots[i] = verify_beckmann(cover, draws[i].first, draws[i].second);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepResult out;
  for (auto& slot : slots) {
    const auto& r = *slot;
    ++out.summary.samples;
    if (r.prediction.exceptional)
      ++out.summary.exceptional;
    else if (r.agree)
      ++out.summary.agree;
    else
      ++out.summary.disagree;
    if (r.oracle.e > 1) ++out.summary.ramified;
    if (r.prediction.predicted_f) ++out.summary.with_predicted_f;
    out.reports.push_back(std::move(*slot));
  }

  if (cover.d % 2 == 1 && nt::is_prime_power(cover.d)) {
    std::vector<StratumTally> tallies;
    for (auto e : nt::divisors(cover.d)) tallies.push_back({e});
    for (const auto& r : out.reports) {
      const auto e = nt::gcd(cover.d, r.p - 1);
      auto& t = *std::find_if(tallies.begin(), tallies.end(), [&](const StratumTally& s) { return s.e == e; });
      ++t.samples;
      if (r.oracle.e == cover.d) {
        ++t.totally_ramified;
        if (r.oracle.f == cover.d / e) ++t.f_equals_d_over_e;
      }
    }
    out.stratum_law = std::move(tallies);
  }
  return out;
}

std::string to_string(BranchPoint point) { return point == BranchPoint::Zero ? "Zero" : "Infinity"; }

void to_json(nlohmann::json& j, const KummerCover& cover) {
  j = nlohmann::json{{"d", cover.d}, {"m", cover.m}, {"c", nt::to_string(cover.c)}};
}

void to_json(nlohmann::json& j, const BranchDatum& b) {
  j = nlohmann::json{{"point", to_string(b.point)}, {"inertia_order", b.inertia_order}};
}

void to_json(nlohmann::json& j, const SpecializationReport& r) {
  const auto& pred = r.prediction;
  j = nlohmann::json{{"cover", r.cover}, {"t0", nt::to_string(r.t0)}, {"p", r.p}};
  j["intersection"] = pred.point ? nlohmann::json{{"point", to_string(*pred.point)}, {"multiplicity", pred.multiplicity}}
                                 : nlohmann::json(nullptr);
  j["branch_inertia"] = pred.branch_inertia;
  j["predicted_e"] = pred.predicted_e;
  j["predicted_f"] = pred.predicted_f ? nlohmann::json(*pred.predicted_f) : nlohmann::json(nullptr);
  j["oracle_e"] = r.oracle.e;
  j["oracle_f"] = r.oracle.f;
  j["exceptional"] = pred.exceptional;
  j["agree"] = r.agree;
}

void to_json(nlohmann::json& j, const SweepSummary& s) {
  j = nlohmann::json{{"samples", s.samples},         {"agree", s.agree},       {"disagree", s.disagree},
                     {"exceptional", s.exceptional}, {"ramified", s.ramified}, {"with_predicted_f", s.with_predicted_f}};
}

void to_json(nlohmann::json& j, const StratumTally& s) {
  j = nlohmann::json{{"e", s.e},
                     {"samples", s.samples},
                     {"totally_ramified", s.totally_ramified},
                     {"f_equals_d_over_e", s.f_equals_d_over_e},
                     {"law_applies", s.e > 1}};
}

}  // namespace hgkit::covers
