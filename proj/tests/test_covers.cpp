#include <doctest.h>

#include "hgkit/covers.hpp"
#include "hgkit/random.hpp"

using namespace hgkit;
using namespace hgkit::covers;

namespace {

KummerCover x_minus_t(std::uint64_t d) { return KummerCover(d, 1, Rational(1)); }

}  // namespace

TEST_CASE("branch_data") {
  CHECK(branch_data(KummerCover(3, 1, Rational(1))) ==
        std::vector<BranchDatum>{{BranchPoint::Zero, 3}, {BranchPoint::Infinity, 3}});
  CHECK(branch_data(KummerCover(4, 2, Rational(1))) ==
        std::vector<BranchDatum>{{BranchPoint::Zero, 2}, {BranchPoint::Infinity, 2}});
  CHECK(branch_data(KummerCover(2, 2, Rational(1))).empty());
  CHECK(branch_data(KummerCover(12, 8, Rational(-3, 5)))[0].inertia_order == 3);
  CHECK_THROWS_AS(KummerCover(1, 1, Rational(1)), PreconditionError);
  CHECK_THROWS_AS(KummerCover(3, 0, Rational(1)), PreconditionError);
  CHECK_THROWS_AS(KummerCover(3, 1, Rational(0)), PreconditionError);
}

TEST_CASE("cover spec parsing") {
  const auto c = parse_cover_spec("d=9,m=2,c=-3/4");
  CHECK(c.d == 9);
  CHECK(c.m == 2);
  CHECK(c.c == Rational(-3, 4));
  CHECK_THROWS_AS(parse_cover_spec("d=9,m=2"), PreconditionError);
  CHECK_THROWS_AS(parse_cover_spec("d=9,m=2,c=0"), PreconditionError);
  CHECK_THROWS_AS(parse_cover_spec("d=9,m=-2,c=1"), PreconditionError);
  CHECK_THROWS_AS(parse_cover_spec("d=9,m=2,c=1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_cover_spec("d=9,m=2,c=1,x=3"), PreconditionError);
}

TEST_CASE("intersection_multiplicity") {
  CHECK(intersection_multiplicity(Rational(49, 3), BranchPoint::Zero, 7) == 2);
  CHECK(intersection_multiplicity(Rational(49, 3), BranchPoint::Infinity, 7) == 0);
  CHECK(intersection_multiplicity(Rational(5), BranchPoint::Zero, 7) == 0);
  CHECK(intersection_multiplicity(Rational(3, 125), BranchPoint::Infinity, 5) == 3);
  CHECK(intersection_multiplicity(Rational(3, 125), BranchPoint::Zero, 5) == 0);
  CHECK_THROWS_AS(intersection_multiplicity(Rational(0), BranchPoint::Zero, 5), PreconditionError);
}

TEST_CASE("predict_specialization examples") {
  const auto p9 = predict_specialization(x_minus_t(9), Rational(7), 7);
  CHECK(p9.predicted_e == 9);
  REQUIRE(p9.predicted_f);
  CHECK(*p9.predicted_f == 3);
  CHECK(p9.point == BranchPoint::Zero);

  const auto killed = predict_specialization(x_minus_t(3), Rational(343 * 2), 7);
  CHECK(killed.multiplicity == 3);
  CHECK(killed.predicted_e == 1);
  CHECK_FALSE(killed.predicted_f);

  const auto none = predict_specialization(x_minus_t(3), Rational(5), 7);
  CHECK(none.predicted_e == 1);
  CHECK_FALSE(none.point);
  CHECK(none.multiplicity == 0);

  CHECK(predict_specialization(x_minus_t(3), Rational(1, 7), 7).point == BranchPoint::Infinity);
  CHECK(predict_specialization(x_minus_t(3), Rational(1, 7), 7).predicted_e == 3);
  CHECK(predict_specialization(x_minus_t(3), Rational(7), 3).exceptional);
  CHECK(predict_specialization(KummerCover(3, 1, Rational(5, 11)), Rational(7), 11).exceptional);
  CHECK(predict_specialization(KummerCover(3, 1, Rational(5, 11)), Rational(7), 5).exceptional);
  CHECK(predict_specialization(x_minus_t(3), Rational(7), 2).exceptional);
  CHECK_FALSE(predict_specialization(x_minus_t(3), Rational(7), 7).exceptional);
  CHECK_THROWS_AS(predict_specialization(x_minus_t(3), Rational(0), 7), PreconditionError);
}

TEST_CASE("verify_beckmann examples") {
  const auto a = verify_beckmann(x_minus_t(3), Rational(7), 7);
  CHECK(a.prediction.predicted_e == 3);
  CHECK(a.prediction.predicted_f == 1);
  CHECK(a.oracle.e == 3);
  CHECK(a.oracle.f == 1);
  CHECK(a.agree);

  const auto b = verify_beckmann(x_minus_t(3), Rational(2), 7);
  CHECK(b.prediction.predicted_e == 1);
  CHECK_FALSE(b.prediction.predicted_f);
  CHECK(b.oracle.e == 1);
  CHECK(b.oracle.f == 3);
  CHECK(b.agree);

  const auto c = verify_beckmann(x_minus_t(3), Rational(5), 5);
  CHECK(c.prediction.predicted_e == 3);
  CHECK(c.prediction.predicted_f == 2);
  CHECK(c.oracle.e == 3);
  CHECK(c.oracle.f == 2);
  CHECK(c.agree);

  CHECK_THROWS_AS(verify_beckmann(x_minus_t(3), Rational(5), 3), PreconditionError);
}

TEST_CASE("ramification and residue laws on random covers") {
  SweepRng rng(2024);
  const auto primes = nt::primes_up_to(400);
  int checked_f = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::uint64_t d = rng.uniform(2, 16), m = rng.uniform(1, 12);
    const Rational c(rng.uniform_signed(-30, 30) | 1, static_cast<std::int64_t>(rng.uniform(1, 20)));
    const KummerCover cover(d, m, c);
    const std::uint64_t p = primes[rng.uniform(0, primes.size() - 1)];
    if (is_exceptional(cover, p)) continue;
    const auto j = rng.uniform_signed(-4, 4);
    const auto shift = static_cast<std::int64_t>(nt::checked_pow(p, static_cast<unsigned>(j < 0 ? -j : j)));
    const auto a = static_cast<std::int64_t>(rng.uniform(1, 500)), b = static_cast<std::int64_t>(rng.uniform(1, 500));
    const Rational t0 = j >= 0 ? Rational(a * shift, b) : Rational(a, b * shift);
    const auto r = verify_beckmann(cover, t0, p);
    CAPTURE(d);
    CAPTURE(m);
    CAPTURE(nt::to_string(c));
    CAPTURE(nt::to_string(t0));
    CAPTURE(p);
    const auto ei = d / nt::gcd(d, m);
    const auto k = r.prediction.multiplicity;
    CHECK(r.oracle.e == ei / nt::gcd(ei, k));
    if (k == 0) CHECK(r.oracle.e == 1);
    if (nt::gcd(k, ei) == 1) {
      REQUIRE(r.prediction.predicted_f);
      CHECK(r.oracle.f == *r.prediction.predicted_f);
      ++checked_f;
    }
    CHECK(r.agree);
  }
  CHECK(checked_f > 300);
}

TEST_CASE("scaling t0 by a d-th power times a principal unit") {
  SweepRng rng(5);
  for (std::uint64_t d : {3ULL, 4ULL, 5ULL, 9ULL}) {
    const KummerCover cover(d, 2, Rational(3, 2));
    for (std::uint64_t p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL}) {
      if (is_exceptional(cover, p)) continue;
      for (int t = 0; t < 20; ++t) {
        const auto sp = static_cast<std::int64_t>(p);
        const Rational t0(static_cast<std::int64_t>(rng.uniform(1, 50)) * (t % 3 == 0 ? sp : 1),
                          static_cast<std::int64_t>(rng.uniform(1, 50)) * (t % 3 == 1 ? sp : 1));
        std::int64_t u = static_cast<std::int64_t>(rng.uniform(1, 6));
        if (u % sp == 0) u = 1;
        std::int64_t ud = 1;
        for (std::uint64_t i = 0; i < d; ++i) ud *= u;
        const Rational principal(1 + sp * static_cast<std::int64_t>(rng.uniform(1, 5)), 1);
        const auto a = verify_beckmann(cover, t0, p);
        const auto b = verify_beckmann(cover, t0 * Rational(ud) * principal, p);
        CHECK(a.oracle == b.oracle);
        CHECK(a.prediction.predicted_e == b.prediction.predicted_e);
        CHECK(a.prediction.predicted_f == b.prediction.predicted_f);
      }
    }
  }
}

TEST_CASE("sweeps are reproducible and thread-independent") {
  SweepOptions opt;
  opt.prime_bound = 2000;
  opt.samples = 150;
  opt.seed = 17;
  const auto cover = KummerCover(6, 1, Rational(1));
  const auto a = sweep(cover, opt);
  opt.threads = 4;
  const auto b = sweep(cover, opt);
  CHECK(nlohmann::json(a.reports).dump() == nlohmann::json(b.reports).dump());
  CHECK(a.summary.disagree == 0);
  CHECK(a.summary.samples == 150);
  CHECK(a.summary.ramified > 0);
  CHECK_FALSE(a.stratum_law);
  opt.seed = 18;
  CHECK(nlohmann::json(sweep(cover, opt).reports).dump() != nlohmann::json(a.reports).dump());
}

TEST_CASE("degenerate cover is unramified everywhere") {
  SweepOptions opt;
  opt.samples = 100;
  const auto r = sweep(KummerCover(2, 2, Rational(1)), opt);
  CHECK(r.summary.ramified == 0);
  CHECK(r.summary.disagree == 0);
  for (const auto& rep : r.reports) CHECK(rep.oracle.f == 1);
}

TEST_CASE("stratum tally for d = 9") {
  SweepOptions opt;
  opt.prime_bound = 20000;
  opt.samples = 400;
  const auto r = sweep(x_minus_t(9), opt);
  REQUIRE(r.stratum_law);
  CHECK(r.summary.disagree == 0);
  for (const auto& t : *r.stratum_law)
    if (t.e > 1) CHECK(t.f_equals_d_over_e == t.totally_ramified);
}

TEST_CASE("report json fields") {
  const auto j = nlohmann::json(verify_beckmann(KummerCover(3, 1, Rational(2, 5)), Rational(7, 3), 7));
  for (const char* key : {"cover", "t0", "p", "intersection", "predicted_e", "predicted_f", "oracle_e", "oracle_f",
                          "exceptional", "agree"})
    CHECK(j.contains(key));
  CHECK(j["t0"] == "7/3");
  CHECK(j["cover"]["c"] == "2/5");
  CHECK(j["intersection"]["point"] == "Zero");
}
