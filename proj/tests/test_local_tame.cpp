#include <doctest.h>

#include <random>

#include "hgkit/constructors.hpp"
#include "hgkit/group_spec.hpp"
#include "hgkit/local_tame.hpp"
#include "support/brute.hpp"

using namespace hgkit;
using namespace hgkit::tame;
using group::Element;

namespace {

/// i, j in the quaternion numbering a^i b^j -> i + 2j (order 8: a = i, b = j).
constexpr Element kQ8_i = 1;
constexpr Element kQ8_j = 4;

}  // namespace

TEST_CASE("cyclic_tame_exists examples") {
  CHECK(cyclic_tame_exists(7, 6, 6));
  CHECK_FALSE(cyclic_tame_exists(7, 4, 4));
  CHECK(cyclic_tame_exists(11, 10, 1));
  CHECK(cyclic_tame_exists(13, 9, 1));
  CHECK_THROWS_AS(cyclic_tame_exists(7, 6, 4), PreconditionError);
  CHECK_THROWS_AS(cyclic_tame_exists(3, 6, 2), PreconditionError);
  CHECK_THROWS_AS(cyclic_tame_exists(9, 4, 2), PreconditionError);
  CHECK_THROWS_AS(TameLocalField(15), PreconditionError);
}

TEST_CASE("cyclic_tame_exists matches the epimorphism search") {
  for (std::uint64_t q : nt::primes_up_to(99))
    for (std::uint64_t d = 1; d <= 36; ++d) {
      if (d % q == 0) continue;
      for (std::uint64_t e : nt::divisors(d)) {
        CAPTURE(q);
        CAPTURE(d);
        CAPTURE(e);
        CHECK(cyclic_tame_exists(q, d, e) == testing::tame_cyclic_bruteforce(q, d, e));
      }
    }
}

TEST_CASE("quaternion tame pairs") {
  const auto q8 = group::quaternion(8);
  REQUIRE(q8.element_order(kQ8_i) == 4);
  REQUIRE(q8.element_order(kQ8_j) == 4);
  const auto pairs3 = enumerate_tame_pairs(q8, 3);
  CHECK_FALSE(pairs3.empty());
  CHECK(std::find(pairs3.begin(), pairs3.end(), TamePair{kQ8_j, kQ8_i, 3}) != pairs3.end());
  for (const auto& pair : pairs3) CHECK(verify_tame_pair(q8, pair));
  CHECK(enumerate_tame_pairs(q8, 5).empty());
  CHECK(enumerate_tame_pairs(q8, 2).empty());
}

TEST_CASE("cyclic groups with q = 1 mod n give all generating pairs") {
  const auto c6 = group::cyclic(6);
  const auto pairs = enumerate_tame_pairs(c6, 7);
  std::size_t generating = 0;
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      if (c6.closure(std::vector<Element>{Element(s), Element(t)}).size() == 6) ++generating;
  CHECK(pairs.size() == generating);
}

TEST_CASE("tame pairs generate and verify") {
  for (const char* spec : {"S3", "D4", "SD:7,3,2", "Q16", "A4", "SD:5,4,2", "X:C3*S3"}) {
    const auto g = group::parse_group_spec(spec);
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
      for (const auto& pair : enumerate_tame_pairs(g, q)) {
        CAPTURE(spec);
        CHECK(verify_tame_pair(g, pair));
        CHECK(g.closure(std::vector<Element>{pair.sigma, pair.tau}).size() == g.order());
      }
    }
  }
  // A4 is not metacyclic, so never a tame local Galois group
  CHECK(enumerate_tame_pairs(group::alternating(4), 5).empty());
}

TEST_CASE("tame pairs depend on q only modulo the exponent") {
  for (const char* spec : {"S3", "Q8", "SD:7,3,2", "D5", "SD:5,4,2"}) {
    const auto g = group::parse_group_spec(spec);
    const auto ex = g.exponent();
    const auto primes = nt::primes_up_to(400);
    for (std::uint64_t q : primes) {
      if (q > 60) break;
      for (std::uint64_t q2 : primes)
        if (q2 > q && q2 % ex == q % ex) {
          CAPTURE(spec);
          CAPTURE(q);
          CAPTURE(q2);
          auto a = enumerate_tame_pairs(g, q), b = enumerate_tame_pairs(g, q2);
          for (auto& pair : b) pair.q = q;
          CHECK(a == b);
          break;
        }
    }
  }
}

TEST_CASE("abelian inertia orders divide q - 1") {
  for (const char* spec : {"C4", "C6", "C8", "X:C2*C4", "C12", "C9"}) {
    const auto g = group::parse_group_spec(spec);
    for (std::uint64_t q : nt::primes_up_to(60))
      for (const auto& pair : enumerate_tame_pairs(g, q)) {
        const auto e = g.element_order(pair.tau);
        CAPTURE(spec);
        CAPTURE(q);
        CHECK((q - 1) % e == 0);
        CHECK(cyclic_tame_exists(q, e, e));
      }
  }
}

TEST_CASE("grunwald examples") {
  const auto s3 = group::symmetric(3);
  CHECK(local_feasible(s3, parse_local_spec("p=7,e=3,f=1")).feasible);
  const auto r = local_feasible(s3, parse_local_spec("p=5,e=3,f=2"));
  CHECK(r.feasible);
  REQUIRE(r.witness);
  CHECK(s3.element_order(r.witness->tau) == 3);
  CHECK(s3.element_order(r.witness->sigma) == 2);

  const auto c4 = group::cyclic(4);
  for (std::uint64_t p : nt::primes_up_to(200)) {
    if (p == 2) continue;
    CAPTURE(p);
    CHECK(local_feasible(c4, parse_local_spec("p=" + std::to_string(p) + ",e=4,f=1")).feasible == (p % 4 == 1));
  }

  const auto report = grunwald_feasible(s3, {parse_local_spec("p=7,e=3,f=1"), parse_local_spec("p=11,e=1,f=2")});
  CHECK(report.feasible);
  CHECK(report.problems.size() == 2);
  const auto mixed = grunwald_feasible(c4, {parse_local_spec("p=5,e=4,f=1"), parse_local_spec("p=7,e=4,f=1")});
  CHECK_FALSE(mixed.feasible);
  CHECK(mixed.problems[0].feasible);
  CHECK_FALSE(mixed.problems[1].feasible);
  // unramified C3 is fine, unramified S3 would need a cyclic S3
  CHECK(local_feasible(s3, parse_local_spec("p=7,e=1,f=3")).feasible);
  CHECK_FALSE(local_feasible(s3, parse_local_spec("p=7,e=1,f=6")).feasible);
}

TEST_CASE("grunwald with a prescribed decomposition group") {
  const auto s4 = group::symmetric(4);
  CHECK(local_feasible(s4, parse_local_spec("p=5,e=3,f=2,D=S3")).feasible);
  CHECK_FALSE(local_feasible(s4, parse_local_spec("p=5,e=3,f=2,D=C6")).feasible);
  CHECK(local_feasible(s4, parse_local_spec("p=7,e=4,f=1,D=C4")).feasible == false);
  CHECK(local_feasible(s4, parse_local_spec("p=5,e=4,f=1,D=C4")).feasible);
  // D4 = <sigma, tau> with tau of order 4 inverted: needs p = 3 mod 4
  CHECK(local_feasible(s4, parse_local_spec("p=3,e=4,f=2,D=D4")).feasible);
  CHECK_FALSE(local_feasible(s4, parse_local_spec("p=5,e=4,f=2,D=D4")).feasible);
  // Q8 is not in S4
  CHECK_FALSE(local_feasible(s4, parse_local_spec("p=3,e=4,f=2,D=Q8")).feasible);
  CHECK(local_feasible(group::quaternion(16), parse_local_spec("p=3,e=4,f=2,D=Q8")).feasible);
}

TEST_CASE("feasibility witnesses generate a subgroup of order e f") {
  const auto g = group::parse_group_spec("X:S3*C4");
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL})
    for (std::uint64_t e : {1ULL, 2ULL, 3ULL, 4ULL, 6ULL})
      for (std::uint64_t f : {1ULL, 2ULL, 4ULL}) {
        LocalExtensionSpec spec;
        spec.p = p;
        spec.e = e;
        spec.f = f;
        const auto r = local_feasible(g, spec);
        if (!r.feasible) continue;
        const auto d = g.closure(std::vector<Element>{r.witness->sigma, r.witness->tau});
        CHECK(d.size() == e * f);
        CAPTURE(p);
        CAPTURE(e);
        CAPTURE(f);
        CHECK(verify_tame_pair(g, *r.witness));
      }
}

TEST_CASE("local spec parsing") {
  const auto s = parse_local_spec("p=7,e=3,f=2,D=SD:7,3,2");
  CHECK(s.p == 7);
  CHECK(s.e == 3);
  CHECK(s.f == 2);
  REQUIRE(s.group);
  CHECK(s.group->order() == 21);
  CHECK_THROWS_AS(parse_local_spec("p=7,e=7,f=1"), PreconditionError);
  CHECK_THROWS_AS(parse_local_spec("p=8,e=3,f=1"), PreconditionError);
  CHECK_THROWS_AS(parse_local_spec("p=7,e=3"), PreconditionError);
  CHECK_THROWS_AS(parse_local_spec("p=7,e=3,f=x"), PreconditionError);
  CHECK_THROWS_AS(parse_local_spec("p=7,e=3,g=1"), PreconditionError);
  const auto batch = parse_local_specs(nlohmann::json::parse(R"(["p=7,e=3,f=1", {"p": 11, "e": 1, "f": 2, "D": "C2"}])"));
  REQUIRE(batch.size() == 2);
  CHECK(batch[1].group->order() == 2);
  CHECK_THROWS_AS(parse_local_specs(nlohmann::json::parse(R"({"p": 7})")), PreconditionError);
  LocalExtensionSpec wild;
  wild.p = 3;
  wild.e = 3;
  CHECK_THROWS_AS(local_feasible(group::cyclic(3), wild), PreconditionError);
}

TEST_CASE("c4_embeddable_quadratic") {
  CHECK(c4_embeddable_quadratic(Rational(13)).embeddable);
  CHECK_FALSE(c4_embeddable_quadratic(Rational(13)).degenerate);
  CHECK_FALSE(c4_embeddable_quadratic(Rational(-1)).embeddable);
  CHECK_FALSE(c4_embeddable_quadratic(Rational(3)).embeddable);
  CHECK(c4_embeddable_quadratic(Rational(9, 4)).embeddable);
  CHECK(c4_embeddable_quadratic(Rational(9, 4)).degenerate);
  CHECK(c4_embeddable_quadratic(Rational(5, 9)).embeddable);
  CHECK_FALSE(c4_embeddable_quadratic(Rational(1, 3)).embeddable);
  CHECK(c4_embeddable_quadratic(Rational(18, 49)).embeddable);
  CHECK_THROWS_AS(c4_embeddable_quadratic(Rational(0)), PreconditionError);
}

TEST_CASE("sum of two squares matches the bounded search") {
  for (std::int64_t n = -30; n <= 30; ++n)
    for (std::int64_t m = 1; m <= 30; ++m) {
      if (n == 0) continue;
      const Rational a(n, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(c4_embeddable_quadratic(a).embeddable == testing::sum_two_squares_bruteforce(a, 30));
    }
}
