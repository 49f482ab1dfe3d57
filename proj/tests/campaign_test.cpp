#include <doctest.h>

#include "ramsey/campaign.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"

using namespace ramsey;

namespace {

ForestSpec forest(const char* spec) { return parse_forest_spec(spec); }
CliqueUnion target(const char* spec) { return parse_clique_union(spec); }

}  // namespace

TEST_CASE("exhaustive_verify at and below R(P3, 2K2)") {
  const auto f = forest("P3");
  const auto h = target("2K2");
  for (Engine e : {Engine::Oracle, Engine::Proof}) {
    const auto pass = exhaustive_verify(f, h, 4, e);
    CHECK(pass.trials == 64);
    CHECK(pass.failures == 0);
    CHECK_FALSE(pass.first_failure.has_value());
    CHECK(pass.passed());

    const auto fail = exhaustive_verify(f, h, 3, e);
    CHECK(fail.trials == 8);
    CHECK(fail.failures >= 1);
    REQUIRE(fail.first_failure.has_value());
    CHECK(*fail.first_failure == TwoColoring::from_bits(3, 0));
  }
}

TEST_CASE("the Burr coloring is among the failures at N = R-1") {
  const auto f = forest("P3");
  const auto h = target("2K2");
  const auto burr = burr_coloring(3, h).coloring;
  CHECK_FALSE(engine_witness(burr, f, h, Engine::Oracle).has_value());
  CHECK_FALSE(engine_witness(burr, f, h, Engine::Proof).has_value());
}

TEST_CASE("exhaustive_verify respects the cap") {
  CHECK_THROWS_AS(exhaustive_verify(forest("P3"), target("2K2"), 9, Engine::Oracle), Error);
  CHECK_THROWS_AS(exhaustive_verify(forest("P3"), target("2K2"), 5, Engine::Oracle, 8), Error);
}

TEST_CASE("sampled_verify") {
  const auto r = sampled_verify(forest("star:4"), target("2K3"), 8, Engine::Proof, 500, 1);
  CHECK(r.trials == 500);
  CHECK(r.failures == 0);
  REQUIRE(r.seed.has_value());
  CHECK(*r.seed == 1);
  CHECK_THROWS_AS(sampled_verify(forest("P3"), target("2K2"), 4, Engine::Oracle, 0, 1), Error);

  const auto below = sampled_verify(forest("star:4"), target("2K3"), 7, Engine::Oracle, 2000, 1);
  CHECK(below.failures <= below.trials);
}

TEST_CASE("sampling is deterministic") {
  CHECK(sample_coloring(9, 42, 7) == sample_coloring(9, 42, 7));
  CHECK_FALSE(sample_coloring(9, 42, 7) == sample_coloring(9, 42, 8));
  CHECK_FALSE(sample_coloring(9, 42, 7) == sample_coloring(9, 43, 7));
  const auto a = sampled_verify(forest("P4"), target("2K2"), 4, Engine::Oracle, 300, 9);
  const auto b = sampled_verify(forest("P4"), target("2K2"), 4, Engine::Oracle, 300, 9);
  CHECK(write_report(a) == write_report(b));
  CHECK(a.failures > 0);
}

TEST_CASE("engines agree per coloring on both sides of the threshold") {
  const auto f = forest("star:4");
  const auto h = target("2K2");
  for (int n : {4, 5})
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
      const auto c = TwoColoring::from_bits(n, bits);
      CHECK(engine_witness(c, f, h, Engine::Oracle).has_value() ==
            engine_witness(c, f, h, Engine::Proof).has_value());
    }
}

TEST_CASE("report text") {
  CampaignResult r;
  r.mode = CampaignMode::Sampled;
  r.seed = 5;
  r.trials = 10;
  CHECK(write_report(r) == "mode: SAMPLED\nseed: 5\ntrials: 10\nfailures: 0\nresult: PASS\n");
}
