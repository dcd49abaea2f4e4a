#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "noma/geometry.hpp"

using namespace noma;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("fixture distance rules") {
  CHECK(make_fixture(FixtureRule::HighDensity, 3) == std::vector<double>{50, 60, 70});
  CHECK(make_fixture(FixtureRule::LowDensity, 1) == std::vector<double>{70});
  CHECK(make_fixture(FixtureRule::MediumDensity, 5) ==
        std::vector<double>{60, 80, 100, 120, 140});
  // medium density with n=10 reaches 240 m
  const auto medium = make_fixture(FixtureRule::MediumDensity, 10);
  CHECK(medium.front() == 60.0);
  CHECK(medium.back() == 240.0);
  CHECK_THROWS_AS(make_fixture(FixtureRule::HighDensity, 0), std::invalid_argument);
}

TEST_CASE("two-point association") {
  const std::vector<Point> bs = {{10, 0}, {20, 0}};
  const Association assoc = associate(bs, {0, 0});
  CHECK(assoc.serving_index == 0);
  CHECK(assoc.serving_distance == doctest::Approx(10.0));
  REQUIRE(assoc.interferer_distances.size() == 1);
  CHECK(assoc.interferer_distances[0] == doctest::Approx(20.0));
}

TEST_CASE("association requires an interferer") {
  CHECK_THROWS_AS(associate({{1, 1}}, {0, 0}), std::invalid_argument);
}

TEST_CASE("association matches brute-force scan on random deployments") {
  const DeploymentConfig config = DeploymentConfig::with_mean_count(80.0);
  RngStream rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto bs = sample_bs_positions(config, rng);
    const Point ue = sample_ue_position(config, rng);
    const Association assoc = associate(bs, ue);

    std::size_t best = 0;
    for (std::size_t i = 1; i < bs.size(); ++i) {
      if (distance(bs[i], ue) < distance(bs[best], ue)) best = i;
    }
    CHECK(assoc.serving_index == best);
    CHECK(assoc.interferer_distances.size() == bs.size() - 1);
    CHECK(std::is_sorted(assoc.interferer_distances.begin(),
                         assoc.interferer_distances.end()));
    for (double d : assoc.interferer_distances) {
      CHECK(d >= assoc.serving_distance);
    }
  }
}

TEST_CASE("deployment validation") {
  DeploymentConfig bad = DeploymentConfig::with_mean_count(100.0);
  bad.density = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = DeploymentConfig::with_mean_count(100.0);
  bad.half_width = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = DeploymentConfig::with_mean_count(100.0);
  bad.guard_fraction = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("paper-scale deployment has mean count 1000") {
  // lambda = 1e-4 / m^2 over 1e7 m^2
  DeploymentConfig config;
  config.density = 1e-4;
  config.half_width = 0.5 * std::sqrt(1e7);
  CHECK(config.mean_bs_count() == doctest::Approx(1000.0));
}

TEST_CASE("PPP count statistics over a 2000 m square window") {
  // lambda=1e-4, 2000x2000 m -> mean 400, per-draw sigma 20
  DeploymentConfig config;
  config.density = 1e-4;
  config.half_width = 1000.0;
  config.guard_fraction = 0.2;

  const int draws = 1000;
  RngStream rng(7);
  std::vector<double> counts;
  counts.reserve(draws);
  for (int i = 0; i < draws; ++i) {
    counts.push_back(static_cast<double>(sample_bs_positions(config, rng).size()));
  }
  const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / draws;
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= draws - 1;

  CHECK(std::abs(mean - 400.0) <= 3.0 * 20.0 / std::sqrt(double(draws)));
  // variance of the sample variance for Poisson(400) over 1000 draws
  CHECK(std::abs(var - 400.0) <= 4.0 * std::sqrt((400.0 + 3 * 400.0 * 400.0 -
                                                  400.0 * 400.0 + 2 * 400.0 * 400.0 /
                                                  (draws - 1)) /
                                                 draws));
}

TEST_CASE("PPP counts pass a chi-square goodness-of-fit check") {
  const double mean = 50.0;
  DeploymentConfig config = DeploymentConfig::with_mean_count(mean);
  const int draws = 1000;
  RngStream rng(11);
  std::vector<long> counts;
  counts.reserve(draws);
  for (int i = 0; i < draws; ++i) {
    counts.push_back(static_cast<long>(sample_bs_positions(config, rng).size()));
  }

  // bins over k with expected count comfortably above 5, tails merged
  const long k_lo = 38, k_hi = 62, step = 4;
  auto poisson_pmf = [&](long k) {
    return std::exp(k * std::log(mean) - mean - std::lgamma(double(k) + 1.0));
  };
  auto bin_of = [&](long k) {
    if (k < k_lo) return std::size_t{0};
    if (k >= k_hi) return std::size_t((k_hi - k_lo) / step + 1);
    return std::size_t((k - k_lo) / step + 1);
  };
  const std::size_t nbins = bin_of(k_hi) + 1;
  std::vector<double> expected(nbins, 0.0);
  std::vector<double> observed(nbins, 0.0);
  for (long k = 0; k < 200; ++k) {
    expected[bin_of(k)] += poisson_pmf(k) * draws;
  }
  for (long c : counts) observed[bin_of(c)] += 1.0;

  double chi2 = 0.0;
  int dof = -1;
  for (std::size_t b = 0; b < expected.size(); ++b) {
    REQUIRE(expected[b] >= 4.0);  // binning sanity
    chi2 += (observed[b] - expected[b]) * (observed[b] - expected[b]) / expected[b];
    ++dof;
  }
  // Wilson-Hilferty approximation of the 99% chi-square quantile
  const double d = static_cast<double>(dof);
  const double crit = d * std::pow(1.0 - 2.0 / (9.0 * d) + 2.3263 * std::sqrt(2.0 / (9.0 * d)), 3.0);
  CHECK(chi2 < crit);
}

TEST_CASE("UEs stay inside the guard-reduced region") {
  const DeploymentConfig config = DeploymentConfig::with_mean_count(60.0, 1e-4, 0.3);
  RngStream rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point ue = sample_ue_position(config, rng);
    const double to_boundary =
        config.half_width - std::max(std::abs(ue.x), std::abs(ue.y));
    CHECK(to_boundary >= config.guard_distance() - 1e-9);
  }
}

TEST_CASE("sampled realization is reproducible and well-formed") {
  const DeploymentConfig config = DeploymentConfig::with_mean_count(100.0);
  RngStream rng_a = RngStream::substream(99, 5);
  RngStream rng_b = RngStream::substream(99, 5);
  const NetworkRealization a = sample_ppp(config, rng_a);
  const NetworkRealization b = sample_ppp(config, rng_b);
  REQUIRE(a.bs_positions.size() == b.bs_positions.size());
  CHECK(a.ue_positions[0].x == b.ue_positions[0].x);
  CHECK(a.links[0].serving_distance == b.links[0].serving_distance);
  CHECK(a.bs_positions.size() >= 2);
}

TEST_CASE("co-cell pair shares the serving BS") {
  const DeploymentConfig config = DeploymentConfig::with_mean_count(60.0);
  int found = 0;
  for (int r = 0; r < 25; ++r) {
    RngStream rng = RngStream::substream(17, static_cast<std::uint64_t>(r));
    const auto pair = sample_co_cell_pair(config, rng);
    if (!pair) continue;
    ++found;
    REQUIRE(pair->links.size() == 2);
    CHECK(pair->links[0].serving_index == pair->links[1].serving_index);
  }
  CHECK(found >= 20);  // the retry cap should almost never bite
}

TEST_CASE("poisson sampler mean identity") {
  RngStream rng(123);
  const int n = 4000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += static_cast<double>(rng.poisson(12.5));
  const double mean = acc / n;
  CHECK(std::abs(mean - 12.5) <= 4.0 * std::sqrt(12.5 / n));
  CHECK_THROWS_AS(rng.poisson(-1.0), std::invalid_argument);
}

TEST_SUITE_END();
