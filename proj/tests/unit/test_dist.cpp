#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "entrobound/dist.hpp"
#include "entrobound/rng.hpp"

using namespace entrobound;

TEST_CASE("distribution constructor normalizes and records the residual") {
  DiscreteDistribution p({2.0, 2.0});
  CHECK(p.at(0) == doctest::Approx(0.5));
  CHECK(p.normalization_residual() == doctest::Approx(3.0));
  CHECK_FALSE(p.is_normalized());
  CHECK(DiscreteDistribution({0.5, 0.5}).is_normalized());
}

TEST_CASE("distribution constructor rejects bad input") {
  CHECK_THROWS_AS(DiscreteDistribution({}), DomainError);
  CHECK_THROWS_AS(DiscreteDistribution({0.5, -0.1}), DomainError);
  CHECK_THROWS_AS(DiscreteDistribution({0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(DiscreteDistribution({1.0, std::nan("")}), DomainError);
}

TEST_CASE("geometric distribution has the requested mean") {
  DiscreteDistribution g = DiscreteDistribution::geometric(2.0, 2000);
  CHECK(g.mean() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(g.at(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // Successive ratio is mean/(mean+1).
  CHECK(g.at(5) / g.at(4) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("geometric truncation is refused when the tail is too heavy") {
  CHECK_THROWS_AS(DiscreteDistribution::geometric(50.0, 64), TruncationError);
  try {
    DiscreteDistribution::geometric(50.0, 64);
  } catch (const TruncationError& e) {
    CHECK(e.tail_mass == doctest::Approx(std::pow(50.0 / 51.0, 64)).epsilon(1e-12));
  }
}

TEST_CASE("binary entropy reference values and edges") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(binary_entropy(0.3) == doctest::Approx(0.6108643020548935).epsilon(1e-14));
  CHECK(binary_entropy(0.5, LogBase::bits()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
  CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("shannon entropy on known distributions") {
  CHECK(shannon_entropy(DiscreteDistribution::uniform(8)) ==
        doctest::Approx(std::log(8.0)).epsilon(1e-14));
  CHECK(shannon_entropy(DiscreteDistribution::point_mass(3, 10)) == 0.0);
  CHECK(shannon_entropy(DiscreteDistribution({0.7, 0.3})) ==
        doctest::Approx(0.6108643020548935).epsilon(1e-14));
  CHECK(shannon_entropy(DiscreteDistribution::uniform(8), LogBase::bits()) ==
        doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("renyi entropy frozen values and shannon limit") {
  DiscreteDistribution p({0.7, 0.3});
  CHECK(renyi_entropy(p, 0.5) == doctest::Approx(0.6505085050982560).epsilon(1e-14));
  CHECK(renyi_entropy(p, 2.0) == doctest::Approx(0.5447271754416720).epsilon(1e-14));
  // alpha -> 1 recovers Shannon.
  double h = shannon_entropy(p);
  CHECK(renyi_entropy(p, 1.0 + 1e-4) == doctest::Approx(h).epsilon(1e-3));
  CHECK(renyi_entropy(p, 1.0 - 1e-4) == doctest::Approx(h).epsilon(1e-3));
  CHECK_THROWS_AS(renyi_entropy(p, 1.0), DomainError);
  CHECK_THROWS_AS(renyi_entropy(p, 0.0), DomainError);
}

TEST_CASE("tsallis entropy frozen values and uniform closed form") {
  DiscreteDistribution p({0.7, 0.3});
  CHECK(tsallis_entropy(p, 0.5) == doctest::Approx(0.7687651680784833).epsilon(1e-14));
  CHECK(tsallis_entropy(p, 2.0) == doctest::Approx(0.42).epsilon(1e-14));
  // Uniform: (d^{1-alpha} - 1)/(1 - alpha).
  for (double a : {0.3, 0.8, 1.7, 3.0}) {
    double d = 16.0;
    double expect = (std::pow(d, 1.0 - a) - 1.0) / (1.0 - a);
    CHECK(tsallis_entropy(DiscreteDistribution::uniform(16), a) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  double h = shannon_entropy(p);
  CHECK(tsallis_entropy(p, 1.0 + 1e-4) == doctest::Approx(h).epsilon(1e-3));
}

TEST_CASE("joint distribution marginals and mismatch") {
  // 2x2 joint: cells (x,y) row-major.
  JointDistribution j(2, {0.4, 0.1, 0.2, 0.3});
  DiscreteDistribution mx = j.marginal_x();
  DiscreteDistribution my = j.marginal_y();
  CHECK(mx.at(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mx.at(1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(my.at(0) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(my.at(1) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(j.mismatch_probability() == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("conditional entropy equals the chain-rule difference") {
  JointDistribution j(2, {0.4, 0.1, 0.2, 0.3});
  auto nxlx = [](double v) { return v > 0 ? -v * std::log(v) : 0.0; };
  double hxy = nxlx(0.4) + nxlx(0.1) + nxlx(0.2) + nxlx(0.3);
  double hy = nxlx(0.6) + nxlx(0.4);
  CHECK(conditional_entropy(j) == doctest::Approx(hxy - hy).epsilon(1e-14));
  // Product joint: H(X|Y) = H(X).
  JointDistribution prod(2, {0.35, 0.35, 0.15, 0.15});
  CHECK(conditional_entropy(prod) ==
        doctest::Approx(shannon_entropy(DiscreteDistribution({0.7, 0.3})))
            .epsilon(1e-12));
  // Perfectly correlated: H(X|Y) = 0.
  JointDistribution diag(3, {0.2, 0, 0, 0, 0.5, 0, 0, 0, 0.3});
  CHECK(conditional_entropy(diag) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("conditional entropy on a randomized joint stays consistent") {
  // Regression guard for the dangling-marginal bug: recompute H(XY) - H(Y)
  // by hand for a joint drawn through the public constructor.
  CounterRng rng(20200713);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t d = 5 + rep;
    std::vector<double> cells(d * d);
    for (double& c : cells) c = rng.next_exponential();
    JointDistribution j(d, cells);
    auto nxlx = [](double v) { return v > 0 ? -v * std::log(v) : 0.0; };
    double hxy = 0.0;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) hxy += nxlx(j.at(x, y));
    double hy = 0.0;
    for (std::size_t y = 0; y < d; ++y) {
      double col = 0.0;
      for (std::size_t x = 0; x < d; ++x) col += j.at(x, y);
      hy += nxlx(col);
    }
    CHECK(conditional_entropy(j) == doctest::Approx(hxy - hy).epsilon(1e-11));
  }
}

TEST_CASE("total variation basics") {
  DiscreteDistribution p({0.7, 0.3});
  DiscreteDistribution q({0.3, 0.7});
  CHECK(total_variation(p, q) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(total_variation(p, p) == 0.0);
  // Disjoint supports (zero padding across different dims).
  CHECK(total_variation(DiscreteDistribution({1.0}),
                        DiscreteDistribution({0.0, 1.0})) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("weighted total variation uses the weight at each index") {
  // w_n = max(n, 1), so indices 0 and 1 both carry weight 1.
  DiscreteDistribution p({0.7, 0.3});
  DiscreteDistribution q({0.3, 0.7});
  CHECK(total_variation(p, q, WeightSequence::identity()) ==
        doctest::Approx(0.4).epsilon(1e-14));
  DiscreteDistribution p3({0.5, 0.2, 0.3});
  DiscreteDistribution q3({0.2, 0.2, 0.6});
  // Half of 0.3*w(0) + 0 + 0.3*w(2) with w = power(2): (0.3 + 0.3*4)/2.
  CHECK(total_variation(p3, q3, WeightSequence::power(2.0)) ==
        doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("weight sequences") {
  WeightSequence w = WeightSequence::identity();
  CHECK(w.at(0) == 1.0);
  CHECK(w.at(1) == 1.0);
  CHECK(w.at(7) == 7.0);
  WeightSequence w2 = WeightSequence::power(1.5);
  CHECK(w2.at(4) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(WeightSequence::ones().at(1000) == 1.0);
  CHECK_THROWS_AS(WeightSequence::power(0.0), DomainError);
}

TEST_CASE("maximal coupling attains total variation as mismatch") {
  CounterRng rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t d = 2 + static_cast<std::size_t>(rng.next_index(0, 18));
    std::vector<double> pv(d), qv(d);
    for (double& v : pv) v = rng.next_exponential();
    for (double& v : qv) v = rng.next_exponential();
    DiscreteDistribution p(pv), q(qv);
    JointDistribution c = maximal_coupling(p, q);
    double tv = total_variation(p, q);
    CHECK(c.mismatch_probability() == doctest::Approx(tv).epsilon(1e-10));
    // Marginals must be p and q.
    DiscreteDistribution mx = c.marginal_x();
    DiscreteDistribution my = c.marginal_y();
    for (std::size_t n = 0; n < d; ++n) {
      CHECK(mx.at(n) == doctest::Approx(p.at(n)).epsilon(1e-10));
      CHECK(my.at(n) == doctest::Approx(q.at(n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("maximal coupling of identical distributions is diagonal") {
  DiscreteDistribution p({0.2, 0.5, 0.3});
  JointDistribution c = maximal_coupling(p, p);
  CHECK(c.mismatch_probability() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(conditional_entropy(c) == doctest::Approx(0.0).epsilon(1e-12));
}
