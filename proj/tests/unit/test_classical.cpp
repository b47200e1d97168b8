#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "entrobound/classical.hpp"

using namespace entrobound;

namespace {

void check_recombines(const BoundReport& r, double rel = 1e-12) {
  CHECK(r.value == doctest::Approx(r.recombined()).epsilon(rel));
}

}  // namespace

TEST_CASE("fano bound frozen value and structure") {
  BoundReport r = fano_bound(0.3, 2.0);
  CHECK(r.value == doctest::Approx(1.4562824776668752).epsilon(1e-14));
  CHECK(r.in_validity_domain);
  CHECK(r.combination == TermCombination::sum);
  CHECK(r.terms.size() == 2);
  check_recombines(r);
  CHECK(r.param("eps_max") == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("fano bound at E = 1 collapses to 2 h(eps)") {
  BoundReport r = fano_bound(0.3, 1.0);
  CHECK(r.value == doctest::Approx(1.2217286041097869).epsilon(1e-14));
  CHECK(shannon_continuity_bound(0.3, 1.0).value ==
        doctest::Approx(r.value).epsilon(1e-15));
}

TEST_CASE("fano bound edges and domain flag") {
  CHECK(fano_bound(0.0, 1.0).value == 0.0);
  CHECK(fano_bound(0.0, 1.0).in_validity_domain);
  // eps above E/(E+1): still evaluates, flag drops.
  BoundReport r = fano_bound(0.9, 1.0);
  CHECK_FALSE(r.in_validity_domain);
  CHECK(r.value == doctest::Approx(2.0 * binary_entropy(0.9)).epsilon(1e-13));
  // eps/E above 1 clamps inside h.
  BoundReport tiny = fano_bound(0.5, 0.25);
  CHECK_FALSE(tiny.in_validity_domain);
  CHECK(std::isfinite(tiny.value));
  CHECK_THROWS_AS(fano_bound(-0.1, 1.0), DomainError);
  CHECK_THROWS_AS(fano_bound(1.1, 1.0), DomainError);
  CHECK_THROWS_AS(fano_bound(0.3, 0.0), DomainError);
}

TEST_CASE("bound is monotone in eps inside the validity domain") {
  double E = 2.0;
  double prev = 0.0;
  for (int j = 1; j <= 40; ++j) {
    double eps = (E / (E + 1.0)) * j / 40.0;
    double v = fano_bound(eps, E).value;
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
}

TEST_CASE("extremal marginal attains the bound") {
  for (auto [eps, E] : {std::pair{0.3, 1.0}, {0.5, 1.0}, {0.1, 0.25},
                        {0.25, 2.0}, {0.6, 8.0}, {0.05, 4.0}}) {
    DiscreteDistribution m = extremal_marginal(eps, E, 4096, 1e-9);
    CHECK(m.at(0) == doctest::Approx(1.0 - eps).epsilon(1e-14));
    CHECK(m.mean() <= E * (1.0 + 1e-12));
    double h = shannon_entropy(m);
    double bound = fano_bound(eps, E).value;
    CHECK(std::fabs(h - bound) < 1e-9);
  }
}

TEST_CASE("extremal marginal rejects out-of-domain requests") {
  CHECK_THROWS_AS(extremal_marginal(0.6, 1.0, 512, 1e-9), DomainError);
  CHECK_THROWS_AS(extremal_marginal(0.0, 1.0, 512, 1e-9), DomainError);
  // Too small a dimension for the tail gate.
  CHECK_THROWS_AS(extremal_marginal(0.05, 8.0, 64, 1e-9), TruncationError);
}

TEST_CASE("extremal joint meets the bound through conditional entropy") {
  for (auto [eps, E] : {std::pair{0.3, 1.0}, {0.4, 2.0}}) {
    JointDistribution j = extremal_joint(eps, E, 4096, 1e-9);
    CHECK(j.mismatch_probability() == doctest::Approx(eps).epsilon(1e-10));
    CHECK(j.marginal_x().mean() <= E * (1.0 + 1e-12));
    double bound = fano_bound(eps, E).value;
    CHECK(std::fabs(conditional_entropy(j) - bound) < 1e-9);
  }
}

TEST_CASE("classical renyi/tsallis bound closed form with identity weights") {
  // p, q supported on letters 1 and 2: tv = 0.4, weighted tv = 0.6.
  DiscreteDistribution p({0.7, 0.3});
  DiscreteDistribution q({0.3, 0.7});
  double alpha = 0.8, beta = 0.6;
  BoundReport r = classical_renyi_tsallis_bound(p, q, alpha, beta);
  double zeta3 = 1.2020569031595943;
  double expect = (std::pow(2.0, alpha) / (1.0 - alpha)) *
                  std::pow(0.6, beta) * std::pow(0.4, alpha - beta) *
                  std::pow(zeta3, 1.0 - alpha);
  CHECK(r.value == doctest::Approx(expect).epsilon(1e-10));
  CHECK(r.combination == TermCombination::product);
  check_recombines(r);
  CHECK(r.param("tv") == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(r.param("tv_weighted") == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(r.param("weight_norm") == doctest::Approx(zeta3).epsilon(1e-12));
}

TEST_CASE("classical renyi/tsallis bound dominates both entropy differences") {
  DiscreteDistribution p({0.4, 0.3, 0.2, 0.1});
  DiscreteDistribution q({0.37, 0.33, 0.18, 0.12});
  for (double alpha : {0.5, 0.8}) {
    for (double beta : {0.3, 0.45}) {
      if (!(beta < alpha) || !(beta / (1.0 - alpha) > 1.0)) continue;
      BoundReport r = classical_renyi_tsallis_bound(p, q, alpha, beta);
      CHECK(std::fabs(renyi_entropy(p, alpha) - renyi_entropy(q, alpha)) <=
            r.value + 1e-12);
      CHECK(std::fabs(tsallis_entropy(p, alpha) - tsallis_entropy(q, alpha)) <=
            r.value + 1e-12);
    }
  }
}

TEST_CASE("classical renyi/tsallis bound vanishes at equal inputs") {
  DiscreteDistribution p({0.4, 0.6});
  BoundReport r = classical_renyi_tsallis_bound(p, p, 0.8, 0.6);
  CHECK(r.value == 0.0);
}

TEST_CASE("classical renyi/tsallis bound rejects divergent weight norms") {
  DiscreteDistribution p({0.7, 0.3});
  DiscreteDistribution q({0.3, 0.7});
  // kappa beta/(1-alpha) must exceed 1 for the weight norm to converge.
  CHECK_THROWS_AS(classical_renyi_tsallis_bound(p, q, 0.8, 0.15), ConfigError);
  CHECK_THROWS_AS(classical_renyi_tsallis_bound(p, q, 0.8, 0.19), ConfigError);
  CHECK_THROWS_AS(classical_renyi_tsallis_bound(p, q, 1.2, 0.6), DomainError);
  CHECK_THROWS_AS(classical_renyi_tsallis_bound(p, q, 0.8, 0.9), DomainError);
  CHECK_THROWS_AS(classical_renyi_tsallis_bound(p, q, 0.8, 0.0), DomainError);
}

TEST_CASE("gridded density mass and step") {
  GriddedDensity u{0.0, 1.0, std::vector<double>(101, 1.0)};
  CHECK(u.step() == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(u.trapezoid_mass() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("continuous bound closed form on matching grids") {
  const int n = 101;
  GriddedDensity mu{0.0, 1.0, std::vector<double>(n, 1.0)};
  GriddedDensity nu{0.0, 1.0, std::vector<double>(n, 0.0)};
  GriddedDensity w{0.0, 1.0, std::vector<double>(n, 1.0)};
  double c = 0.4;
  for (int i = 0; i < n; ++i) {
    double x = i / static_cast<double>(n - 1);
    nu.values[i] = 1.0 + c * (x - 0.5);
  }
  double alpha = 0.8, beta = 0.5;
  // ||mu - nu||_1 = c/4 exactly (kink at the central node, trapezoid exact).
  double l1 = c / 4.0;
  BoundReport t = continuous_renyi_tsallis_bound(mu, nu, alpha, beta, w,
                                                 EntropyKind::tsallis);
  double expect = std::pow(l1, alpha) / (1.0 - alpha);
  CHECK(t.value == doctest::Approx(expect).epsilon(1e-12));
  check_recombines(t);
  // Renyi variant scales by delta. delta = 1.05 is admissible: the tilted
  // density has int nu^alpha slightly below 1 (Jensen), but above 1/1.05.
  BoundReport r = continuous_renyi_tsallis_bound(mu, nu, alpha, beta, w,
                                                 EntropyKind::renyi, 1.05);
  CHECK(r.value == doctest::Approx(1.05 * expect).epsilon(1e-12));
  // delta too small to satisfy T f_alpha >= 1/delta.
  CHECK_THROWS_AS(continuous_renyi_tsallis_bound(mu, nu, alpha, beta, w,
                                                 EntropyKind::renyi, 0.5),
                  PreconditionError);
  // Renyi without delta is not a valid configuration.
  CHECK_THROWS_AS(continuous_renyi_tsallis_bound(mu, nu, alpha, beta, w,
                                                 EntropyKind::renyi),
                  ConfigError);
}

TEST_CASE("continuous bound validates grids and mass") {
  GriddedDensity mu{0.0, 1.0, std::vector<double>(11, 1.0)};
  GriddedDensity w{0.0, 1.0, std::vector<double>(11, 1.0)};
  GriddedDensity off_grid{0.0, 2.0, std::vector<double>(11, 0.5)};
  CHECK_THROWS_AS(continuous_renyi_tsallis_bound(mu, off_grid, 0.8, 0.5, w,
                                                 EntropyKind::tsallis),
                  DomainError);
  GriddedDensity wrong_n{0.0, 1.0, std::vector<double>(12, 1.0)};
  CHECK_THROWS_AS(continuous_renyi_tsallis_bound(mu, wrong_n, 0.8, 0.5, w,
                                                 EntropyKind::tsallis),
                  DomainError);
  GriddedDensity unnormalized{0.0, 1.0, std::vector<double>(11, 2.0)};
  CHECK_THROWS_AS(continuous_renyi_tsallis_bound(mu, unnormalized, 0.8, 0.5, w,
                                                 EntropyKind::tsallis),
                  PreconditionError);
}

TEST_CASE("alpha > 1 tsallis bound closed form") {
  DiscreteDistribution p = DiscreteDistribution::uniform(2);
  DiscreteDistribution q = DiscreteDistribution::uniform(4);
  BoundReport r = classical_alpha_gt1_bounds(p, q, 2.0, EntropyKind::tsallis);
  // ||p - q||_2 = 0.5, factor alpha/(alpha-1) = 2.
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
  check_recombines(r);
  double actual = std::fabs(tsallis_entropy(p, 2.0) - tsallis_entropy(q, 2.0));
  CHECK(actual <= r.value);
}

TEST_CASE("alpha > 1 renyi bound requires a valid delta") {
  DiscreteDistribution p = DiscreteDistribution::uniform(2);
  DiscreteDistribution q = DiscreteDistribution::uniform(4);
  BoundReport r =
      classical_alpha_gt1_bounds(p, q, 2.0, EntropyKind::renyi, 4.0);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-13));
  double actual = std::fabs(renyi_entropy(p, 2.0) - renyi_entropy(q, 2.0));
  CHECK(actual <= r.value);
  // sum q^2 = 0.25 < 1/2 breaks the delta = 2 hypothesis.
  CHECK_THROWS_AS(classical_alpha_gt1_bounds(p, q, 2.0, EntropyKind::renyi, 2.0),
                  PreconditionError);
  CHECK_THROWS_AS(classical_alpha_gt1_bounds(p, q, 2.0, EntropyKind::renyi),
                  ConfigError);
  CHECK_THROWS_AS(classical_alpha_gt1_bounds(p, q, 0.8, EntropyKind::tsallis),
                  DomainError);
}
