#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rgp/prior.hpp"
#include "rgp/rng.hpp"
#include "rgp/spectral.hpp"

using namespace rgp;

TEST_CASE("spectral density: Fourier integral reproduces the covariance") {
  SpectralMeasure gauss(SpectralFamily::GaussianSpectral);
  for (double t : {0.0, 0.5, 1.0}) {
    const double via_fourier = oracles::fourier_of_density(
        [&](double l) { return gauss.density(l); }, t, gauss.tail_cutoff());
    CHECK(std::abs(via_fourier - std::exp(-t * t)) < 1e-6);
  }
  SpectralMeasure laplace(SpectralFamily::LaplaceSpectral);
  for (double t : {0.0, 0.5, 1.0}) {
    const double via_fourier = oracles::fourier_of_density(
        [&](double l) { return laplace.density(l); }, t, laplace.tail_cutoff());
    CHECK(std::abs(via_fourier - 1.0 / (1.0 + t * t)) < 1e-6);
  }
}

TEST_CASE("spectral density: symmetry and total mass") {
  SpectralMeasure laplace(SpectralFamily::LaplaceSpectral);
  for (double l : {0.1, 0.7, 3.0, 11.0}) CHECK(laplace.density(l) == laplace.density(-l));
  SpectralMeasure gauss(SpectralFamily::GaussianSpectral);
  const double mass = 2.0 * oracles::quad([&](double l) { return gauss.density(l); }, 0.0,
                                          gauss.tail_cutoff(), 64);
  CHECK(std::abs(mass - 1.0) < 1e-8);  // phi(0) = total mass of mu
}

TEST_CASE("spectral measure: exponential-moment condition holds at the stored delta") {
  for (SpectralFamily fam : {SpectralFamily::GaussianSpectral, SpectralFamily::LaplaceSpectral}) {
    SpectralMeasure mu(fam);
    const double m = mu.exp_moment(mu.delta());
    CHECK(std::isfinite(m));
    CHECK(m > 1.0);
    CHECK(m < 1e6);
  }
}

TEST_CASE("fourier consistency of phi over t in [0,5]") {
  for (SpectralFamily fam : {SpectralFamily::GaussianSpectral, SpectralFamily::LaplaceSpectral}) {
    StationaryKernel kernel(fam);
    for (int i = 0; i <= 10; ++i) {
      const double t = 0.5 * i;
      const double via_fourier = oracles::fourier_of_density(
          [&](double l) { return kernel.spectral().density(l); }, t,
          kernel.spectral().tail_cutoff());
      CHECK(std::abs(via_fourier - kernel.phi(t)) < 1e-6);
    }
  }
}

TEST_CASE("stationary covariance examples") {
  GaussianPrior sqexp = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 1.0);
  CHECK(sqexp.covariance(0.3, 0.3) == doctest::Approx(1.0));
  GaussianPrior half = sqexp.rescaled(0.5);
  CHECK(half.covariance(0.0, 0.5) == doctest::Approx(std::exp(-1.0)));
  GaussianPrior laplace = GaussianPrior::stationary(SpectralFamily::LaplaceSpectral, 1.0);
  CHECK(laplace.covariance(0.0, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("stationarity: covariance depends on the gap only") {
  GaussianPrior prior = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 0.37);
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const double s = rng.uniform() * 0.5;
    const double t = rng.uniform() * 0.5;
    const double h = rng.uniform() * 0.5;
    CHECK(prior.covariance(s + h, t + h) == doctest::Approx(prior.covariance(s, t)).epsilon(1e-14));
  }
}

TEST_CASE("phi bounds: |phi(t)| <= phi(0) > 0") {
  for (SpectralFamily fam : {SpectralFamily::GaussianSpectral, SpectralFamily::LaplaceSpectral}) {
    StationaryKernel kernel(fam);
    CHECK(kernel.phi(0.0) > 0.0);
    for (double t = -5.0; t <= 5.0; t += 0.25)
      CHECK(std::abs(kernel.phi(t)) <= kernel.phi(0.0) + 1e-15);
  }
}

TEST_CASE("ibm covariance: closed forms and quadrature") {
  CHECK(ibm_covariance(0, 0.3, 0.8) == doctest::Approx(0.3));
  CHECK(ibm_covariance(0, 0.9, 0.2) == doctest::Approx(0.2));
  CHECK(ibm_covariance(1, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // s^2 t / 2 - s^3 / 6 at s=0.5, t=1
  CHECK(ibm_covariance(1, 0.5, 1.0) == doctest::Approx(0.125 - 0.125 / 6.0).epsilon(1e-12));
  CHECK(ibm_covariance(1, 0.5, 1.0) ==
        doctest::Approx(oracles::ibm_covariance_quad(1, 0.5, 1.0)).epsilon(1e-10));
  for (int k = 2; k <= 4; ++k)
    for (auto [s, t] : {std::pair{0.4, 0.9}, {1.0, 1.0}, {0.15, 2.3}})
      CHECK(ibm_covariance(k, s, t) ==
            doctest::Approx(oracles::ibm_covariance_quad(k, s, t)).epsilon(1e-9));
  CHECK_THROWS(ibm_covariance(0, -0.1, 0.5));
  CHECK_THROWS(ibm_covariance(5, 0.5, 0.5));
}

TEST_CASE("prior covariance matrix examples") {
  const GaussianPrior bm = GaussianPrior::modified_ibm(0, 1.0, 1.0);
  Eigen::MatrixXd m = prior_covariance_matrix(bm, {0.0});
  CHECK(m(0, 0) == doctest::Approx(1.0));  // K_0(0,0) = 0 plus 1/a

  const GaussianPrior sqexp = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 1.0);
  Eigen::MatrixXd k3 = prior_covariance_matrix(sqexp, {0.0, 0.5, 1.0});
  CHECK(k3(0, 0) == doctest::Approx(1.0));
  CHECK(k3(0, 1) == doctest::Approx(std::exp(-0.25)));
  CHECK(k3(0, 2) == doctest::Approx(std::exp(-1.0)));
  CHECK(k3(1, 2) == doctest::Approx(std::exp(-0.25)));
  CHECK((k3 - k3.transpose()).cwiseAbs().maxCoeff() == 0.0);

  const GaussianPrior ibm1 = GaussianPrior::modified_ibm(1, 1.0, 4.0);
  Eigen::MatrixXd m1 = prior_covariance_matrix(ibm1, {1.0});
  CHECK(m1(0, 0) == doctest::Approx(1.0 / 3.0 + 0.25 * 2.0).epsilon(1e-12));

  CHECK_THROWS(prior_covariance_matrix(sqexp, {0.5, 0.5}));
  CHECK_THROWS(prior_covariance_matrix(sqexp, {0.2, 0.1}));
  CHECK_THROWS(prior_covariance_matrix(sqexp, {-0.1, 0.5}));
}

TEST_CASE("every assembled covariance factorizes with bounded jitter up to 512 points") {
  const Grid grid = make_grid(512);
  for (double c : {1.0, 0.25, 0.05}) {
    CHECK_NOTHROW(cholesky_with_jitter(
        prior_covariance_matrix(GaussianPrior::stationary(SpectralFamily::GaussianSpectral, c), grid)));
    CHECK_NOTHROW(cholesky_with_jitter(
        prior_covariance_matrix(GaussianPrior::stationary(SpectralFamily::LaplaceSpectral, c), grid)));
  }
  CHECK_NOTHROW(cholesky_with_jitter(
      prior_covariance_matrix(GaussianPrior::modified_ibm(2, 0.5, 10.0), grid)));
}

TEST_CASE("sample_paths: determinism in the seed") {
  const GaussianPrior prior = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 0.4);
  const Grid grid = make_grid(32);
  auto a = sample_paths(prior, grid, 3, 99);
  auto b = sample_paths(prior, grid, 3, 99);
  for (int p = 0; p < 3; ++p)
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(a[static_cast<std::size_t>(p)].values[i] == b[static_cast<std::size_t>(p)].values[i]);
}

TEST_CASE("sample_paths: empirical covariance matches the kernel") {
  const GaussianPrior prior = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 1.0);
  const Grid grid = make_grid(64);
  const int n = 100000;
  const Eigen::MatrixXd paths = sample_path_matrix(prior, grid, n, 123);
  // spot-check a handful of entries at 3 Monte Carlo standard errors
  for (auto [i, j] : {std::pair{0, 0}, {10, 10}, {5, 20}, {0, 63}, {30, 40}}) {
    double acc = 0.0;
    for (int p = 0; p < n; ++p) acc += paths(i, p) * paths(j, p);
    const double est = acc / n;
    const double truth = prior.covariance(grid[static_cast<std::size_t>(i)],
                                          grid[static_cast<std::size_t>(j)]);
    const double kii = prior.covariance(grid[static_cast<std::size_t>(i)],
                                        grid[static_cast<std::size_t>(i)]);
    const double kjj = prior.covariance(grid[static_cast<std::size_t>(j)],
                                        grid[static_cast<std::size_t>(j)]);
    const double se = std::sqrt((kii * kjj + truth * truth) / n);
    CHECK(std::abs(est - truth) < 3.0 * se);
  }
}

TEST_CASE("sample_paths: near-pure Brownian motion variance at t=1") {
  const GaussianPrior prior = GaussianPrior::modified_ibm(0, 1.0, 1e12);
  const Grid grid = make_grid(64);
  const int n = 100000;
  const Eigen::MatrixXd paths = sample_path_matrix(prior, grid, n, 321);
  double acc = 0.0;
  for (int p = 0; p < n; ++p) acc += paths(63, p) * paths(63, p);
  const double est = acc / n;
  const double se = std::sqrt(2.0 / n);  // var of chi2-mean at variance 1
  CHECK(std::abs(est - 1.0) < 3.0 * se);
}

TEST_CASE("rescale: identity, formula, and validation") {
  const GaussianPrior prior = GaussianPrior::stationary(SpectralFamily::GaussianSpectral, 0.3);
  const GaussianPrior same = prior.rescaled(0.3);
  const Grid grid = make_grid(16);
  const Eigen::MatrixXd a = prior_covariance_matrix(prior, grid);
  const Eigen::MatrixXd b = prior_covariance_matrix(same, grid);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);

  const GaussianPrior half = prior.rescaled(0.5);
  CHECK(half.covariance(0.25, 0.0) == doctest::Approx(std::exp(-0.25)));

  const GaussianPrior ibm = GaussianPrior::modified_ibm(0, 1.0, 1e15).rescaled(2.0);
  CHECK(ibm.covariance(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-3));  // min(1/2,1/2) + tiny

  CHECK_THROWS(prior.rescaled(0.0));
  CHECK_THROWS(prior.rescaled(-1.0));
}

TEST_CASE("self-similarity of the pure integrated BM covariance") {
  const double inf = std::numeric_limits<double>::infinity();
  const Grid grid = {0.1, 0.35, 0.62, 0.97};
  for (int k = 0; k <= 4; ++k) {
    for (double c : {0.5, 2.0, 3.7}) {
      const GaussianPrior base = GaussianPrior::modified_ibm(k, 1.0, inf);
      const GaussianPrior scaled = GaussianPrior::modified_ibm(k, c, inf);
      const Eigen::MatrixXd kc = prior_covariance_matrix(scaled, grid);
      const Eigen::MatrixXd k1 = prior_covariance_matrix(base, grid);
      const double factor = std::pow(c, -(2.0 * k + 1.0));
      CHECK((kc - factor * k1).cwiseAbs().maxCoeff() < 1e-9 * factor);
    }
  }
}

TEST_CASE("rng: portable stream and seed mixing") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
  // uniforms land strictly inside (0,1); normals have sane moments
  Rng r(42);
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = r.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    const double z = r.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / 20000.0) < 0.03);
  CHECK(std::abs(sum2 / 20000.0 - 1.0) < 0.04);
}
