#include "rgp/experiment.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "rgp/density.hpp"
#include "rgp/rng.hpp"

namespace rgp {

RateFit rate_fit(const std::vector<double>& n_values, const std::vector<double>& radii,
                 double alpha) {
  if (n_values.size() != radii.size() || n_values.size() < 2)
    throw std::invalid_argument("rate_fit: need matching n/radius vectors of length >= 2");
  for (double r : radii)
    if (!(r > 0.0)) throw std::invalid_argument("rate_fit: radii must be positive");

  const std::size_t m = n_values.size();
  std::vector<double> x(m), y(m);
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = std::log(n_values[i]);
    y[i] = std::log(radii[i]);
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= static_cast<double>(m);
  ybar /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  RateFit fit;
  fit.n_values = n_values;
  fit.radii = radii;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ss_res += r * r;
  }
  fit.slope_se = m > 2 ? std::sqrt(ss_res / static_cast<double>(m - 2) / sxx) : 0.0;
  fit.target_slope = std::isfinite(alpha) ? -alpha / (1.0 + 2.0 * alpha)
                                          : std::numeric_limits<double>::quiet_NaN();
  return fit;
}

namespace {

std::vector<double> equispaced_design(long n) {
  std::vector<double> d(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return d;
}

// distances for one exact-posterior regression replication
CellResult regression_cell(const RegressionSolver& solver, const std::vector<double>& design,
                           const std::vector<double>& truth_at_design, double sigma0,
                           int n_draws, std::uint64_t cell_seed, double c_used, double n,
                           int replication) {
  Rng rng(mix_seed(cell_seed, 0xda7aULL));
  Eigen::VectorXd y(static_cast<Eigen::Index>(design.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y(i) = truth_at_design[static_cast<std::size_t>(i)] + sigma0 * rng.normal();

  const Eigen::MatrixXd draws = solver.sample(y, n_draws, mix_seed(cell_seed, 0xd4a5ULL));
  std::vector<double> dist(static_cast<std::size_t>(n_draws));
  GridFunction f;
  f.grid = solver.grid();
  for (int j = 0; j < n_draws; ++j) {
    f.values.assign(draws.col(j).data(), draws.col(j).data() + draws.rows());
    dist[static_cast<std::size_t>(j)] = empirical_norm_distance(f, design, truth_at_design);
  }
  CellResult cell;
  cell.n = n;
  cell.replication = replication;
  cell.c_used = c_used;
  cell.radius = quantile(dist, 0.9);
  cell.median = quantile(dist, 0.5);
  cell.acceptance_rate = 1.0;
  cell.seed = cell_seed;
  return cell;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < std::min(threads, count); ++t)
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

ExperimentResult contraction_experiment(const ExperimentConfig& config) {
  if (config.n_values.size() < 4)
    throw std::invalid_argument("contraction_experiment: need >= 4 n values");
  for (std::size_t i = 1; i < config.n_values.size(); ++i)
    if (!(config.n_values[i] > config.n_values[i - 1]))
      throw std::invalid_argument("contraction_experiment: n_values must be increasing");
  if (config.replications < 1)
    throw std::invalid_argument("contraction_experiment: replications must be >= 1");

  const Grid grid = make_grid(config.grid_size);
  const SmoothTruth truth = make_truth(config.setting, config.alpha);
  const std::vector<double> truth_on_grid = truth.values_on(grid);

  ExperimentResult result;
  result.cells.resize(config.n_values.size() * static_cast<std::size_t>(config.replications));

  std::vector<double> mean_radii(config.n_values.size(), 0.0);
  std::vector<double> median_radii(config.n_values.size(), 0.0);

  for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
    const double n_real = config.n_values[ni];
    const long n = static_cast<long>(n_real);
    double c_n, a_n;
    if (config.override_c.has_value()) {
      c_n = *config.override_c;
      a_n = config.prior_family == PriorFamilyKind::ModifiedIbmFamily
                ? scaling_rule(config.prior_family, config.alpha, n_real, config.k).a_n
                : 1.0;
    } else {
      const ScalingResult s = scaling_rule(config.prior_family, config.alpha, n_real, config.k);
      c_n = s.c_n;
      a_n = s.a_n;
    }
    const GaussianPrior prior = build_prior(config.prior_family, c_n, a_n, config.k);

    auto cell_slot = [&](int rep) -> CellResult& {
      return result.cells[ni * static_cast<std::size_t>(config.replications) +
                          static_cast<std::size_t>(rep)];
    };

    if (config.setting == Setting::Regression) {
      const std::vector<double> design = equispaced_design(n);
      std::vector<double> truth_at_design(design.size());
      for (std::size_t i = 0; i < design.size(); ++i)
        truth_at_design[i] = truth.value(design[i]);
      const RegressionSolver solver(prior, design, config.sigma0, grid);
      parallel_for(config.replications, config.threads, [&](int rep) {
        const std::uint64_t cell_seed =
            mix_seed(config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep));
        cell_slot(rep) = regression_cell(solver, design, truth_at_design, config.sigma0,
                                         config.posterior_draws, cell_seed, c_n, n_real, rep);
      });
    } else {
      const DensityModel p0 = make_density(GridFunction{grid, truth_on_grid});
      parallel_for(config.replications, config.threads, [&](int rep) {
        const std::uint64_t cell_seed =
            mix_seed(config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep));
        McmcConfig mcmc = config.mcmc;
        mcmc.seed = mix_seed(cell_seed, 0x3cacULL);
        PosteriorSummary summary;
        if (config.setting == Setting::Density) {
          const std::vector<double> samples =
              sample_from_density(p0, static_cast<int>(n), mix_seed(cell_seed, 0xda7aULL));
          summary = density_posterior(prior, samples, mcmc, grid, &truth);
        } else {
          ClassificationData data;
          data.covariates.resize(static_cast<std::size_t>(n));
          data.labels.resize(static_cast<std::size_t>(n));
          Rng rng(mix_seed(cell_seed, 0xda7aULL));
          for (long i = 0; i < n; ++i) {
            const double x = rng.uniform();
            data.covariates[static_cast<std::size_t>(i)] = x;
            const double p1 = logistic(truth.value(x));
            data.labels[static_cast<std::size_t>(i)] = rng.uniform() < p1 ? 1 : 0;
          }
          summary = classification_posterior(prior, data, mcmc, grid, &truth);
        }
        CellResult cell;
        cell.n = n_real;
        cell.replication = rep;
        cell.c_used = c_n;
        cell.radius = summary.contraction_radius;
        cell.median = summary.distance_median;
        cell.acceptance_rate = summary.acceptance_rate;
        cell.seed = cell_seed;
        cell_slot(rep) = cell;
      });
    }

    std::vector<double> radii(static_cast<std::size_t>(config.replications));
    for (int rep = 0; rep < config.replications; ++rep)
      radii[static_cast<std::size_t>(rep)] = cell_slot(rep).radius;
    double mean = 0.0;
    for (double r : radii) mean += r;
    mean_radii[ni] = mean / static_cast<double>(config.replications);
    median_radii[ni] = quantile(radii, 0.5);
  }

  result.fit = rate_fit(config.n_values, mean_radii, config.alpha);
  result.fit.median_radii = median_radii;
  return result;
}

}  // namespace rgp
