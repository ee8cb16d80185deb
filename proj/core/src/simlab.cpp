#include "robplam/simlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "robplam/error.hpp"

namespace robplam {

namespace {

double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double normal(std::mt19937_64& rng, double mean = 0.0, double sd = 1.0) {
  return std::normal_distribution<double>(mean, sd)(rng);
}

int binomial(std::mt19937_64& rng, int trials, double prob) {
  int count = 0;
  for (int t = 0; t < trials; ++t) count += uniform01(rng) < prob ? 1 : 0;
  return count;
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::string to_string(Contamination c) {
  switch (c) {
    case Contamination::C0: return "C0";
    case Contamination::C1: return "C1";
    case Contamination::C2: return "C2";
    case Contamination::C3: return "C3";
  }
  return "C?";
}

Contamination parse_contamination(const std::string& s) {
  if (s == "C0" || s == "c0" || s == "0") return Contamination::C0;
  if (s == "C1" || s == "c1" || s == "1") return Contamination::C1;
  if (s == "C2" || s == "c2" || s == "2") return Contamination::C2;
  if (s == "C3" || s == "c3" || s == "3") return Contamination::C3;
  throw Error(ErrorCode::Usage, "unknown contamination scheme '" + s + "' (expected C0..C3)");
}

std::string to_string(Method m) { return m == Method::MM ? "MM" : "LS"; }

namespace truth {

double eta1(double x) { return 2.0 * std::sin(std::numbers::pi * x) - 4.0 / std::numbers::pi; }
double eta2(double x) { return std::exp(x) - (std::numbers::e - 1.0); }
double eta(int j, double x) { return j == 0 ? eta1(x) : eta2(x); }

}  // namespace truth

void SimulationSpec::validate() const {
  if (model < 1 || model > 6) throw Error(ErrorCode::Usage, "model must be between 1 and 6");
  if (n <= 0) throw Error(ErrorCode::Usage, "sample size must be positive");
  if (replications <= 0) throw Error(ErrorCode::Usage, "number of replications must be positive");
  if (grid_size <= 1) throw Error(ErrorCode::Usage, "ISE grid needs at least 2 points");
  if (curve_points <= 1) throw Error(ErrorCode::Usage, "curve export needs at least 2 points");
}

double copula_latent_correlation(double uniform_correlation) {
  // Pearson correlation of Phi(G1), Phi(G2) is (6/pi) asin(r/2).
  return 2.0 * std::sin(std::numbers::pi * uniform_correlation / 6.0);
}

SimSample generate(int model, int n, std::mt19937_64& rng) {
  if (model < 1 || model > 6) throw Error(ErrorCode::Usage, "model must be between 1 and 6");
  SimSample s;
  s.Z.resize(n, 2);
  s.X.resize(n, 2);
  s.y.resize(n);
  s.signal.resize(n);
  const double latent = copula_latent_correlation(0.7);
  for (int i = 0; i < n; ++i) {
    double x1 = 0.0, x2 = 0.0, z1 = 0.0, z2 = 0.0;
    switch (model) {
      case 1:
        z1 = uniform01(rng);
        z2 = uniform01(rng);
        x1 = uniform01(rng);
        x2 = uniform01(rng);
        break;
      case 2: {
        const double g1 = normal(rng);
        const double g2 = latent * g1 + std::sqrt(1.0 - latent * latent) * normal(rng);
        x1 = std_normal_cdf(g1);
        z1 = std_normal_cdf(g2);
        z2 = uniform01(rng);
        x2 = uniform01(rng);
        break;
      }
      case 3:
        x1 = uniform01(rng);
        x2 = uniform01(rng);
        z1 = x1 + x2 * x2 + normal(rng, 0.0, 0.1);
        z2 = (std::exp(x1) - 1.0) / 2.0 + normal(rng, 0.0, 0.1);
        break;
      case 4:
        x1 = uniform01(rng);
        x2 = uniform01(rng);
        z1 = binomial(rng, 3, 0.5) / 3.0;
        z2 = binomial(rng, 5, 0.2) / 5.0;
        break;
      case 5: {
        x1 = uniform01(rng);
        x2 = uniform01(rng);
        // Multinomial(10; 1/4, 1/2, 1/4) through its conditional binomials.
        const int w1 = binomial(rng, 10, 0.25);
        const int w2 = binomial(rng, 10 - w1, 0.5 / 0.75);
        z1 = w1 / 10.0;
        z2 = w2 / 10.0;
        break;
      }
      case 6: {
        x1 = uniform01(rng);
        x2 = uniform01(rng);
        z1 = binomial(rng, 5, 0.25) / 5.0;
        const double indicator = (x1 > 0.0 && x1 < 2.0 / 3.0) ? 1.0 : 0.0;
        z2 = 0.5 * (indicator + binomial(rng, 1, 0.5));
        break;
      }
      default: break;
    }
    s.X(i, 0) = x1;
    s.X(i, 1) = x2;
    s.Z(i, 0) = z1;
    s.Z(i, 1) = z2;
    s.signal[i] = truth::kMu + truth::kBeta[0] * z1 + truth::kBeta[1] * z2 + truth::eta1(x1) +
                  truth::eta2(x2);
  }
  for (int i = 0; i < n; ++i) s.y[i] = s.signal[i] + truth::kSigma * normal(rng);
  return s;
}

SimSample contaminate(const SimSample& sample, Contamination scheme, std::mt19937_64& rng) {
  SimSample out = sample;
  const Eigen::Index n = sample.y.size();
  switch (scheme) {
    case Contamination::C0:
      break;
    case Contamination::C1:
      for (Eigen::Index i = 0; i < n; ++i) {
        const bool wide = uniform01(rng) < 0.1;
        const double eps = wide ? normal(rng, 0.0, 10.0) : normal(rng);
        out.y[i] = sample.signal[i] + truth::kSigma * eps;
        if (wide) out.contaminated.push_back(static_cast<int>(i));
      }
      break;
    case Contamination::C2:
      for (Eigen::Index i = 0; i < n; ++i) {
        const bool shifted = uniform01(rng) < 0.15;
        const double u = shifted ? normal(rng, 15.0, 0.1) : normal(rng, 0.0, truth::kSigma);
        out.y[i] = sample.signal[i] + u;
        if (shifted) out.contaminated.push_back(static_cast<int>(i));
      }
      break;
    case Contamination::C3: {
      if (sample.X.cols() != 2 || sample.Z.cols() != 2) {
        throw Error(ErrorCode::Usage, "C3 needs two linear and two smooth covariates");
      }
      std::array<int, 9> first{};
      first.fill(-1);
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto cell = [](double x) { return std::clamp(static_cast<int>(std::floor(3.0 * x)), 0, 2); };
        const int q = cell(sample.X(i, 0)) + 3 * cell(sample.X(i, 1));
        if (first[static_cast<std::size_t>(q)] < 0) first[static_cast<std::size_t>(q)] = static_cast<int>(i);
      }
      for (int idx : first) {
        if (idx < 0) continue;
        out.Z(idx, 0) = 20.0;
        out.Z(idx, 1) = 20.0;
        out.contaminated.push_back(idx);
      }
      std::sort(out.contaminated.begin(), out.contaminated.end());
      break;
    }
  }
  return out;
}

IseResult ise(std::span<const double> estimate, std::span<const double> truth_curve, int trim_q) {
  if (estimate.size() != truth_curve.size() || estimate.empty()) {
    throw Error(ErrorCode::Data, "ISE needs two curves on the same non-empty grid");
  }
  const int M = static_cast<int>(estimate.size());
  if (trim_q < 0 || 2 * trim_q >= M) throw Error(ErrorCode::Usage, "ISE trimming removes the whole grid");
  IseResult out;
  double trimmed = 0.0;
  for (int s = 0; s < M; ++s) {
    const double d = estimate[static_cast<std::size_t>(s)] - truth_curve[static_cast<std::size_t>(s)];
    out.ise += d * d;
    if (s >= trim_q && s < M - trim_q) trimmed += d * d;
  }
  out.ise /= M;
  out.ise_trim = trimmed / (M - 2 * trim_q);
  return out;
}

IseResult ise(const std::function<double(double)>& estimate,
              const std::function<double(double)>& truth_curve, int grid_size, int trim_q) {
  if (grid_size < 2) throw Error(ErrorCode::Usage, "ISE grid needs at least 2 points");
  std::vector<double> est(static_cast<std::size_t>(grid_size));
  std::vector<double> tru(static_cast<std::size_t>(grid_size));
  for (int s = 0; s < grid_size; ++s) {
    const double x = static_cast<double>(s) / (grid_size - 1);
    est[static_cast<std::size_t>(s)] = estimate(x);
    tru[static_cast<std::size_t>(s)] = truth_curve(x);
  }
  return ise(est, tru, trim_q);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

ReplicationRecord run_replication(const SimulationSpec& spec, Method method, int replication,
                                  const SimSample& sample) {
  ReplicationRecord rec;
  rec.replication = replication;
  rec.method = method;
  PlamSpec ps;
  ps.method = method;
  ps.k_grid = spec.k_grid;
  ps.knots = KnotMode::Uniform;
  ps.centering = Centering::Integral;
  ps.solver = spec.solver;
  ps.solver.seed = child_seed(spec.solver.seed ^ spec.seed, static_cast<std::uint64_t>(replication));
  try {
    const PlamFit f = fit(sample.Z, sample.X, sample.y, ps);
    rec.selected_k = f.selected_k.front();
    rec.mu_hat = f.mu_hat;
    rec.beta_hat = {f.beta_hat[0], f.beta_hat[1]};
    for (int j = 0; j < 2; ++j) {
      const auto r = ise([&](double x) { return f.eta(j, x); },
                         [j](double x) { return truth::eta(j, x); }, spec.grid_size, spec.trim_q());
      rec.ise[static_cast<std::size_t>(j)] = r.ise;
      rec.ise_trim[static_cast<std::size_t>(j)] = r.ise_trim;
      auto& curve = rec.curves[static_cast<std::size_t>(j)];
      curve.resize(static_cast<std::size_t>(spec.curve_points));
      for (int s = 0; s < spec.curve_points; ++s) {
        curve[static_cast<std::size_t>(s)] = f.eta(j, 0.05 + 0.9 * s / (spec.curve_points - 1));
      }
    }
    rec.ok = true;
  } catch (const Error& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

double upper_trimmed_mean(std::vector<double> values, double frac) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto drop = static_cast<std::size_t>(std::ceil(frac * static_cast<double>(values.size())));
  const std::size_t keep = values.size() > drop ? values.size() - drop : values.size();
  return std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(keep), 0.0) /
         static_cast<double>(keep);
}

SummaryRow summarize(Method method, std::span<const ReplicationRecord> records) {
  SummaryRow row;
  row.method = method;
  std::array<std::vector<double>, 2> ise_v, ise_trim_v, beta_v;
  std::vector<double> mu_v;
  std::map<int, int> k_counts;
  for (const auto& r : records) {
    if (r.method != method) continue;
    if (!r.ok) {
      ++row.n_failed;
      continue;
    }
    ++row.n_ok;
    for (std::size_t j = 0; j < 2; ++j) {
      ise_v[j].push_back(r.ise[j]);
      ise_trim_v[j].push_back(r.ise_trim[j]);
      beta_v[j].push_back(r.beta_hat[j]);
    }
    mu_v.push_back(r.mu_hat);
    ++k_counts[r.selected_k];
  }
  for (std::size_t j = 0; j < 2; ++j) {
    row.medise[j] = median_of(ise_v[j]);
    row.mise5[j] = upper_trimmed_mean(ise_v[j]);
    row.medise_trim[j] = median_of(ise_trim_v[j]);
    row.mise_trim[j] = upper_trimmed_mean(ise_trim_v[j]);
    const double m = mean_of(beta_v[j]);
    row.bias[j] = m - truth::kBeta[j];
    row.sd[j] = sd_of(beta_v[j]);
    double mse = 0.0;
    for (double b : beta_v[j]) mse += (b - truth::kBeta[j]) * (b - truth::kBeta[j]);
    row.mse[j] = beta_v[j].empty() ? 0.0 : mse / static_cast<double>(beta_v[j].size());
  }
  row.mu_mean = mean_of(mu_v);
  row.mu_sd = sd_of(mu_v);
  for (const auto& [k, c] : k_counts) row.k_proportions[k] = static_cast<double>(c) / row.n_ok;
  return row;
}

ExperimentResult run_experiment(const SimulationSpec& spec, const std::vector<Method>& methods) {
  spec.validate();
  if (methods.empty()) throw Error(ErrorCode::Usage, "no estimation method requested");
  ExperimentResult out;
  out.spec = spec;
  out.records.resize(static_cast<std::size_t>(spec.replications) * methods.size());
  for (int s = 0; s < spec.curve_points; ++s) {
    out.curve_grid.push_back(0.05 + 0.9 * s / (spec.curve_points - 1));
  }

  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int rep = next++; rep < spec.replications; rep = next++) {
      std::mt19937_64 rng(child_seed(spec.seed, static_cast<std::uint64_t>(rep)));
      const SimSample clean = generate(spec.model, spec.n, rng);
      const SimSample sample = contaminate(clean, spec.contamination, rng);
      for (std::size_t m = 0; m < methods.size(); ++m) {
        out.records[static_cast<std::size_t>(rep) * methods.size() + m] =
            run_replication(spec, methods[m], rep, sample);
      }
    }
  };
  unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.replications));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (Method m : methods) out.summaries.push_back(summarize(m, out.records));
  return out;
}

}  // namespace robplam
