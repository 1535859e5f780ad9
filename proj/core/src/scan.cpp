#include "jmnl/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

#include "jmnl/errors.hpp"
#include "jmnl/reference.hpp"

namespace jmnl {

namespace {

using Work = Quad;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

ModelConfig with_nu(const ModelConfig& base, double nu) {
  ModelConfig c = base;
  c.nu = nu;
  return c;
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::pole: return "pole";
    case RowStatus::degenerate: return "degenerate";
  }
  return "?";
}

int worker_count_from_env(int fallback) {
  const char* env = std::getenv("JMNL_THREADS");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096)
    throw ConfigError(0, std::string("JMNL_THREADS must be a positive integer, got '") + env + "'");
  return static_cast<int>(v);
}

std::vector<ScanRow> run_scan(const ScanRequest& req, int threads) {
  req.validate();
  const auto grid = req.energies();

  std::vector<NonlinearModel<Work>> models;
  models.reserve(req.nu_list.size());
  for (double nu : req.nu_list) models.emplace_back(with_nu(req.config, nu));

  const std::size_t per_nu = grid.size();
  const std::size_t total = per_nu * models.size();
  std::vector<ScanRow> rows(total);

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, workers);
  const int cap = worker_count_from_env(workers);
  workers = std::min<int>({workers, cap, static_cast<int>(total)});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= total) return;
      const std::size_t m = k / per_nu;
      const double e = grid[k % per_nu];
      ScanRow& row = rows[k];
      row.nu = req.nu_list[m];
      try {
        row.point = s_matrix(Work(e), models[m]);
      } catch (const PoleError&) {
        row.status = RowStatus::pole;
      } catch (const DegenerateEnergyError&) {
        row.status = RowStatus::degenerate;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
      if (row.status != RowStatus::ok) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.point = ScatterPoint{e, {nan, nan}, nan, nan};
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    if (a.nu != b.nu) return a.nu < b.nu;
    return a.point.energy < b.point.energy;
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "nu,E,re_S,im_S,delta,amplitude,status\n";
  for (const auto& r : rows) {
    out << fmt(r.nu) << ',' << fmt(r.point.energy) << ',' << fmt(r.point.S.real()) << ','
        << fmt(r.point.S.imag()) << ',' << fmt(r.point.delta) << ',' << fmt(r.point.amplitude) << ','
        << to_string(r.status) << '\n';
  }
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate(const ScanRequest& req) {
  using std::abs;
  ValidationReport report;
  req.validate();
  const auto grid = req.energies();
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 100);

  for (double nu : req.nu_list) {
    const ModelConfig cfg = with_nu(req.config, nu);
    const std::string tag = " [nu=" + fmt_short(nu) + "]";

    // Lambda positivity and the Omega transform.
    try {
      const auto lambda = lambda_matrix<Work>(cfg);
      report.checks.push_back({"lambda-positive" + tag, true,
                               "min eigenvalue " + fmt_short(to_double(lambda.min_eigenvalue()))});
      try {
        const auto om = omega_transform(lambda);
        const Matrix<Work> id = om.omega * lambda.entries() * om.omega.transpose() -
                                Matrix<Work>::Identity(cfg.N, cfg.N);
        report.checks.push_back({"omega-identity" + tag, true, "max error " + fmt_short(to_double(max_abs(id)))});
      } catch (const std::exception& e) {
        report.checks.push_back({"omega-identity" + tag, false, e.what()});
      }
    } catch (const std::exception& e) {
      report.checks.push_back({"lambda-positive" + tag, false, e.what()});
      continue;
    }

    const NonlinearModel<Work> model(cfg);

    // Three Green's routes on up to 25 grid energies that clear the poles
    // by a relative margin of 1e-3.
    {
      int used = 0;
      double worst = 0;
      std::string err;
      const std::size_t step = std::max<std::size_t>(1, grid.size() / 25);
      for (std::size_t k = 0; k < grid.size() && used < 25 && err.empty(); k += step) {
        const Work e = grid[k];
        const Matrix<Work> h = model.hamiltonian(e);
        Eigen::SelfAdjointEigenSolver<Matrix<Work>> es(h, Eigen::EigenvaluesOnly);
        bool near = false;
        for (Eigen::Index m = 0; m < es.eigenvalues().size(); ++m) {
          const Work ev = es.eigenvalues()(m);
          if (abs(ev - e) <= Work(1e-3) * std::max(Work(abs(ev)), Work(abs(e)))) near = true;
        }
        if (near) continue;
        try {
          const Work direct = green_corner(model, e);
          const Pencil<Work> pencil(h, Matrix<Work>::Identity(cfg.N, cfg.N), "H(E), I");
          const Work spectral = green_corner_spectral(pencil, e);
          const Work det = green_corner_determinant(pencil, e);
          const Work scale = std::max({Work(abs(direct)), Work(abs(spectral)), Work(abs(det))});
          const Work diff = std::max({Work(abs(direct - spectral)), Work(abs(direct - det)), Work(abs(spectral - det))});
          worst = std::max(worst, to_double(Work(diff / scale)));
          ++used;
        } catch (const std::exception& ex) {
          err = ex.what();
        }
      }
      const bool ok = err.empty() && used > 0 && worst < 1e-8;
      report.checks.push_back({"green-three-routes" + tag, ok,
                               err.empty() ? std::to_string(used) + " energies, max rel diff " + fmt_short(worst) : err});
    }

    // Unitarity on a subsample of the scan grid.
    {
      double worst = 0;
      int poles = 0;
      std::string err;
      for (std::size_t k = 0; k < grid.size() && err.empty(); k += stride) {
        try {
          const auto p = s_matrix(Work(grid[k]), model);
          worst = std::max(worst, std::abs(std::abs(p.S) - 1.0));
        } catch (const PoleError&) {
          ++poles;
        } catch (const std::exception& ex) {
          err = ex.what();
        }
      }
      report.checks.push_back({"unitarity" + tag, err.empty() && worst < 1e-10,
                               err.empty() ? "max ||S|-1| " + fmt_short(worst) + ", " + std::to_string(poles) + " pole-flagged" : err});
    }
  }

  // Recursion residuals of the reference coefficients on the same subsample.
  {
    double worst = 0;
    std::string err;
    const int count = req.config.N + 1;
    for (std::size_t k = 0; k < grid.size() && err.empty(); k += stride) {
      try {
        const Work e = grid[k];
        for (const auto& cv : {sine_coefficients(e, req.config.basis, count),
                               cosine_coefficients(e, req.config.basis, count)}) {
          for (const auto& r : recursion_residuals(cv, req.config.basis)) worst = std::max(worst, to_double(Work(abs(r))));
        }
      } catch (const std::exception& ex) {
        err = ex.what();
      }
    }
    report.checks.push_back({"recursion-residuals", err.empty() && worst < 1e-8,
                             err.empty() ? "max residual " + fmt_short(worst) : err});
  }
  return report;
}

}  // namespace jmnl
