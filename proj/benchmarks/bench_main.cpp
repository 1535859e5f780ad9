#include <algorithm>
#include <optional>

#include <benchmark/benchmark.h>

#include "jmnl/errors.hpp"
#include "jmnl/scattering.hpp"

namespace {

template <class T>
void BM_LambdaMatrix(benchmark::State& state) {
  jmnl::ModelConfig c = jmnl::ModelConfig::published(1.0);
  c.N = static_cast<int>(state.range(0));
  c.K = std::min(8, c.N);
  try {
    for (auto _ : state) benchmark::DoNotOptimize(jmnl::lambda_matrix<T>(c).min_eigenvalue());
  } catch (const jmnl::InvariantViolation& e) {
    state.SkipWithError(e.what());
  }
}

template <class T>
void BM_SMatrix(benchmark::State& state) {
  jmnl::ModelConfig c = jmnl::ModelConfig::published(1.0);
  c.N = static_cast<int>(state.range(0));
  c.K = std::min(8, c.N);
  std::optional<jmnl::NonlinearModel<T>> built;
  try {
    built.emplace(c);
  } catch (const jmnl::InvariantViolation& e) {
    state.SkipWithError(e.what());
    return;
  }
  const auto& model = *built;
  double e = 0.5;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(jmnl::s_matrix(T(e), model).amplitude);
    } catch (const jmnl::NumericalError&) {
      // double loses the pole check on graded Lambda; the cost is what we time
    }
    e = e < 6 ? e + 0.01 : 0.5;
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_LambdaMatrix, double)->Arg(10)->Arg(20);
BENCHMARK_TEMPLATE(BM_LambdaMatrix, jmnl::Quad)->Arg(10)->Arg(20);
BENCHMARK_TEMPLATE(BM_SMatrix, double)->Arg(10)->Arg(20);
BENCHMARK_TEMPLATE(BM_SMatrix, jmnl::Quad)->Arg(10)->Arg(20);
BENCHMARK_MAIN();
