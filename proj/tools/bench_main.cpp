#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/semigroup.hpp"

namespace {

using hardylab::par::Mode;
using hardylab::par::ScopedMode;

struct Workload {
  std::string name;
  std::function<double()> run;  // returns a scalar so results can be compared
};

double time_best(const std::function<double()>& run, int repeat,
                 double* result) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    *result = run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (secs < best) best = secs;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardylab benchmark: serial reference vs OpenMP kernels"};
  int repeat = 3;
  app.add_option("--repeat", repeat, "timing repetitions (best-of)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Workload> workloads;

  workloads.push_back({"hardy_norm h_{-1} p=2", [] {
                         return hardylab::hardy::hardy_norm(
                                    hardylab::hardy::h_lambda({-1.0, 0.0}),
                                    2.0)
                             .value;
                       }});

  {
    auto fam = hardylab::semigroup::family_lookup("example2", {});
    auto grid = hardylab::semigroup::default_grid(40);
    std::vector<std::pair<double, double>> pairs;
    for (double t : {0.1, 0.5, 1.0})
      for (double s : {0.1, 0.5, 1.0}) pairs.emplace_back(t, s);
    workloads.push_back({"law residual example2, 1600 pts", [=] {
                           return hardylab::semigroup::semigroup_law_residual(
                               fam, grid, pairs);
                         }});
  }

  {
    auto fam = hardylab::semigroup::family_lookup("sqrt_parabolic", {});
    auto info = hardylab::semigroup::generator(fam);
    auto model = hardylab::semigroup::model_function(info);
    auto grid = hardylab::semigroup::default_grid(16);
    workloads.push_back(
        {"model residual sqrt_parabolic, 256 pts", [=] {
           return hardylab::semigroup::model_equation_residual(
               fam, model, grid, {0.25, 1.0});
         }});
  }

  std::printf("openmp compiled: %s, max threads: %d, best of %d runs\n",
              hardylab::par::openmp_compiled() ? "yes" : "no",
              hardylab::par::max_threads(), repeat);
  std::printf("%-40s %12s %12s %9s %s\n", "workload", "serial [s]",
              "openmp [s]", "speedup", "identical");

  for (const auto& w : workloads) {
    double serial_result = 0.0, openmp_result = 0.0;
    double serial_s = 0.0, openmp_s = 0.0;
    {
      ScopedMode guard(Mode::Serial);
      serial_s = time_best(w.run, repeat, &serial_result);
    }
    {
      ScopedMode guard(Mode::OpenMP);
      openmp_s = time_best(w.run, repeat, &openmp_result);
    }
    std::printf("%-40s %12.4f %12.4f %8.2fx %s\n", w.name.c_str(), serial_s,
                openmp_s, serial_s / openmp_s,
                serial_result == openmp_result ? "yes" : "NO");
  }
  return 0;
}
