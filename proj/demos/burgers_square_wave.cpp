// Square-wave initial datum under fractional Burgers with SVV, printed as
// a handful of diagnostics per snapshot. Usage: demo_burgers_square_wave [lambda] [N]

#include <cstdio>
#include <cstdlib>

#include "svv/integrator.hpp"

int main(int argc, char** argv) {
  const double lambda = argc > 1 ? std::atof(argv[1]) : 0.6;
  const int n = argc > 2 ? std::atoi(argv[2]) : 128;

  svv::SolverSetup setup(svv::build_symbol_table({svv::FractionalLaplacian{lambda, 1}}, n),
                         svv::svv_params(n));
  setup.t_end = 0.5;
  setup.cfl = 0.5;
  setup.snapshot_times = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};

  const auto traj = svv::solve(svv::square_wave_coefficients(n), setup);
  const auto& r = traj.record;
  std::printf("lambda=%g N=%d eps_N=%g m_N=%d dt=%g steps=%ld\n", lambda, n, setup.svv.eps_n,
              setup.svv.m_n, traj.dt, traj.steps);
  std::printf("%6s %12s %12s %12s %12s %12s\n", "t", "l1", "linf", "bv", "energy", "trunc_err");
  for (std::size_t k = 0; k < r.size(); ++k)
    std::printf("%6.3f %12.6f %12.6f %12.6f %12.6f %12.3e\n", r.times[k], r.l1[k], r.linf[k],
                r.bv[k], r.energy[k], r.trunc_err[k]);
}
