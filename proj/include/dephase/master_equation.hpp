// master_equation.hpp: dephasing Lindbladian with Hermitian jump operators,
//   drho/dt = -i[H0, rho] - 1/2 sum_mu gamma_mu [V_mu, [V_mu, rho]],
// integrated with fixed-step classical RK4.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dephase/hermitian.hpp"
#include "dephase/rates.hpp"

namespace dephase {

// Right-hand side of the master equation at rho.
ComplexMatrix lindblad_generator(const HermitianOperator& h0,
                                 std::span<const LindbladChannel> channels,
                                 const ComplexMatrix& rho);

// ||H0|| + sum gamma ||V||^2, the scale entering the step-size rule.
double generator_scale(const HermitianOperator& h0, std::span<const LindbladChannel> channels);

inline constexpr double kMaxRk4StepScale = 0.05;

struct MasterEquationPath {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;  // density matrices at `times`
};

// Records the state at step 0 and every `record_every` steps after it (and
// always at the final step). Refuses with ContractViolation when
// dt * generator_scale exceeds kMaxRk4StepScale.
MasterEquationPath master_equation_rk4(const HermitianOperator& h0,
                                       std::span<const LindbladChannel> channels,
                                       const DensityState& rho0, double dt, std::size_t steps,
                                       std::size_t record_every = 1);

// Final state only; the step count is chosen so each step stays well inside
// the stability window.
ComplexMatrix evolve_master(const HermitianOperator& h0,
                            std::span<const LindbladChannel> channels,
                            const DensityState& rho0, double t);

}  // namespace dephase
