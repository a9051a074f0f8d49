// master_equation.cpp

#include "dephase/master_equation.hpp"

#include <cmath>
#include <sstream>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_dims(const HermitianOperator& h0, std::span<const LindbladChannel> channels,
                std::size_t d) {
    if (h0.dim() != d) throw ContractViolation("master equation: H0 dimension mismatch");
    for (const auto& c : channels) {
        if (c.v.dim() != d) throw ContractViolation("master equation: channel dimension mismatch");
    }
}

}  // namespace

ComplexMatrix lindblad_generator(const HermitianOperator& h0,
                                 std::span<const LindbladChannel> channels,
                                 const ComplexMatrix& rho) {
    const auto& h = h0.matrix();
    ComplexMatrix out = -kI * (h * rho - rho * h);
    for (const auto& c : channels) {
        if (c.gamma == 0.0) continue;
        const auto& v = c.v.matrix();
        const ComplexMatrix inner = v * rho - rho * v;
        out.noalias() -= (0.5 * c.gamma) * (v * inner - inner * v);
    }
    return out;
}

double generator_scale(const HermitianOperator& h0, std::span<const LindbladChannel> channels) {
    double s = spectral_norm(h0);
    for (const auto& c : channels) {
        const double n = spectral_norm(c.v);
        s += c.gamma * n * n;
    }
    return s;
}

MasterEquationPath master_equation_rk4(const HermitianOperator& h0,
                                       std::span<const LindbladChannel> channels,
                                       const DensityState& rho0, double dt, std::size_t steps,
                                       std::size_t record_every) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ContractViolation("master_equation_rk4: dt must be positive");
    }
    if (record_every == 0) throw ContractViolation("master_equation_rk4: record_every must be >= 1");
    check_dims(h0, channels, rho0.dim());
    const double scale = generator_scale(h0, channels);
    if (dt * scale > kMaxRk4StepScale) {
        std::ostringstream msg;
        msg << "master_equation_rk4: step too large (dt * scale = " << dt * scale << " > "
            << kMaxRk4StepScale << "); reduce dt below " << kMaxRk4StepScale / scale;
        throw ContractViolation(msg.str());
    }

    MasterEquationPath path;
    ComplexMatrix rho = rho0.matrix();
    path.times.push_back(0.0);
    path.states.push_back(rho);
    for (std::size_t s = 1; s <= steps; ++s) {
        const ComplexMatrix k1 = lindblad_generator(h0, channels, rho);
        const ComplexMatrix k2 = lindblad_generator(h0, channels, rho + (0.5 * dt) * k1);
        const ComplexMatrix k3 = lindblad_generator(h0, channels, rho + (0.5 * dt) * k2);
        const ComplexMatrix k4 = lindblad_generator(h0, channels, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        if (!rho.allFinite()) throw NumericalFailure("master_equation_rk4: state diverged");
        if (s % record_every == 0 || s == steps) {
            path.times.push_back(static_cast<double>(s) * dt);
            path.states.push_back(rho);
        }
    }
    return path;
}

ComplexMatrix evolve_master(const HermitianOperator& h0,
                            std::span<const LindbladChannel> channels,
                            const DensityState& rho0, double t) {
    if (!(t >= 0.0)) throw ContractViolation("evolve_master: t must be >= 0");
    if (t == 0.0) return rho0.matrix();
    const double scale = generator_scale(h0, channels);
    const double target = 0.4 * kMaxRk4StepScale;
    const auto steps = static_cast<std::size_t>(std::ceil(t * scale / target)) + 1;
    const double dt = t / static_cast<double>(steps);
    return master_equation_rk4(h0, channels, rho0, dt, steps, steps).states.back();
}

}  // namespace dephase
