// specfun.hpp: Hermite functions, generalized Laguerre polynomials, the
// modified Bessel ratio I2/I1, Gauss-Hermite rules, and the closed-form GUE
// partition functions and thermofield-double dephasing rates built on them.
//
// Everything that can overflow is carried in log-scaled form: recurrences
// renormalize their mantissas and track the exponent separately.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dephase/hermitian.hpp"

namespace dephase {

// sign * exp(log_abs); sign is 0 for an exact zero.
struct LogScaled {
    double log_abs = 0.0;
    int sign = 1;

    [[nodiscard]] double value() const noexcept;
};

// Physicists' Hermite polynomial H_l(x) by the three-term recurrence.
// Overflows for large l and |x|; prefer hermite_phi.
double hermite_h(int l, double x);

// phi_l(x) = exp(-x^2/2) H_l(x) / sqrt(sqrt(pi) 2^l l!), evaluated with the
// normalized recurrence on phi itself (stable far beyond l = 2000).
double hermite_phi(int l, double x);

// sum_{l<n} phi_l(x)^2.
double hermite_phi_square_sum(int n, double x);

// Generalized Laguerre polynomial L_n^(alpha)(x); zero for n < 0.
double laguerre_l(int n, int alpha, double x);
LogScaled laguerre_l_log(int n, int alpha, double x);

// g(x) = I2(x) / I1(x) for x > 0. Continued fraction (modified Lentz) below
// x = 20, asymptotic expansion above. Throws DomainError for x <= 0.
double bessel_i_ratio_g(double x);

// g'(x) = 1 - 3 g(x)/x - g(x)^2, computed without cancellation at large x.
double bessel_i_ratio_g_prime(double x);

// ln I1(x) for x > 0.
double log_bessel_i1(double x);

// Gauss-Hermite rule for weight exp(-x^2), nodes ascending.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(std::size_t n);

struct PartitionValue {
    double log_value = 0.0;
    std::optional<Complex> complex_value;   // set for analytic continuations

    [[nodiscard]] double value() const noexcept;
};

// <Z(beta)>_GUE = exp(beta^2/4) L_{d-1}^(1)(-beta^2/2).
PartitionValue z_gue_exact(double beta, std::size_t d);

// Semicircle form sqrt(2d) I1(sqrt(2d) beta) / beta; d may be huge (2^50).
PartitionValue z_gue_semicircle(double beta, double d);

// 4 gamma d^2/d beta^2 ln<Z(beta)>_GUE from the finite-d Laguerre closed form,
// 2 gamma [1 + 2F - 2 beta^2 F^2 + 2 beta^2 G] with F = L_{d-2}^(2)/L_{d-1}^(1)
// and G = L_{d-3}^(3)/L_{d-1}^(1) at -beta^2/2.
double rate_tfd_gue_exact(double beta, std::size_t d, double gamma);

// 8 gamma d [1 - 3 g(x)/x - g(x)^2], x = sqrt(2d) beta; 2 gamma d at beta = 0.
double rate_tfd_gue_semicircle(double beta, double d, double gamma);

// sqrt(3/d): crossover between the 2 gamma d and 6 gamma / beta^2 regimes.
double tfd_crossover_beta(double d);

}  // namespace dephase
