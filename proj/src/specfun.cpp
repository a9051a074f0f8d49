// specfun.cpp

#include "dephase/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

constexpr double kRescaleAt = 1e150;
const double kLogRescale = std::log(kRescaleAt);

constexpr double kAsymptoticFrom = 20.0;

// Coefficients b_k of 1 - g(x) ~ sum_k b_k x^-k, from the Riccati equation
// g' = 1 - 3g/x - g^2: b_1 = 3/2, b_m = [(m-4) b_{m-1} + sum_{i+j=m} b_i b_j]/2.
const std::vector<double>& ratio_series() {
    static const std::vector<double> b = [] {
        constexpr int kTerms = 120;
        std::vector<double> c(kTerms + 1, 0.0);
        c[1] = 1.5;
        for (int m = 2; m <= kTerms; ++m) {
            double s = 0.0;
            for (int i = 1; i < m; ++i) s += c[i] * c[m - i];
            c[m] = ((m - 4) * c[m - 1] + s) / 2.0;
        }
        return c;
    }();
    return b;
}

// sum_k coeff(k) x^-k truncated at the smallest term.
template <class Coeff>
double asymptotic_sum(double x, int first, Coeff&& coeff) {
    const auto& b = ratio_series();
    double total = 0.0;
    double prev = INFINITY;
    double xpow = std::pow(x, -first);
    for (int k = first; k < static_cast<int>(b.size()); ++k, xpow /= x) {
        const double t = coeff(k) * xpow;
        if (std::abs(t) > std::abs(prev)) break;
        total += t;
        prev = t;
        if (std::abs(t) < 1e-18 * std::abs(total)) break;
    }
    return total;
}

double ratio_continued_fraction(double x) {
    // I2/I1 = 1/(4/x + 1/(6/x + 1/(8/x + ...)))
    constexpr double tiny = 1e-300;
    double f = tiny, c = f, dd = 0.0;
    for (int j = 1; j < 100000; ++j) {
        const double bj = 2.0 * (j + 1) / x;
        dd = bj + dd;
        if (dd == 0.0) dd = tiny;
        c = bj + 1.0 / c;
        if (c == 0.0) c = tiny;
        dd = 1.0 / dd;
        const double delta = c * dd;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) return f;
    }
    throw NumericalFailure("bessel_i_ratio_g: continued fraction did not converge");
}

// Upward Laguerre recurrence with mantissa renormalization.
LogScaled laguerre_scaled(int n, int alpha, double x) {
    if (n < 0) return {0.0, 0};
    double prev = 1.0;
    if (n == 0) return {0.0, 1};
    double cur = 1.0 + alpha - x;
    double log_scale = 0.0;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAt) {
            cur /= kRescaleAt;
            prev /= kRescaleAt;
            log_scale += kLogRescale;
        }
    }
    if (cur == 0.0) return {-INFINITY, 0};
    return {log_scale + std::log(std::abs(cur)), cur > 0 ? 1 : -1};
}

// Walks phi_0..phi_{n-1} at x, calling visit(l, mantissa, log_scale) where
// phi_l = mantissa * exp(log_scale). `on_rescale(factor)` fires when the
// mantissas are divided by `factor`.
template <class Visit, class Rescale>
void walk_hermite_phi(int n, double x, Visit&& visit, Rescale&& on_rescale) {
    double log_scale = -0.5 * x * x - 0.25 * std::log(std::numbers::pi);
    double prev = 0.0;
    double cur = 1.0;
    for (int l = 0; l < n; ++l) {
        visit(l, cur, log_scale);
        if (l + 1 == n) break;
        const double next = std::sqrt(2.0 / (l + 1.0)) * x * cur -
                            std::sqrt(static_cast<double>(l) / (l + 1.0)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAt) {
            cur /= kRescaleAt;
            prev /= kRescaleAt;
            log_scale += kLogRescale;
            on_rescale(kRescaleAt);
        }
    }
}

double phi_times_scale(double mantissa, double log_scale) {
    if (mantissa == 0.0) return 0.0;
    return std::copysign(std::exp(std::log(std::abs(mantissa)) + log_scale), mantissa);
}

}  // namespace

double LogScaled::value() const noexcept {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

double hermite_h(int l, double x) {
    if (l < 0) throw DomainError("hermite_h: negative degree");
    double prev = 1.0;
    if (l == 0) return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < l; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_phi(int l, double x) {
    if (l < 0) throw DomainError("hermite_phi: negative degree");
    double result = 0.0;
    walk_hermite_phi(
        l + 1, x,
        [&](int k, double m, double s) {
            if (k == l) result = phi_times_scale(m, s);
        },
        [](double) {});
    return result;
}

double hermite_phi_square_sum(int n, double x) {
    if (n < 0) throw DomainError("hermite_phi_square_sum: negative count");
    double sum = 0.0;
    double scale = 0.0;
    walk_hermite_phi(
        n, x,
        [&](int, double m, double s) {
            sum += m * m;
            scale = s;
        },
        [&](double factor) { sum /= factor * factor; });
    if (sum == 0.0) return 0.0;
    return std::exp(std::log(sum) + 2.0 * scale);
}

double laguerre_l(int n, int alpha, double x) {
    if (alpha < 0) throw DomainError("laguerre_l: negative alpha");
    return laguerre_scaled(n, alpha, x).value();
}

LogScaled laguerre_l_log(int n, int alpha, double x) {
    if (alpha < 0) throw DomainError("laguerre_l_log: negative alpha");
    return laguerre_scaled(n, alpha, x);
}

double bessel_i_ratio_g(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "bessel_i_ratio_g: argument must be positive, got " << x;
        throw DomainError(os.str());
    }
    if (x < kAsymptoticFrom) return ratio_continued_fraction(x);
    const auto& b = ratio_series();
    return 1.0 - asymptotic_sum(x, 1, [&](int k) { return b[k]; });
}

double bessel_i_ratio_g_prime(double x) {
    if (x < kAsymptoticFrom) {
        const double g = bessel_i_ratio_g(x);
        return 1.0 - 3.0 * g / x - g * g;
    }
    // g' = -(1-g)' = sum_k k b_k x^-(k+1)
    const auto& b = ratio_series();
    return asymptotic_sum(x, 1, [&](int k) { return k * b[k]; }) / x;
}

double log_bessel_i1(double x) {
    if (!(x > 0.0)) throw DomainError("log_bessel_i1: argument must be positive");
    if (x < kAsymptoticFrom) {
        // sum_k (x/2)^{2k+1} / (k! (k+1)!)
        const double h = 0.5 * x;
        double term = h;
        double sum = term;
        for (int k = 1; k < 500; ++k) {
            term *= h * h / (k * (k + 1.0));
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return std::log(sum);
    }
    // I1(x) ~ e^x / sqrt(2 pi x) sum_k t_k, t_k = t_{k-1} (-(4 - (2k-1)^2)) / (8 k x)
    double term = 1.0;
    double sum = 1.0;
    double prev = INFINITY;
    for (int k = 1; k < 200; ++k) {
        term *= -(4.0 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        if (std::abs(term) > std::abs(prev)) break;
        sum += term;
        prev = term;
        if (std::abs(term) < 1e-18) break;
    }
    return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

GaussHermiteRule gauss_hermite(std::size_t n) {
    if (n == 0) throw DomainError("gauss_hermite: need at least one node");
    const auto m = static_cast<Eigen::Index>(n);
    // Golub-Welsch: Jacobi matrix of the orthonormal Hermite polynomials.
    RealVector diag = RealVector::Zero(m);
    RealVector sub(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index i = 0; i + 1 < m; ++i) sub(i) = std::sqrt((i + 1) / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("gauss_hermite: tridiagonal eigensolver failed");
    }

    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int deg = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = es.eigenvalues()(static_cast<Eigen::Index>(i));
        // Newton polish on phi_n; phi_n' = sqrt(2n) phi_{n-1} - x phi_n.
        for (int it = 0; it < 3; ++it) {
            double pn = 0.0, pn1 = 0.0;
            walk_hermite_phi(
                deg + 1, x,
                [&](int l, double mant, double) {
                    if (l == deg - 1) pn1 = mant;
                    if (l == deg) pn = mant;
                },
                [&](double f) { pn1 /= f; });
            const double deriv = std::sqrt(2.0 * deg) * pn1 - x * pn;
            if (deriv == 0.0) break;
            const double step = pn / deriv;
            x -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        rule.nodes[i] = x;
        // Christoffel weight 1/sum_{l<n} p_l(x)^2 with p_l = e^{x^2/2} phi_l,
        // i.e. e^{-x^2} / sum phi_l^2, assembled in log form.
        double sum = 0.0, scale = 0.0;
        walk_hermite_phi(
            deg, x,
            [&](int, double mant, double s) {
                sum += mant * mant;
                scale = s;
            },
            [&](double f) { sum /= f * f; });
        rule.weights[i] = std::exp(-x * x - std::log(sum) - 2.0 * scale);
    }
    return rule;
}

double PartitionValue::value() const noexcept { return std::exp(log_value); }

PartitionValue z_gue_exact(double beta, std::size_t d) {
    if (d == 0) throw DomainError("z_gue_exact: d must be positive");
    const double x = -0.5 * beta * beta;
    const auto lag = laguerre_scaled(static_cast<int>(d) - 1, 1, x);
    return PartitionValue{0.25 * beta * beta + lag.log_abs, std::nullopt};
}

PartitionValue z_gue_semicircle(double beta, double d) {
    if (!(d >= 1.0)) throw DomainError("z_gue_semicircle: d must be >= 1");
    if (beta < 0.0) throw DomainError("z_gue_semicircle: beta must be >= 0");
    if (beta == 0.0) return PartitionValue{std::log(d), std::nullopt};
    const double a = std::sqrt(2.0 * d);
    return PartitionValue{std::log(a) + log_bessel_i1(a * beta) - std::log(beta),
                          std::nullopt};
}

double rate_tfd_gue_exact(double beta, std::size_t d, double gamma) {
    if (d == 0) throw DomainError("rate_tfd_gue_exact: d must be positive");
    if (!(gamma > 0.0)) throw DomainError("rate_tfd_gue_exact: gamma must be positive");
    const int n = static_cast<int>(d);
    const double x = -0.5 * beta * beta;
    const auto base = laguerre_scaled(n - 1, 1, x);
    const auto l2 = laguerre_scaled(n - 2, 2, x);
    const auto l3 = laguerre_scaled(n - 3, 3, x);
    if (base.sign <= 0 || !std::isfinite(base.log_abs)) {
        throw NumericalFailure("rate_tfd_gue_exact: Laguerre normalization broke down");
    }
    const double f12 = l2.sign == 0 ? 0.0 : l2.sign * std::exp(l2.log_abs - base.log_abs);
    const double f13 = l3.sign == 0 ? 0.0 : l3.sign * std::exp(l3.log_abs - base.log_abs);
    const double b2 = beta * beta;
    const double rate = 2.0 * gamma * (1.0 + 2.0 * f12 - 2.0 * b2 * f12 * f12 + 2.0 * b2 * f13);
    if (!std::isfinite(rate)) {
        throw NumericalFailure("rate_tfd_gue_exact: non-finite result");
    }
    return rate;
}

double rate_tfd_gue_semicircle(double beta, double d, double gamma) {
    if (!(d >= 1.0)) throw DomainError("rate_tfd_gue_semicircle: d must be >= 1");
    if (beta < 0.0) throw DomainError("rate_tfd_gue_semicircle: beta must be >= 0");
    if (beta == 0.0) return 2.0 * gamma * d;
    const double x = std::sqrt(2.0 * d) * beta;
    return 8.0 * gamma * d * bessel_i_ratio_g_prime(x);
}

double tfd_crossover_beta(double d) { return std::sqrt(3.0 / d); }

}  // namespace dephase
