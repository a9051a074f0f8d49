// ensembles.hpp: GUE and Haar sampling, the averaged GUE level density, and
// Monte-Carlo estimators for the Haar moment identities.
//
// GUE convention: weight exp(-tr X^2), i.e. diagonal entries ~ N(0, 1/2) and
// the real and imaginary parts of each off-diagonal entry ~ N(0, 1/4). The
// large-d spectrum is the semicircle on [-sqrt(2d), sqrt(2d)].

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dephase/hermitian.hpp"
#include "dephase/parallel.hpp"
#include "dephase/rng.hpp"

namespace dephase {

struct GueSpec {
    std::size_t dim = 1;
};

HermitianOperator sample_gue(const GueSpec& spec, RngStream& rng);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
// of R's diagonal moved into Q.
ComplexMatrix sample_haar_unitary(std::size_t d, RngStream& rng);

// Entrywise mean and standard error of a random complex matrix.
struct MatrixEstimate {
    ComplexMatrix mean;
    Eigen::MatrixXd std_error_real;
    Eigen::MatrixXd std_error_imag;
    std::uint64_t n_samples = 0;
    std::uint64_t master_seed = 0;

    // Every real and imaginary part within k standard errors of `target`
    // (plus an absolute floor for entries whose sample variance is zero).
    [[nodiscard]] bool within(const ComplexMatrix& target, double k,
                              double abs_floor = 1e-12) const;

    // Largest |mean - target| / stderr over all real/imaginary parts.
    [[nodiscard]] double max_z_score(const ComplexMatrix& target,
                                     double abs_floor = 1e-12) const;
};

// Sample mean of U X U^H over n Haar unitaries (stream (seed, i) for sample i).
MatrixEstimate haar_second_moment(const HermitianOperator& x, std::size_t n_samples,
                                  std::uint64_t seed);

// Sample mean of U X1 U^H X2 U X3 U^H.
MatrixEstimate haar_fourth_moment(const HermitianOperator& x1, const HermitianOperator& x2,
                                  const HermitianOperator& x3, std::size_t n_samples,
                                  std::uint64_t seed);

// tr(X) 1/d.
ComplexMatrix haar_second_moment_exact(const HermitianOperator& x);

// [d tr(X1X3) - tr X1 tr X3]/(d(d^2-1)) tr(X2) 1 + [d trX1 trX3 - tr(X1X3)]/(d(d^2-1)) X2.
// Throws DomainError for d = 1.
ComplexMatrix haar_fourth_moment_exact(const HermitianOperator& x1,
                                       const HermitianOperator& x2,
                                       const HermitianOperator& x3);

// Averaged eigenvalue density sum_{l<d} phi_l(v)^2 (integrates to d).
double gue_level_density(double v, std::size_t d);

// Monte-Carlo estimates of <(tr V)^2> and <tr V^2> over the GUE.
struct GueTraceMoments {
    EnsembleEstimate trace_squared;     // <(tr V)^2>
    EnsembleEstimate trace_of_square;   // <tr(V^2)>
};

GueTraceMoments gue_trace_moments(std::size_t d, std::size_t n_samples,
                                  std::uint64_t seed);

// All eigenvalues of n independent GUE samples, concatenated in sample order.
std::vector<double> pooled_gue_eigenvalues(std::size_t d, std::size_t n_samples,
                                           std::uint64_t seed);

}  // namespace dephase
