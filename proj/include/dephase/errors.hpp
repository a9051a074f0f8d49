// errors.hpp: exception types shared by every module.

#pragma once

#include <stdexcept>
#include <string>

namespace dephase {

// A caller broke a documented precondition (non-Hermitian input, dimension
// mismatch, step size outside the stability window, ...).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a formula (x <= 0 for a
// Bessel ratio, d = 1 for the fourth Haar moment, k > n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An algorithm failed to deliver its accuracy contract.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dephase
