#pragma once

#include <stdexcept>
#include <string>

namespace circ {

// Enumeration or sweep would exceed the configured work budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A count was requested outside the d < p/2 window where lattice-point and
// field-vector counts coincide.
struct RegimeViolation : std::domain_error {
    explicit RegimeViolation(const std::string& what) : std::domain_error(what) {}
};

// p is not primitive mod q, so the two-code structure does not hold.
struct NotTwoCodeRegime : std::domain_error {
    explicit NotTwoCodeRegime(const std::string& what) : std::domain_error(what) {}
};

// The prime window [4 ln n, 4 ln^2 n] contains no prime (small q).
struct NoPrimeInWindow : std::runtime_error {
    explicit NoPrimeInWindow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circ
