#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polycyclic/gray.hpp"
#include "polycyclic/lincode.hpp"
#include "polycyclic/polycode.hpp"

namespace polycyclic {

/// [[N, K, D]]_q. When `exact` is false D is only a lower bound.
struct QuantumParams {
    std::size_t N = 0;
    std::size_t K = 0;
    std::size_t D = 0;
    bool exact = false;
    /// False when D comes from a partial distance search.
    bool bound_certified = true;
    /// M M^T = lambda I, for the polycyclic pipeline.
    std::optional<Elem> lambda;

    std::string to_string() const;
};

/// CSS code from C2^perp <= C1. D is the minimum weight over
/// (C1 \ C2^perp) u (C2 \ C1^perp) when q^{k1} + q^{k2} codewords fit the
/// budget; otherwise min(d(C1), d(C2)) flagged as a bound. Throws NotNested.
QuantumParams css(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget = kDefaultDistanceBudget);

/// [[nl, nl - 2 sum deg g^{(i)}, >= d(psi(C))]]. Requires C to contain its
/// annihilator dual and M M^T = lambda I. The Euclidean nesting
/// psi(C)^perp <= psi(C) is checked directly (NotNested on failure).
QuantumParams quantum_from_polycyclic(const PolycyclicCode& c, const GraySpec& g,
                                      std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace polycyclic
