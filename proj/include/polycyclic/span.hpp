#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polycyclic/linalg.hpp"

namespace polycyclic {

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// Base-q packing of short vectors (q^len must fit in 64 bits).
std::uint64_t pack(std::span<const Elem> v, unsigned q);
Vec unpack(std::uint64_t code, unsigned q, std::size_t len);

/// Calls `visit` on every vector of the row span, exactly once each.
/// Throws BudgetExceeded when the span has more than `budget` elements.
void for_each_in_span(const Matrix& rows, std::uint64_t budget, const std::function<void(const Vec&)>& visit);

/// Sorted packed codes of every vector in the row span.
std::vector<std::uint64_t> span_set(const Matrix& rows, std::uint64_t budget);

/// Every vector of F_q^len; throws BudgetExceeded when q^len > budget.
void for_each_vector(const Field& f, std::size_t len, std::uint64_t budget,
                     const std::function<void(const Vec&)>& visit);

/// Every v in F_q^{rows} together with v * m, the product kept up to date
/// one changed coordinate at a time.
void for_each_vector_times(const Matrix& m, std::uint64_t budget,
                           const std::function<void(const Vec& v, const Vec& vm)>& visit);

}  // namespace polycyclic
