#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycyclic/linalg.hpp"

namespace polycyclic {

/// Default distance budget in weighted operations (codewords times length).
inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 28;

struct Distance {
    std::size_t d = 0;
    /// False when d is only a certified lower bound.
    bool exact = false;
};

/// Linear [n, k] code over F_q with an RREF generator matrix.
class LinearCode {
public:
    const Field& field() const noexcept { return gen_.field(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    const Matrix& gen() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Exact distance, once computed.
    const std::optional<Distance>& cached_distance() const noexcept { return d_; }

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

private:
    friend LinearCode lc_from_rows(const Matrix& rows);
    friend Distance lc_min_distance(const LinearCode& c, std::uint64_t budget);
    explicit LinearCode(Matrix gen, std::vector<std::size_t> piv) : gen_(std::move(gen)), pivots_(std::move(piv)) {}

    Matrix gen_;
    std::vector<std::size_t> pivots_;
    mutable std::optional<Distance> d_;
};

/// RREF basis of the row span. Throws EmptyInput for length-0 codes.
LinearCode lc_from_rows(const Matrix& rows);
LinearCode lc_from_rows(const Field& f, std::size_t n, const std::vector<Vec>& rows);
LinearCode lc_zero(const Field& f, std::size_t n);
LinearCode lc_dual(const LinearCode& c);
/// True iff d is a subcode of c.
bool lc_contains(const LinearCode& c, const LinearCode& d);
bool lc_is_member(const LinearCode& c, const Vec& v);

/// Minimum nonzero weight. Exhaustive when q^k * n <= budget; otherwise
/// codewords of low message weight are enumerated within the budget and a
/// lower bound (exact when certified) is returned. Throws ZeroCode.
Distance lc_min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// Number of codewords of each weight 0..n by direct enumeration of all
/// messages. Throws BudgetExceeded when q^k > budget.
std::vector<std::uint64_t> lc_weight_distribution(const LinearCode& c, std::uint64_t budget = std::uint64_t{1} << 24);

/// G G^T invertible.
bool lc_is_lcd(const LinearCode& c);
/// dim(C intersect C^perp), computed by stacking C with its dual.
std::size_t lc_hull_dimension(const LinearCode& c);

enum class Singleton { Mds, AlmostMds, Neither };
/// Throws DistanceNotExact when d is only a bound.
Singleton lc_classify(const LinearCode& c, const Distance& d);
std::string singleton_name(Singleton s);

}  // namespace polycyclic
