#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycyclic/gf.hpp"

namespace polycyclic {

/// Dense univariate polynomial over F_q. Coefficients are ascending with no
/// trailing zeros; the zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(const Field& f, Elem c);
    static Poly monomial(const Field& f, std::size_t degree, Elem c = 1);
    static Poly x(const Field& f) { return monomial(f, 1); }

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const noexcept { return lead() == 1; }

    Poly monic() const;
    Poly scaled(Elem s) const;
    Elem eval(Elem x) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Degree first, then coefficient codes from the leading term down (the
    /// order of the polynomial's base-q value).
    bool operator<(const Poly& o) const;

    /// Human-readable, highest power first, e.g. `x^3+6x+6`.
    std::string to_string() const;
    /// Ascending code list, e.g. `[6,6,0,1]`.
    std::string to_list_string() const;
    /// Accepts `[c0,c1,...]` or a sum of terms such as `x^2+3x+1`,
    /// `2*x^3 - x`, `(u^2)x + u`.
    static Poly parse(const Field& f, std::string_view text);

private:
    void trim();
    Field field_;
    std::vector<Elem> c_;
};

std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b);
Poly p_mod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly p_gcd(const Poly& a, const Poly& b);
bool p_divides(const Poly& d, const Poly& f);
/// Exact quotient; throws NotADivisor when the remainder is nonzero.
Poly p_exact_div(const Poly& a, const Poly& b);
Poly p_pow(const Poly& a, unsigned e);
Poly p_mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly p_powmod(const Poly& a, std::uint64_t e, const Poly& mod);

struct Factor {
    Poly poly;          // monic irreducible
    unsigned multiplicity;
};

struct Factorization {
    Elem unit;
    std::vector<Factor> factors;  // sorted by Poly order

    Poly expand(const Field& f) const;
    /// `unit * (poly)^mult * ...`, e.g. `1 * (x+4)^5`.
    std::string to_string() const;
};

/// Complete factorization into monic irreducibles: squarefree decomposition,
/// distinct-degree splitting, then seeded equal-degree splitting.
Factorization p_factor(const Poly& f, std::uint64_t seed = 0);

/// Exhaustive trial division by monic polynomials of increasing degree.
/// Intended for checking p_factor on small inputs.
Factorization p_factor_trial(const Poly& f);

bool p_is_irreducible(const Poly& f);
bool p_is_squarefree(const Poly& f);

/// All prod(multiplicity + 1) monic divisors, sorted.
std::vector<Poly> p_divisors(const Factorization& fz, const Field& field);

/// Distinct roots when f = prod (x - r_j) with pairwise distinct r_j.
std::optional<std::vector<Elem>> p_splits_distinct_linear(const Poly& f);

/// e_i(x) = prod_{j != i} (x - r_j) / (r_i - r_j).
std::vector<Poly> p_lagrange_idempotents(const Field& f, const std::vector<Elem>& roots);

}  // namespace polycyclic
