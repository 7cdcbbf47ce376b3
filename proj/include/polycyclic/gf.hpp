#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycyclic {

/// Element of F_q, stored as its integer code: the base-p digits of the
/// coefficients in the power basis 1, u, ..., u^{m-1}. Code 0 is zero and
/// code 1 is one.
using Elem = std::uint32_t;

namespace detail {
struct FieldTables;
}

/// Finite field F_q with q = p^m <= 2^16.
///
/// A Field is a cheap, immutable handle; copies share the same tables and are
/// safe to use from several threads. Multiplication and inversion go through
/// log/antilog tables keyed by the primitive element.
class Field {
public:
    /// Builds F_{p^m}. `modulus` is the ascending coefficient list over F_p
    /// of a monic degree-m polynomial; when omitted a default primitive
    /// modulus is used (u^2+u+1, u^3+u+1, u^2+2u+2 for q = 4, 8, 9).
    static Field make(unsigned p, unsigned m = 1,
                      std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned p() const noexcept;
    unsigned m() const noexcept;
    unsigned q() const noexcept;
    /// Ascending coefficients over F_p; empty for prime fields.
    const std::vector<unsigned>& modulus() const noexcept;
    Elem primitive() const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long long e) const;

    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(long long v) const noexcept;
    /// The element u (the class of the modulus variable). Equals from_int
    /// of the residue for prime fields, where it is not meaningful.
    Elem generator_u() const noexcept;
    /// Discrete log base primitive(); a must be nonzero.
    unsigned log(Elem a) const;
    bool contains(Elem a) const noexcept { return a < q(); }

    /// Decimal code.
    std::string format(Elem a) const;
    /// Accepts a decimal code (reduced mod p for prime fields) or, for
    /// extension fields, an expression in u such as `u^3`, `2u+1`, `u^2+u`.
    Elem parse(std::string_view text) const;

    bool operator==(const Field& other) const noexcept;
    bool operator!=(const Field& other) const noexcept { return !(*this == other); }

private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    std::shared_ptr<const detail::FieldTables> t_;
};

/// Throws Errc::FieldMismatch unless a == b.
void require_same_field(const Field& a, const Field& b);

bool is_prime(unsigned v) noexcept;

}  // namespace polycyclic
