#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycyclic/gf.hpp"
#include "polycyclic/linalg.hpp"
#include "polycyclic/poly.hpp"

namespace polycyclic {

/// Element of the product ring F_q^l; all operations are componentwise.
class RingElement {
public:
    RingElement(Field field, std::vector<Elem> comps);
    static RingElement zero(const Field& f, std::size_t l);
    static RingElement one(const Field& f, std::size_t l);
    /// (c, c, ..., c).
    static RingElement diagonal(const Field& f, std::size_t l, Elem c);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Elem>& comps() const noexcept { return c_; }
    Elem operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const noexcept;
    bool is_unit() const noexcept;
    RingElement inv() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    RingElement operator-() const;

    bool operator==(const RingElement& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// `(c1,...,cl)`.
    std::string to_string() const;

private:
    void check(const RingElement& o) const;
    Field field_;
    std::vector<Elem> c_;
};

/// Length-n vector over F_q^l.
class RingVector {
public:
    RingVector(Field field, std::size_t l, std::vector<RingElement> entries);
    static RingVector zero(const Field& f, std::size_t l, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t l() const noexcept { return l_; }
    std::size_t n() const noexcept { return e_.size(); }
    const RingElement& operator[](std::size_t i) const { return e_[i]; }
    RingElement& operator[](std::size_t i) { return e_[i]; }
    const std::vector<RingElement>& entries() const noexcept { return e_; }

    RingVector& operator+=(const RingVector& o);
    friend RingVector operator+(RingVector a, const RingVector& b) { return a += b; }
    /// Scalar multiplication by a ring element.
    RingVector scaled(const RingElement& s) const;
    /// Euclidean inner product sum_k x_k y_k in F_q^l.
    RingElement dot(const RingVector& o) const;

    bool operator==(const RingVector& o) const { return field_ == o.field_ && l_ == o.l_ && e_ == o.e_; }
    std::string to_string() const;

private:
    Field field_;
    std::size_t l_;
    std::vector<RingElement> e_;
};

/// Complete family of orthogonal idempotents forming an F_q-basis of F_q^l.
struct IdempotentBasis {
    std::vector<RingElement> elements;
    /// Row i holds elements[i] in standard coordinates, so coordinates c
    /// map to the standard form via c * change_of_basis.
    Matrix change_of_basis;
    /// Inverse of change_of_basis (standard form to basis coordinates).
    Matrix to_basis;

    std::size_t l() const noexcept { return elements.size(); }
    /// Coordinates of x with respect to this basis.
    Vec coordinates(const RingElement& x) const;
    RingElement from_coordinates(const Vec& c) const;
};

IdempotentBasis standard_basis(const Field& f, std::size_t l);
bool verify_idempotent_basis(const std::vector<RingElement>& cands);
/// Validated basis; throws InvalidFactorBasis when the family is not a
/// complete orthogonal idempotent basis.
IdempotentBasis make_idempotent_basis(std::vector<RingElement> cands);

/// Coordinate vector a^{(i)} (1-based i) of v with respect to the basis.
Vec project(const RingVector& v, std::size_t i, const IdempotentBasis& basis);
/// sum_j e_j * a^{(j)}.
RingVector assemble(const std::vector<Vec>& components, const IdempotentBasis& basis);

/// l = prod deg f_i when every f_i splits over F_q with simple roots.
std::optional<std::size_t> quotient_splits_check(const std::vector<Poly>& fs);

/// Idempotents of F_q^{d_1 ... d_k}: the pair (e_i, f_j) maps to index
/// i + (j-1) d_1, folded left to right.
IdempotentBasis tensor_idempotents(const std::vector<std::vector<RingElement>>& sets,
                                   const std::vector<std::size_t>& dims);

/// Polynomial with coefficients in F_q^l, used to cross-check componentwise
/// results at the ring level.
class RingPoly {
public:
    RingPoly(Field field, std::size_t l, std::vector<RingElement> coeffs);
    /// sum_i e_i * comps[i] under the standard basis.
    static RingPoly from_components(const Field& f, const std::vector<Poly>& comps);

    const std::vector<RingElement>& coeffs() const noexcept { return c_; }
    std::size_t l() const noexcept { return l_; }
    RingElement coeff(std::size_t i) const;
    int degree() const noexcept;

    friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
    friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
    /// Remainder modulo a monic ring polynomial.
    RingPoly mod_monic(const RingPoly& m) const;
    /// Coefficients 0..n-1 as a ring vector.
    RingVector to_vector(std::size_t n) const;
    static RingPoly from_vector(const RingVector& v);

private:
    void trim();
    Field field_;
    std::size_t l_;
    std::vector<RingElement> c_;
};

}  // namespace polycyclic
