#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polycyclic/linalg.hpp"
#include "polycyclic/poly.hpp"
#include "polycyclic/product_ring.hpp"

namespace polycyclic {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// The tuple a = (a_1, ..., a_n) defining the shifts; a(x) = a_1 + a_2 x +
/// ... + a_n x^{n-1}, so vector index k (1-based) holds the coefficient of
/// x^{k-1}.
struct ShiftSpec {
    RingVector a_vec;
};

/// Builds the shift tuple from per-component a^{(i)}(x), deg < n.
ShiftSpec shift_spec(const Field& f, std::size_t n, const std::vector<Poly>& a_comps);

/// Ideal <g(x)> of F_q^l[x]/<x^n - a(x)>, stored through its standard-basis
/// components <g^{(i)}(x)> in F_q[x]/<x^n - a^{(i)}(x)>.
class PolycyclicCode {
public:
    const Field& field() const noexcept { return field_; }
    std::size_t l() const noexcept { return gen_.size(); }
    std::size_t n() const noexcept { return n_; }
    /// x^n - a^{(i)}(x).
    const std::vector<Poly>& mod_comps() const noexcept { return mod_; }
    /// Monic g^{(i)}(x).
    const std::vector<Poly>& gen_comps() const noexcept { return gen_; }
    /// Monic h^{(i)}(x) with g^{(i)} h^{(i)} = x^n - a^{(i)}.
    const std::vector<Poly>& check_comps() const noexcept { return check_; }
    std::vector<Poly> a_comps() const;
    ShiftSpec shift() const { return shift_spec(field_, n_, a_comps()); }

    /// F_q-dimension sum_i (n - deg g^{(i)}).
    std::size_t dimension() const noexcept;

    bool operator==(const PolycyclicCode& o) const {
        return field_ == o.field_ && n_ == o.n_ && mod_ == o.mod_ && gen_ == o.gen_;
    }

private:
    friend PolycyclicCode code_new(const Field&, std::size_t, std::size_t, const std::vector<Poly>&,
                                   const std::vector<Poly>&);
    PolycyclicCode(Field f, std::size_t n, std::vector<Poly> mod, std::vector<Poly> gen, std::vector<Poly> check)
        : field_(std::move(f)), n_(n), mod_(std::move(mod)), gen_(std::move(gen)), check_(std::move(check)) {}

    Field field_;
    std::size_t n_;
    std::vector<Poly> mod_;
    std::vector<Poly> gen_;
    std::vector<Poly> check_;
};

/// Validates and canonicalizes (monic generators, exact check polynomials).
PolycyclicCode code_new(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps,
                        const std::vector<Poly>& g_comps);

/// Component codes (l = 1 each) with respect to the given basis.
std::vector<PolycyclicCode> decompose(const PolycyclicCode& c, const IdempotentBasis& basis);

/// Rows x^j g(x), 0 <= j < n - deg g, as length-n vectors.
Matrix component_generator_rows(const Poly& g, std::size_t n);
/// F_q basis of the code in flattened coordinates (position-major,
/// standard basis): entry k*l + i is component i of position k.
Matrix code_basis_rows(const PolycyclicCode& c);

/// Flattened form of a ring vector under the standard basis.
Vec flatten(const RingVector& v);
RingVector unflatten(const Field& f, std::size_t l, const Vec& flat);

bool membership(const PolycyclicCode& c, const RingVector& v);

/// (0, c_1, ..., c_{n-1}) + c_n (a_1, ..., a_n).
RingVector poly_shift(const ShiftSpec& s, const RingVector& v);
/// (c_2, ..., c_n, c . a).
RingVector seq_shift(const ShiftSpec& s, const RingVector& v);

/// Exhaustive check that the F_q^l-linear code spanned by `generators` is
/// closed under the shift. Test oracle; every codeword is visited.
bool is_shift_closed(const std::vector<RingVector>& generators, const ShiftSpec& s,
                     std::uint64_t budget = kDefaultEnumerationBudget);
bool is_seq_closed(const std::vector<RingVector>& generators, const ShiftSpec& s,
                   std::uint64_t budget = kDefaultEnumerationBudget);
bool is_shift_closed(const PolycyclicCode& c, const ShiftSpec& s, std::uint64_t budget = kDefaultEnumerationBudget);
bool is_seq_closed(const PolycyclicCode& c, const ShiftSpec& s, std::uint64_t budget = kDefaultEnumerationBudget);

/// prod_i prod_j (n_{i,j} + 1) over the factorizations of x^n - a^{(i)}(x).
std::uint64_t count_codes(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps);

/// Visits every code once, in sorted divisor order (first component slowest).
/// Returning false from `visit` stops the enumeration.
void for_each_code(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps,
                   const std::function<bool(const PolycyclicCode&)>& visit);
std::vector<PolycyclicCode> enumerate_codes(const Field& f, std::size_t l, std::size_t n,
                                            const std::vector<Poly>& a_comps);

/// True iff d is a subcode of c.
bool code_contains(const PolycyclicCode& c, const PolycyclicCode& d);
/// n - deg g when all components have equal degree.
std::optional<std::size_t> code_rank(const PolycyclicCode& c);
bool code_is_monic(const PolycyclicCode& c);
/// q^dimension; throws Overflow when it does not fit in 64 bits.
std::uint64_t code_cardinality(const PolycyclicCode& c);

/// Generator g(x) = sum_i e_i g^{(i)}(x) as a ring polynomial.
RingPoly code_generator(const PolycyclicCode& c);
/// x^n - a(x) as a ring polynomial.
RingPoly code_modulus(const PolycyclicCode& c);

}  // namespace polycyclic
