#pragma once

#include <cstdint>
#include <optional>

#include "polycyclic/duality.hpp"
#include "polycyclic/lincode.hpp"
#include "polycyclic/polycode.hpp"

namespace polycyclic {

/// Invertible l x l matrix M with its cached inverse.
struct GraySpec {
    Matrix M;
    Matrix M_inv;
};

/// Throws SingularMatrix when M is not invertible.
GraySpec gray_spec(const Matrix& m);
GraySpec identity_gray(const Field& f, std::size_t l);
/// lambda with M M^T = lambda I and lambda != 0, if any.
std::optional<Elem> scaled_orthogonal_lambda(const Matrix& m);

/// Concatenated basis coordinates of each position.
Vec phi(const RingVector& v, const IdempotentBasis& basis);
Vec phi(const RingVector& v);
RingVector phi_inv(const Vec& w, const IdempotentBasis& basis);
RingVector phi_inv(const Field& f, std::size_t l, const Vec& w);

/// phi with every l-block multiplied on the right by M.
Vec psi(const RingVector& v, const GraySpec& g, const IdempotentBasis& basis);
Vec psi(const RingVector& v, const GraySpec& g);
RingVector psi_inv(const Vec& w, const GraySpec& g, const IdempotentBasis& basis);

/// Linear code spanned by psi of e_i x^j g^{(i)}(x).
LinearCode gray_image(const PolycyclicCode& c, const GraySpec& g, const IdempotentBasis& basis);
LinearCode gray_image(const PolycyclicCode& c, const GraySpec& g);

/// phi o shift o phi^{-1} on F_q^{nl}.
Vec quasi_shift(const Vec& w, const ShiftSpec& s, const IdempotentBasis& basis);
Vec quasi_shift(const Vec& w, const ShiftSpec& s);
Vec quasi_seq_shift(const Vec& w, const ShiftSpec& s, const IdempotentBasis& basis);
Vec quasi_seq_shift(const Vec& w, const ShiftSpec& s);

/// Closure of the code under the operator, checked on its basis rows.
bool is_quasi_cyclic(const LinearCode& code, const ShiftSpec& s, const IdempotentBasis& basis);
bool is_quasi_cyclic(const LinearCode& code, const ShiftSpec& s);
bool is_quasi_sequential(const LinearCode& code, const ShiftSpec& s, const IdempotentBasis& basis);
bool is_quasi_sequential(const LinearCode& code, const ShiftSpec& s);

/// nl x nl matrix whose (i, j) block is diag(A[i][j]).
Matrix block_gram(const Field& f, const GramMatrix& a);

/// cA for c in (F_q^l)^n.
RingVector gram_apply(const RingVector& c, const GramMatrix& a);

/// Exhaustive check of psi(cA) = psi(c) Abar over every codeword of C.
/// Requires every coefficient of a(x) to be a constant tuple.
bool psi_gram_identity_check(const PolycyclicCode& c, const GraySpec& g,
                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polycyclic
