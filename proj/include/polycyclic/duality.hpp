#pragma once

#include <cstdint>
#include <vector>

#include "polycyclic/polycode.hpp"

namespace polycyclic {

/// n x n matrix over F_q^l with A[i][j] = <e_i, e_j> (0-based here), where
/// e_i is the monomial x^i.
struct GramMatrix {
    std::size_t n = 0;
    std::size_t l = 0;
    std::vector<RingElement> entries;

    const RingElement& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    /// Component matrix A_k over F_q.
    Matrix component(const Field& f, std::size_t k) const;
};

/// Constant term of f1 * f2 mod (x^n - a(x)), computed per component.
/// f1 and f2 hold polynomial coefficients 0..n-1.
RingElement bform(const RingVector& f1, const RingVector& f2, const std::vector<Poly>& mod_comps);

/// Full Gram matrix of the bilinear form. a(0) may be zero here.
GramMatrix gram(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps);
/// True iff every component matrix has nonzero determinant.
bool gram_nondegenerate(const Field& f, const GramMatrix& a);

/// Code generated by the check polynomials.
PolycyclicCode ann_dual(const PolycyclicCode& c);
/// Sorted packed (flattened) codewords of C.
std::vector<std::uint64_t> code_codewords(const PolycyclicCode& c, std::uint64_t budget = kDefaultEnumerationBudget);
/// Annihilator of C by exhaustive search over the ambient space, using ring
/// arithmetic in F_q^l[x]. Sorted packed flattened vectors.
std::vector<std::uint64_t> ann_brute(const PolycyclicCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

bool is_ann_self_orthogonal(const PolycyclicCode& c);
bool is_ann_dual_containing(const PolycyclicCode& c);
bool is_ann_self_dual(const PolycyclicCode& c);
bool is_ann_lcd(const PolycyclicCode& c);

std::uint64_t count_ann_self_orthogonal(const Field& f, std::size_t l, std::size_t n,
                                        const std::vector<Poly>& a_comps);
std::uint64_t count_ann_self_dual(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps);
std::uint64_t count_ann_lcd(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps);

/// Exhaustive check that ann_dual(C) is the Euclidean dual (over F_q^l) of
/// {cA : c in C}.
bool dual_relation_check(const PolycyclicCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polycyclic
