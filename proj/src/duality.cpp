#include "polycyclic/duality.hpp"

#include <algorithm>

#include "polycyclic/error.hpp"
#include "polycyclic/span.hpp"

namespace polycyclic {

Matrix GramMatrix::component(const Field& f, std::size_t k) const {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = at(i, j)[k];
    return m;
}

RingElement bform(const RingVector& f1, const RingVector& f2, const std::vector<Poly>& mod_comps) {
    const Field& f = f1.field();
    const std::size_t l = f1.l();
    if (f2.l() != l || mod_comps.size() != l || f1.n() != f2.n())
        throw Error(Errc::LengthMismatch, "bform operands disagree in shape");
    std::vector<Elem> out(l);
    for (std::size_t i = 0; i < l; ++i) {
        Vec c1(f1.n()), c2(f2.n());
        for (std::size_t k = 0; k < f1.n(); ++k) {
            c1[k] = f1[k][i];
            c2[k] = f2[k][i];
        }
        out[i] = p_mod(Poly(f, std::move(c1)) * Poly(f, std::move(c2)), mod_comps[i]).coeff(0);
    }
    return RingElement(f, std::move(out));
}

GramMatrix gram(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps) {
    if (a_comps.size() != l) throw Error(Errc::LengthMismatch, "need l components");
    GramMatrix g{n, l, {}};
    // Constant terms of x^s mod (x^n - a), s = 0..2n-2, per component.
    std::vector<Vec> consts(l, Vec(2 * n - 1, 0));
    for (std::size_t i = 0; i < l; ++i) {
        if (a_comps[i].degree() >= static_cast<int>(n)) throw Error(Errc::DegreeTooLarge, "deg a must be < n");
        Poly mod = Poly::monomial(f, n) - a_comps[i];
        Poly r = Poly::constant(f, 1);
        for (std::size_t s = 0; s < 2 * n - 1; ++s) {
            consts[i][s] = r.coeff(0);
            r = p_mod(r * Poly::x(f), mod);
        }
    }
    g.entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec c(l);
            for (std::size_t k = 0; k < l; ++k) c[k] = consts[k][i + j];
            g.entries.emplace_back(f, std::move(c));
        }
    return g;
}

bool gram_nondegenerate(const Field& f, const GramMatrix& a) {
    for (std::size_t k = 0; k < a.l; ++k)
        if (determinant(a.component(f, k)) == 0) return false;
    return true;
}

PolycyclicCode ann_dual(const PolycyclicCode& c) { return code_new(c.field(), c.l(), c.n(), c.a_comps(), c.check_comps()); }

std::vector<std::uint64_t> code_codewords(const PolycyclicCode& c, std::uint64_t budget) {
    return span_set(code_basis_rows(c), budget);
}

std::vector<std::uint64_t> ann_brute(const PolycyclicCode& c, std::uint64_t budget) {
    const Field& f = c.field();
    const std::size_t l = c.l(), n = c.n();
    const RingPoly g = code_generator(c);
    const RingPoly mod = code_modulus(c);
    // Row idx is the product of the idx-th unit vector with g; the product
    // of any p is then p times this matrix.
    Matrix times_g(f, 0, n * l);
    for (std::size_t idx = 0; idx < n * l; ++idx) {
        Vec unit(n * l, 0);
        unit[idx] = 1;
        RingPoly p = RingPoly::from_vector(unflatten(f, l, unit));
        times_g.append_row(flatten((p * g).mod_monic(mod).to_vector(n)));
    }
    std::vector<std::uint64_t> out;
    for_each_vector_times(times_g, budget, [&](const Vec& flat, const Vec& prod) {
        if (std::all_of(prod.begin(), prod.end(), [](Elem e) { return e == 0; })) out.push_back(pack(flat, f.q()));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_ann_self_orthogonal(const PolycyclicCode& c) {
    for (std::size_t i = 0; i < c.l(); ++i)
        if (!p_divides(c.check_comps()[i], c.gen_comps()[i])) return false;
    return true;
}

bool is_ann_dual_containing(const PolycyclicCode& c) {
    for (std::size_t i = 0; i < c.l(); ++i)
        if (!p_divides(c.gen_comps()[i], c.check_comps()[i])) return false;
    return true;
}

bool is_ann_self_dual(const PolycyclicCode& c) {
    for (std::size_t i = 0; i < c.l(); ++i)
        if (c.mod_comps()[i].degree() != 2 * c.gen_comps()[i].degree() ||
            c.gen_comps()[i] * c.gen_comps()[i] != c.mod_comps()[i])
            return false;
    return true;
}

bool is_ann_lcd(const PolycyclicCode& c) {
    for (std::size_t i = 0; i < c.l(); ++i)
        if (!p_gcd(c.gen_comps()[i], c.check_comps()[i]).is_one()) return false;
    return true;
}

namespace {

std::vector<Factorization> component_factorizations(const Field& f, std::size_t l, std::size_t n,
                                                    const std::vector<Poly>& a_comps) {
    if (a_comps.size() != l) throw Error(Errc::LengthMismatch, "need l components");
    std::vector<Factorization> out;
    for (std::size_t i = 0; i < l; ++i) {
        if (a_comps[i].coeff(0) == 0)
            throw Error(Errc::NonUnitConstantTerm, "a^(" + std::to_string(i + 1) + ")(0) is zero");
        if (a_comps[i].degree() >= static_cast<int>(n)) throw Error(Errc::DegreeTooLarge, "deg a must be < n");
        out.push_back(p_factor(Poly::monomial(f, n) - a_comps[i]));
    }
    return out;
}

}  // namespace

std::uint64_t count_ann_self_orthogonal(const Field& f, std::size_t l, std::size_t n,
                                        const std::vector<Poly>& a_comps) {
    std::uint64_t total = 1;
    for (const auto& fz : component_factorizations(f, l, n, a_comps))
        for (const auto& fac : fz.factors) {
            const unsigned m = fac.multiplicity;
            total = saturating_mul(total, m - (m + 1) / 2 + 1);
        }
    return total;
}

std::uint64_t count_ann_self_dual(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps) {
    for (const auto& fz : component_factorizations(f, l, n, a_comps))
        for (const auto& fac : fz.factors)
            if (fac.multiplicity % 2 != 0) return 0;
    return 1;
}

std::uint64_t count_ann_lcd(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps) {
    std::uint64_t s = 0;
    for (const auto& fz : component_factorizations(f, l, n, a_comps)) s += fz.factors.size();
    return saturating_pow(2, s);
}

bool dual_relation_check(const PolycyclicCode& c, std::uint64_t budget) {
    const Field& f = c.field();
    const std::size_t l = c.l(), n = c.n();
    const GramMatrix a = gram(f, l, n, c.a_comps());
    // Images cA of an F_q-basis of C; by bilinearity these suffice.
    std::vector<RingVector> images;
    Matrix basis = code_basis_rows(c);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        RingVector v = unflatten(f, l, basis.row_vec(r));
        RingVector w = RingVector::zero(f, l, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) w[j] += v[i] * a.at(i, j);
        images.push_back(std::move(w));
    }
    // Column (r, i) collects component i of v . images[r].
    Matrix forms(f, n * l, images.size() * l);
    for (std::size_t r = 0; r < images.size(); ++r)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < l; ++i) forms(k * l + i, r * l + i) = images[r][k][i];
    std::vector<std::uint64_t> dual;
    for_each_vector_times(forms, budget, [&](const Vec& flat, const Vec& values) {
        if (std::all_of(values.begin(), values.end(), [](Elem e) { return e == 0; })) dual.push_back(pack(flat, f.q()));
    });
    std::sort(dual.begin(), dual.end());
    return dual == code_codewords(ann_dual(c), budget);
}

}  // namespace polycyclic
