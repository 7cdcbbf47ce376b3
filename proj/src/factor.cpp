// Factorization of univariate polynomials over F_q.

#include <algorithm>
#include <map>
#include <random>

#include "polycyclic/error.hpp"
#include "polycyclic/poly.hpp"

namespace polycyclic {

namespace {

// p-th root of a polynomial whose derivative vanishes: only exponents that
// are multiples of p occur, and each coefficient has a unique p-th root.
Poly pth_root(const Poly& f) {
    const Field& fld = f.field();
    const unsigned p = fld.p();
    // a^(1/p) = a^(p^(m-1)) since Frobenius has order m.
    long long e = 1;
    for (unsigned i = 1; i < fld.m(); ++i) e *= p;
    std::vector<Elem> out(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = fld.pow(f.coeffs()[i], e);
    return Poly(fld, std::move(out));
}

// Monic input; returns (squarefree monic factor, multiplicity) pairs.
void squarefree_decompose(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
    const Field& fld = f.field();
    Poly one = Poly::constant(fld, 1);
    if (f.degree() < 1) return;
    Poly c = p_gcd(f, f.derivative());
    Poly w = p_exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = p_gcd(w, c);
        Poly fac = p_exact_div(w, y);
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
        w = y;
        c = p_exact_div(c, y);
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c).monic(), scale * fld.p(), out);
}

// Squarefree monic input; returns (product of all irreducible factors of
// degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
    const Field& fld = f.field();
    std::vector<std::pair<Poly, unsigned>> out;
    Poly rest = f;
    Poly x = Poly::x(fld);
    Poly h = p_mod(x, rest);
    unsigned d = 1;
    while (rest.degree() >= 2 * static_cast<int>(d)) {
        h = p_powmod(h, fld.q(), rest);
        Poly g = p_gcd(rest, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            rest = p_exact_div(rest, g);
            h = p_mod(h, rest);
        }
        ++d;
    }
    if (rest.degree() >= 1) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
    return out;
}

Poly random_poly(const Field& fld, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, fld.q() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(below_degree));
    for (auto& v : c) v = pick(rng);
    return Poly(fld, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const Field& fld = f.field();
    Poly one = Poly::constant(fld, 1);
    while (true) {
        Poly a = random_poly(fld, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(fld);
        if (fld.p() == 2) {
            // Absolute trace to F_2: a + a^2 + ... + a^(2^(md-1)).
            Poly t = a;
            b = a;
            for (unsigned i = 1; i < fld.m() * d; ++i) {
                t = p_mulmod(t, t, f);
                b += t;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2).
            Poly t = a;
            Poly acc = p_mod(a, f);
            for (unsigned i = 1; i < d; ++i) {
                t = p_powmod(t, fld.q(), f);
                acc = p_mulmod(acc, t, f);
            }
            b = p_powmod(acc, (fld.q() - 1) / 2, f) - one;
        }
        Poly g = p_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(p_exact_div(f, g), d, rng, out);
            return;
        }
    }
}

Factorization collect(Elem unit, std::map<Poly, unsigned>& acc) {
    Factorization fz{unit, {}};
    for (auto& [poly, mult] : acc) fz.factors.push_back({poly, mult});
    return fz;
}

}  // namespace

Factorization p_factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    std::mt19937_64 rng(seed);
    std::map<Poly, unsigned> acc;
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(block, d, rng, irr);
            for (auto& g : irr) acc[g] += mult;
        }
    }
    return collect(f.lead(), acc);
}

Factorization p_factor_trial(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    const Field& fld = f.field();
    std::map<Poly, unsigned> acc;
    Poly rest = f.monic();
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= fld.q();
        for (std::uint64_t c = 0; c < count && 2 * d <= rest.degree(); ++c) {
            std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1);
            std::uint64_t v = c;
            for (int i = 0; i < d; ++i) {
                coeffs[static_cast<std::size_t>(i)] = static_cast<Elem>(v % fld.q());
                v /= fld.q();
            }
            coeffs[static_cast<std::size_t>(d)] = 1;
            Poly g(fld, std::move(coeffs));
            while (rest.degree() >= d) {
                auto [quot, rem] = p_divmod(rest, g);
                if (!rem.is_zero()) break;
                acc[g] += 1;
                rest = quot;
            }
        }
    }
    if (rest.degree() >= 1) acc[rest] += 1;
    return collect(f.lead(), acc);
}

bool p_is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fz = p_factor(f);
    return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

bool p_is_squarefree(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree test of zero");
    auto fz = p_factor(f);
    return std::all_of(fz.factors.begin(), fz.factors.end(), [](const Factor& x) { return x.multiplicity == 1; });
}

}  // namespace polycyclic
