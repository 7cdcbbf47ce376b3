#include "polycyclic/polycode.hpp"

#include <algorithm>

#include "polycyclic/error.hpp"
#include "polycyclic/span.hpp"

namespace polycyclic {

ShiftSpec shift_spec(const Field& f, std::size_t n, const std::vector<Poly>& a_comps) {
    const std::size_t l = a_comps.size();
    std::vector<RingElement> entries;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Elem> c(l);
        for (std::size_t i = 0; i < l; ++i) c[i] = a_comps[i].coeff(k);
        entries.emplace_back(f, std::move(c));
    }
    RingVector a(f, l, std::move(entries));
    if (n == 0 || !a[0].is_unit()) throw Error(Errc::NonUnitConstantTerm, "a_1 must be a unit");
    return ShiftSpec{std::move(a)};
}

std::vector<Poly> PolycyclicCode::a_comps() const {
    std::vector<Poly> out;
    for (const auto& m : mod_) out.push_back(Poly::monomial(field_, n_) - m);
    return out;
}

std::size_t PolycyclicCode::dimension() const noexcept {
    std::size_t d = 0;
    for (const auto& g : gen_) d += n_ - static_cast<std::size_t>(g.degree());
    return d;
}

PolycyclicCode code_new(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps,
                        const std::vector<Poly>& g_comps) {
    if (l == 0 || n == 0) throw Error(Errc::LengthMismatch, "l and n must be positive");
    if (a_comps.size() != l || g_comps.size() != l)
        throw Error(Errc::LengthMismatch, "need exactly l components for a and g");
    std::vector<Poly> mods, gens, checks;
    for (std::size_t i = 0; i < l; ++i) {
        const Poly& a = a_comps[i];
        const Poly& g = g_comps[i];
        require_same_field(f, a.field());
        require_same_field(f, g.field());
        if (a.degree() >= static_cast<int>(n))
            throw Error(Errc::DegreeTooLarge, "deg a^(" + std::to_string(i + 1) + ") must be < n");
        if (a.coeff(0) == 0)
            throw Error(Errc::NonUnitConstantTerm, "a^(" + std::to_string(i + 1) + ")(0) is zero");
        if (g.is_zero()) throw Error(Errc::NotADivisor, "zero generator polynomial");
        if (g.degree() > static_cast<int>(n))
            throw Error(Errc::DegreeTooLarge, "deg g^(" + std::to_string(i + 1) + ") exceeds n");
        Poly mod = Poly::monomial(f, n) - a;
        Poly gm = g.monic();
        auto [h, rem] = p_divmod(mod, gm);
        if (!rem.is_zero())
            throw Error(Errc::NotADivisor, "g^(" + std::to_string(i + 1) + ") = " + gm.to_string() +
                                               " does not divide " + mod.to_string());
        mods.push_back(std::move(mod));
        gens.push_back(std::move(gm));
        checks.push_back(std::move(h));
    }
    return PolycyclicCode(f, n, std::move(mods), std::move(gens), std::move(checks));
}

std::vector<PolycyclicCode> decompose(const PolycyclicCode& c, const IdempotentBasis& basis) {
    if (basis.l() != c.l()) throw Error(Errc::LengthMismatch, "basis and code disagree on l");
    const auto a = c.a_comps();
    std::vector<PolycyclicCode> out;
    for (const auto& e : basis.elements) {
        // A complete orthogonal idempotent of F_q^l is some standard e_s.
        std::size_t s = c.l();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 1 && s == c.l()) {
                s = i;
            } else if (e[i] != 0) {
                s = c.l() + 1;
                break;
            }
        }
        if (s >= c.l()) throw Error(Errc::InvalidFactorBasis, "basis element is not a primitive idempotent");
        out.push_back(code_new(c.field(), 1, c.n(), {a[s]}, {c.gen_comps()[s]}));
    }
    return out;
}

Matrix component_generator_rows(const Poly& g, std::size_t n) {
    const Field& f = g.field();
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    Matrix rows(f, k, n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < g.coeffs().size(); ++t) rows(j, j + t) = g.coeffs()[t];
    return rows;
}

Matrix code_basis_rows(const PolycyclicCode& c) {
    const std::size_t l = c.l(), n = c.n();
    Matrix out(c.field(), 0, n * l);
    for (std::size_t i = 0; i < l; ++i) {
        Matrix comp = component_generator_rows(c.gen_comps()[i], n);
        for (std::size_t r = 0; r < comp.rows(); ++r) {
            Vec flat(n * l, 0);
            for (std::size_t k = 0; k < n; ++k) flat[k * l + i] = comp(r, k);
            out.append_row(flat);
        }
    }
    return out;
}

Vec flatten(const RingVector& v) {
    Vec out;
    out.reserve(v.n() * v.l());
    for (const auto& e : v.entries()) out.insert(out.end(), e.comps().begin(), e.comps().end());
    return out;
}

RingVector unflatten(const Field& f, std::size_t l, const Vec& flat) {
    if (l == 0 || flat.size() % l != 0) throw Error(Errc::LengthMismatch, "flat length is not a multiple of l");
    std::vector<RingElement> e;
    for (std::size_t k = 0; k < flat.size() / l; ++k)
        e.emplace_back(f, Vec(flat.begin() + static_cast<long>(k * l), flat.begin() + static_cast<long>((k + 1) * l)));
    return RingVector(f, l, std::move(e));
}

bool membership(const PolycyclicCode& c, const RingVector& v) {
    if (v.n() != c.n() || v.l() != c.l()) throw Error(Errc::LengthMismatch, "vector shape does not match code");
    for (std::size_t i = 0; i < c.l(); ++i) {
        Vec comp(c.n());
        for (std::size_t k = 0; k < c.n(); ++k) comp[k] = v[k][i];
        if (!p_divides(c.gen_comps()[i], Poly(c.field(), std::move(comp)))) return false;
    }
    return true;
}

RingVector poly_shift(const ShiftSpec& s, const RingVector& v) {
    const std::size_t n = s.a_vec.n();
    if (v.n() != n || v.l() != s.a_vec.l()) throw Error(Errc::LengthMismatch, "vector shape does not match shift");
    const RingElement last = v[n - 1];
    std::vector<RingElement> out;
    out.reserve(n);
    out.push_back(last * s.a_vec[0]);
    for (std::size_t k = 1; k < n; ++k) out.push_back(v[k - 1] + last * s.a_vec[k]);
    return RingVector(v.field(), v.l(), std::move(out));
}

RingVector seq_shift(const ShiftSpec& s, const RingVector& v) {
    const std::size_t n = s.a_vec.n();
    if (v.n() != n || v.l() != s.a_vec.l()) throw Error(Errc::LengthMismatch, "vector shape does not match shift");
    std::vector<RingElement> out(v.entries().begin() + 1, v.entries().end());
    out.push_back(v.dot(s.a_vec));
    return RingVector(v.field(), v.l(), std::move(out));
}

namespace {

bool closed_under(const std::vector<RingVector>& generators, const ShiftSpec& s, std::uint64_t budget,
                  RingVector (*op)(const ShiftSpec&, const RingVector&)) {
    const Field& f = s.a_vec.field();
    const std::size_t l = s.a_vec.l(), n = s.a_vec.n();
    Matrix rows(f, 0, n * l);
    for (const auto& g : generators) {
        if (g.n() != n || g.l() != l) throw Error(Errc::LengthMismatch, "generator shape does not match shift");
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<Elem> e(l, 0);
            e[i] = 1;
            rows.append_row(flatten(g.scaled(RingElement(f, e))));
        }
    }
    const auto set = span_set(rows, budget);
    for (std::uint64_t code : set) {
        RingVector v = unflatten(f, l, unpack(code, f.q(), n * l));
        std::uint64_t image = pack(flatten(op(s, v)), f.q());
        if (!std::binary_search(set.begin(), set.end(), image)) return false;
    }
    return true;
}

std::vector<RingVector> generator_vectors(const PolycyclicCode& c) {
    std::vector<RingVector> out;
    Matrix rows = code_basis_rows(c);
    for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(unflatten(c.field(), c.l(), rows.row_vec(r)));
    return out;
}

}  // namespace

bool is_shift_closed(const std::vector<RingVector>& generators, const ShiftSpec& s, std::uint64_t budget) {
    return closed_under(generators, s, budget, &poly_shift);
}

bool is_seq_closed(const std::vector<RingVector>& generators, const ShiftSpec& s, std::uint64_t budget) {
    return closed_under(generators, s, budget, &seq_shift);
}

bool is_shift_closed(const PolycyclicCode& c, const ShiftSpec& s, std::uint64_t budget) {
    return is_shift_closed(generator_vectors(c), s, budget);
}

bool is_seq_closed(const PolycyclicCode& c, const ShiftSpec& s, std::uint64_t budget) {
    return is_seq_closed(generator_vectors(c), s, budget);
}

namespace {

std::vector<Poly> moduli(const Field& f, std::size_t n, const std::vector<Poly>& a_comps) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < a_comps.size(); ++i) {
        const Poly& a = a_comps[i];
        if (a.coeff(0) == 0)
            throw Error(Errc::NonUnitConstantTerm, "a^(" + std::to_string(i + 1) + ")(0) is zero");
        if (a.degree() >= static_cast<int>(n)) throw Error(Errc::DegreeTooLarge, "deg a must be < n");
        out.push_back(Poly::monomial(f, n) - a);
    }
    return out;
}

}  // namespace

std::uint64_t count_codes(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps) {
    if (a_comps.size() != l) throw Error(Errc::LengthMismatch, "need l components");
    std::uint64_t total = 1;
    for (const auto& m : moduli(f, n, a_comps))
        for (const auto& fac : p_factor(m).factors) total = saturating_mul(total, fac.multiplicity + 1);
    return total;
}

void for_each_code(const Field& f, std::size_t l, std::size_t n, const std::vector<Poly>& a_comps,
                   const std::function<bool(const PolycyclicCode&)>& visit) {
    if (a_comps.size() != l) throw Error(Errc::LengthMismatch, "need l components");
    std::vector<std::vector<Poly>> divs;
    for (const auto& m : moduli(f, n, a_comps)) divs.push_back(p_divisors(p_factor(m), f));
    std::vector<std::size_t> idx(l, 0);
    while (true) {
        std::vector<Poly> g;
        for (std::size_t i = 0; i < l; ++i) g.push_back(divs[i][idx[i]]);
        if (!visit(code_new(f, l, n, a_comps, g))) return;
        std::size_t i = l;
        while (i-- > 0) {
            if (++idx[i] < divs[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
    }
}

std::vector<PolycyclicCode> enumerate_codes(const Field& f, std::size_t l, std::size_t n,
                                            const std::vector<Poly>& a_comps) {
    std::vector<PolycyclicCode> out;
    for_each_code(f, l, n, a_comps, [&](const PolycyclicCode& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool code_contains(const PolycyclicCode& c, const PolycyclicCode& d) {
    if (c.field() != d.field() || c.n() != d.n() || c.mod_comps() != d.mod_comps())
        throw Error(Errc::ModulusMismatch, "codes live in different ambient rings");
    for (std::size_t i = 0; i < c.l(); ++i)
        if (!p_divides(c.gen_comps()[i], d.gen_comps()[i])) return false;
    return true;
}

bool code_is_monic(const PolycyclicCode& c) {
    const auto& g = c.gen_comps();
    return std::all_of(g.begin(), g.end(), [&](const Poly& p) { return p.degree() == g[0].degree(); });
}

std::optional<std::size_t> code_rank(const PolycyclicCode& c) {
    if (!code_is_monic(c)) return std::nullopt;
    return c.n() - static_cast<std::size_t>(c.gen_comps()[0].degree());
}

std::uint64_t code_cardinality(const PolycyclicCode& c) {
    std::uint64_t v = saturating_pow(c.field().q(), c.dimension());
    if (v == UINT64_MAX) throw Error(Errc::Overflow, "code cardinality exceeds 64 bits");
    return v;
}

RingPoly code_generator(const PolycyclicCode& c) { return RingPoly::from_components(c.field(), c.gen_comps()); }

RingPoly code_modulus(const PolycyclicCode& c) { return RingPoly::from_components(c.field(), c.mod_comps()); }

}  // namespace polycyclic
