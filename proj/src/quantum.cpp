#include "polycyclic/quantum.hpp"

#include <algorithm>

#include "polycyclic/duality.hpp"
#include "polycyclic/error.hpp"
#include "polycyclic/span.hpp"

namespace polycyclic {

std::string QuantumParams::to_string() const {
    return "[[" + std::to_string(N) + "," + std::to_string(K) + "," + (exact ? "" : ">=") + std::to_string(D) + "]]";
}

namespace {

// Minimum weight over codewords of `c` outside `sub`, where membership in
// `sub` is tested against the rows of its dual `sub_dual`. Returns 0 when
// every codeword of c lies in sub.
std::size_t min_weight_outside(const LinearCode& c, const LinearCode& sub_dual) {
    const Field& f = c.field();
    std::size_t best = 0;
    for_each_in_span(c.gen(), UINT64_MAX, [&](const Vec& w) {
        const std::size_t wt = hamming_weight(w);
        if (wt == 0 || (best != 0 && wt >= best)) return;
        for (std::size_t r = 0; r < sub_dual.k(); ++r)
            if (dot(f, w, sub_dual.gen().row(r)) != 0) {
                best = wt;
                return;
            }
    });
    return best;
}

}  // namespace

QuantumParams css(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
    require_same_field(c1.field(), c2.field());
    if (c1.n() != c2.n()) throw Error(Errc::LengthMismatch, "CSS codes must have equal length");
    const LinearCode c2_dual = lc_dual(c2);
    if (!lc_contains(c1, c2_dual)) throw Error(Errc::NotNested, "C2^perp is not contained in C1");
    QuantumParams out;
    out.N = c1.n();
    out.K = c1.k() + c2.k() - c1.n();
    const Field& f = c1.field();
    const std::uint64_t work = saturating_mul(
        saturating_pow(f.q(), c1.k()) + saturating_pow(f.q(), c2.k()), c1.n());
    if (work <= budget) {
        // C2^perp = {w : w . r = 0 for r in C2}; C1^perp likewise.
        const std::size_t d1 = min_weight_outside(c1, c2);
        const std::size_t d2 = min_weight_outside(c2, c1);
        std::size_t d = 0;
        for (std::size_t x : {d1, d2})
            if (x != 0) d = d == 0 ? x : std::min(d, x);
        if (d != 0) {
            out.D = d;
            out.exact = true;
            return out;
        }
    }
    std::size_t d = c1.n();
    for (const LinearCode* x : {&c1, &c2}) {
        if (x->k() == 0) continue;
        const Distance dx = lc_min_distance(*x, budget);
        d = std::min(d, dx.d);
        out.bound_certified = out.bound_certified && dx.exact;
    }
    out.D = std::max<std::size_t>(d, 1);
    out.exact = false;
    return out;
}

QuantumParams quantum_from_polycyclic(const PolycyclicCode& c, const GraySpec& g, std::uint64_t budget) {
    if (!is_ann_dual_containing(c)) throw Error(Errc::NotDualContaining, "C does not contain its annihilator dual");
    auto lambda = scaled_orthogonal_lambda(g.M);
    if (!lambda) throw Error(Errc::MNotScaledOrthogonal, "M M^T is not a nonzero multiple of I");
    const LinearCode image = gray_image(c, g);
    if (!lc_contains(image, lc_dual(image)))
        throw Error(Errc::NotNested, "the Gray image does not contain its Euclidean dual");
    std::size_t deg = 0;
    for (const auto& gi : c.gen_comps()) deg += static_cast<std::size_t>(gi.degree());
    QuantumParams out;
    out.N = c.n() * c.l();
    out.K = out.N - 2 * deg;
    const Distance d = lc_min_distance(image, budget);
    out.D = d.d;
    out.exact = false;
    out.bound_certified = d.exact;
    out.lambda = lambda;
    return out;
}

}  // namespace polycyclic
