#include "polycyclic/gray.hpp"

#include <algorithm>

#include "polycyclic/error.hpp"
#include "polycyclic/span.hpp"

namespace polycyclic {

GraySpec gray_spec(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw Error(Errc::LengthMismatch, "M must be square");
    auto inv = inverse(m);
    if (!inv) throw Error(Errc::SingularMatrix, "M is not invertible");
    return GraySpec{m, *inv};
}

GraySpec identity_gray(const Field& f, std::size_t l) { return gray_spec(Matrix::identity(f, l)); }

std::optional<Elem> scaled_orthogonal_lambda(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    Matrix p = m * m.transpose();
    const Elem lambda = p(0, 0);
    if (lambda == 0) return std::nullopt;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (p(i, j) != (i == j ? lambda : 0)) return std::nullopt;
    return lambda;
}

Vec phi(const RingVector& v, const IdempotentBasis& basis) {
    if (basis.l() != v.l()) throw Error(Errc::LengthMismatch, "basis size differs from l");
    Vec out;
    out.reserve(v.n() * v.l());
    for (const auto& e : v.entries()) {
        Vec c = basis.coordinates(e);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

Vec phi(const RingVector& v) { return flatten(v); }

RingVector phi_inv(const Vec& w, const IdempotentBasis& basis) {
    const std::size_t l = basis.l();
    if (l == 0 || w.size() % l != 0) throw Error(Errc::LengthMismatch, "length is not a multiple of l");
    const Field& f = basis.change_of_basis.field();
    std::vector<RingElement> e;
    for (std::size_t k = 0; k < w.size() / l; ++k)
        e.push_back(basis.from_coordinates(Vec(w.begin() + static_cast<long>(k * l),
                                               w.begin() + static_cast<long>((k + 1) * l))));
    return RingVector(f, l, std::move(e));
}

RingVector phi_inv(const Field& f, std::size_t l, const Vec& w) { return unflatten(f, l, w); }

namespace {

Vec blockwise(const Vec& w, const Matrix& m) {
    const std::size_t l = m.rows();
    Vec out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size() / l; ++k) {
        Vec block(w.begin() + static_cast<long>(k * l), w.begin() + static_cast<long>((k + 1) * l));
        Vec r = vec_mat(block, m);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace

Vec psi(const RingVector& v, const GraySpec& g, const IdempotentBasis& basis) {
    if (g.M.rows() != v.l()) throw Error(Errc::LengthMismatch, "M size differs from l");
    return blockwise(phi(v, basis), g.M);
}

Vec psi(const RingVector& v, const GraySpec& g) {
    if (g.M.rows() != v.l()) throw Error(Errc::LengthMismatch, "M size differs from l");
    return blockwise(phi(v), g.M);
}

RingVector psi_inv(const Vec& w, const GraySpec& g, const IdempotentBasis& basis) {
    if (w.size() % g.M.rows() != 0) throw Error(Errc::LengthMismatch, "length is not a multiple of l");
    return phi_inv(blockwise(w, g.M_inv), basis);
}

LinearCode gray_image(const PolycyclicCode& c, const GraySpec& g, const IdempotentBasis& basis) {
    const Field& f = c.field();
    const std::size_t l = c.l(), n = c.n();
    Matrix rows(f, 0, n * l);
    for (std::size_t i = 0; i < l; ++i) {
        Matrix comp = component_generator_rows(c.gen_comps()[i], n);
        for (std::size_t r = 0; r < comp.rows(); ++r) {
            std::vector<RingElement> e;
            for (std::size_t k = 0; k < n; ++k) e.push_back(basis.elements[i] * RingElement::diagonal(f, l, comp(r, k)));
            rows.append_row(psi(RingVector(f, l, std::move(e)), g, basis));
        }
    }
    return lc_from_rows(rows);
}

LinearCode gray_image(const PolycyclicCode& c, const GraySpec& g) {
    return gray_image(c, g, standard_basis(c.field(), c.l()));
}

namespace {

void check_len(const Vec& w, const ShiftSpec& s) {
    if (w.size() != s.a_vec.n() * s.a_vec.l()) throw Error(Errc::LengthMismatch, "vector length must be nl");
}

}  // namespace

Vec quasi_shift(const Vec& w, const ShiftSpec& s, const IdempotentBasis& basis) {
    check_len(w, s);
    return phi(poly_shift(s, phi_inv(w, basis)), basis);
}

Vec quasi_shift(const Vec& w, const ShiftSpec& s) {
    check_len(w, s);
    return phi(poly_shift(s, phi_inv(s.a_vec.field(), s.a_vec.l(), w)));
}

Vec quasi_seq_shift(const Vec& w, const ShiftSpec& s, const IdempotentBasis& basis) {
    check_len(w, s);
    return phi(seq_shift(s, phi_inv(w, basis)), basis);
}

Vec quasi_seq_shift(const Vec& w, const ShiftSpec& s) {
    check_len(w, s);
    return phi(seq_shift(s, phi_inv(s.a_vec.field(), s.a_vec.l(), w)));
}

namespace {

template <class Op>
bool closed_on_basis(const LinearCode& code, Op op) {
    Matrix images = code.gen();
    for (std::size_t r = 0; r < code.k(); ++r) images.append_row(op(code.gen().row_vec(r)));
    return rank(images) == code.k();
}

}  // namespace

bool is_quasi_cyclic(const LinearCode& code, const ShiftSpec& s, const IdempotentBasis& basis) {
    return closed_on_basis(code, [&](const Vec& w) { return quasi_shift(w, s, basis); });
}

bool is_quasi_cyclic(const LinearCode& code, const ShiftSpec& s) {
    return closed_on_basis(code, [&](const Vec& w) { return quasi_shift(w, s); });
}

bool is_quasi_sequential(const LinearCode& code, const ShiftSpec& s, const IdempotentBasis& basis) {
    return closed_on_basis(code, [&](const Vec& w) { return quasi_seq_shift(w, s, basis); });
}

bool is_quasi_sequential(const LinearCode& code, const ShiftSpec& s) {
    return closed_on_basis(code, [&](const Vec& w) { return quasi_seq_shift(w, s); });
}

Matrix block_gram(const Field& f, const GramMatrix& a) {
    const std::size_t n = a.n, l = a.l;
    Matrix out(f, n * l, n * l);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < l; ++k) out(i * l + k, j * l + k) = a.at(i, j)[k];
    return out;
}

RingVector gram_apply(const RingVector& c, const GramMatrix& a) {
    if (c.n() != a.n || c.l() != a.l) throw Error(Errc::LengthMismatch, "vector shape does not match Gram matrix");
    RingVector out = RingVector::zero(c.field(), c.l(), c.n());
    for (std::size_t j = 0; j < c.n(); ++j)
        for (std::size_t i = 0; i < c.n(); ++i) out[j] += c[i] * a.at(i, j);
    return out;
}

bool psi_gram_identity_check(const PolycyclicCode& c, const GraySpec& g, std::uint64_t budget) {
    const Field& f = c.field();
    const auto a_comps = c.a_comps();
    for (std::size_t i = 1; i < a_comps.size(); ++i)
        if (a_comps[i] != a_comps[0])
            throw Error(Errc::PreconditionViolated, "every coefficient of a(x) must be a constant tuple");
    const GramMatrix a = gram(f, c.l(), c.n(), a_comps);
    const Matrix abar = block_gram(f, a);
    std::vector<std::uint64_t> lhs, rhs;
    for_each_in_span(code_basis_rows(c), budget, [&](const Vec& flat) {
        RingVector v = unflatten(f, c.l(), flat);
        lhs.push_back(pack(psi(gram_apply(v, a), g), f.q()));
        rhs.push_back(pack(vec_mat(psi(v, g), abar), f.q()));
    });
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

}  // namespace polycyclic
