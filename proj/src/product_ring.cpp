#include "polycyclic/product_ring.hpp"

#include <algorithm>
#include <sstream>

#include "polycyclic/error.hpp"

namespace polycyclic {

RingElement::RingElement(Field field, std::vector<Elem> comps) : field_(std::move(field)), c_(std::move(comps)) {
    if (c_.empty()) throw Error(Errc::LengthMismatch, "ring element needs l >= 1 components");
    for (Elem x : c_)
        if (!field_.contains(x)) throw Error(Errc::FieldMismatch, "component out of range");
}

RingElement RingElement::zero(const Field& f, std::size_t l) { return RingElement(f, std::vector<Elem>(l, 0)); }
RingElement RingElement::one(const Field& f, std::size_t l) { return RingElement(f, std::vector<Elem>(l, 1)); }
RingElement RingElement::diagonal(const Field& f, std::size_t l, Elem c) {
    return RingElement(f, std::vector<Elem>(l, c));
}

bool RingElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Elem x) { return x == 0; });
}

bool RingElement::is_unit() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Elem x) { return x != 0; });
}

RingElement RingElement::inv() const {
    if (!is_unit()) throw Error(Errc::NotAUnit, to_string() + " has a zero component");
    RingElement r = *this;
    for (auto& x : r.c_) x = field_.inv(x);
    return r;
}

void RingElement::check(const RingElement& o) const {
    require_same_field(field_, o.field_);
    if (c_.size() != o.c_.size()) throw Error(Errc::LengthMismatch, "ring elements of different l");
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.mul(c_[i], o.c_[i]);
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& x : r.c_) x = field_.neg(x);
    return r;
}

std::string RingElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ')';
    return os.str();
}

RingVector::RingVector(Field field, std::size_t l, std::vector<RingElement> entries)
    : field_(std::move(field)), l_(l), e_(std::move(entries)) {
    for (const auto& x : e_) {
        require_same_field(field_, x.field());
        if (x.size() != l_) throw Error(Errc::LengthMismatch, "ring vector entries must share l");
    }
}

RingVector RingVector::zero(const Field& f, std::size_t l, std::size_t n) {
    return RingVector(f, l, std::vector<RingElement>(n, RingElement::zero(f, l)));
}

RingVector& RingVector::operator+=(const RingVector& o) {
    if (o.n() != n()) throw Error(Errc::LengthMismatch, "ring vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RingVector RingVector::scaled(const RingElement& s) const {
    RingVector r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

RingElement RingVector::dot(const RingVector& o) const {
    if (o.n() != n()) throw Error(Errc::LengthMismatch, "ring vectors of different length");
    RingElement acc = RingElement::zero(field_, l_);
    for (std::size_t i = 0; i < e_.size(); ++i) acc += e_[i] * o.e_[i];
    return acc;
}

std::string RingVector::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i].to_string();
    os << ']';
    return os.str();
}

Vec IdempotentBasis::coordinates(const RingElement& x) const { return vec_mat(x.comps(), to_basis); }

RingElement IdempotentBasis::from_coordinates(const Vec& c) const {
    return RingElement(change_of_basis.field(), vec_mat(c, change_of_basis));
}

IdempotentBasis standard_basis(const Field& f, std::size_t l) {
    if (l == 0) throw Error(Errc::LengthMismatch, "l must be >= 1");
    std::vector<RingElement> els;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Elem> c(l, 0);
        c[i] = 1;
        els.emplace_back(f, std::move(c));
    }
    return IdempotentBasis{std::move(els), Matrix::identity(f, l), Matrix::identity(f, l)};
}

bool verify_idempotent_basis(const std::vector<RingElement>& cands) {
    if (cands.empty()) return false;
    const Field& f = cands[0].field();
    const std::size_t l = cands[0].size();
    if (cands.size() != l) return false;
    for (const auto& c : cands)
        if (c.field() != f || c.size() != l) return false;
    RingElement sum = RingElement::zero(f, l);
    for (std::size_t i = 0; i < l; ++i) {
        if (cands[i] * cands[i] != cands[i]) return false;
        for (std::size_t j = i + 1; j < l; ++j)
            if (!(cands[i] * cands[j]).is_zero()) return false;
        sum += cands[i];
    }
    if (sum != RingElement::one(f, l)) return false;
    std::vector<Vec> rows;
    for (const auto& c : cands) rows.push_back(c.comps());
    return rank(Matrix(f, l, rows)) == l;
}

IdempotentBasis make_idempotent_basis(std::vector<RingElement> cands) {
    if (!verify_idempotent_basis(cands))
        throw Error(Errc::InvalidFactorBasis, "not a complete orthogonal idempotent basis");
    const Field f = cands[0].field();
    const std::size_t l = cands.size();
    std::vector<Vec> rows;
    for (const auto& c : cands) rows.push_back(c.comps());
    Matrix cob(f, l, rows);
    auto inv = inverse(cob);
    return IdempotentBasis{std::move(cands), cob, *inv};
}

Vec project(const RingVector& v, std::size_t i, const IdempotentBasis& basis) {
    if (i < 1 || i > basis.l()) throw Error(Errc::IndexOutOfRange, "component index out of range");
    if (v.l() != basis.l()) throw Error(Errc::LengthMismatch, "basis and vector disagree on l");
    Vec out(v.n());
    for (std::size_t k = 0; k < v.n(); ++k) out[k] = basis.coordinates(v[k])[i - 1];
    return out;
}

RingVector assemble(const std::vector<Vec>& components, const IdempotentBasis& basis) {
    const std::size_t l = basis.l();
    if (components.size() != l) throw Error(Errc::LengthMismatch, "need one component per idempotent");
    const std::size_t n = components[0].size();
    for (const auto& c : components)
        if (c.size() != n) throw Error(Errc::LengthMismatch, "components must have equal length");
    const Field& f = basis.change_of_basis.field();
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec coords(l);
        for (std::size_t j = 0; j < l; ++j) coords[j] = components[j][k];
        out.push_back(basis.from_coordinates(coords));
    }
    return RingVector(f, l, std::move(out));
}

std::optional<std::size_t> quotient_splits_check(const std::vector<Poly>& fs) {
    if (fs.empty()) throw Error(Errc::EmptyInput, "no defining polynomials");
    std::size_t l = 1;
    for (const auto& f : fs) {
        require_same_field(fs[0].field(), f.field());
        if (f.degree() < 1 || !f.is_monic()) return std::nullopt;
        if (!p_splits_distinct_linear(f)) return std::nullopt;
        l *= static_cast<std::size_t>(f.degree());
    }
    return l;
}

IdempotentBasis tensor_idempotents(const std::vector<std::vector<RingElement>>& sets,
                                   const std::vector<std::size_t>& dims) {
    if (sets.empty() || sets.size() != dims.size())
        throw Error(Errc::InvalidFactorBasis, "need one idempotent family per factor");
    for (std::size_t s = 0; s < sets.size(); ++s) {
        if (sets[s].size() != dims[s] || !verify_idempotent_basis(sets[s]))
            throw Error(Errc::InvalidFactorBasis, "factor " + std::to_string(s + 1) + " is not a valid family");
    }
    const Field f = sets[0][0].field();
    std::vector<RingElement> acc = sets[0];
    std::size_t acc_dim = dims[0];
    for (std::size_t s = 1; s < sets.size(); ++s) {
        const auto& right = sets[s];
        const std::size_t rd = dims[s];
        std::vector<RingElement> next;
        next.reserve(acc_dim * rd);
        // index i + (j-1) * acc_dim, i.e. the left factor varies fastest.
        for (std::size_t j = 0; j < rd; ++j)
            for (std::size_t i = 0; i < acc_dim; ++i) {
                std::vector<Elem> c(acc_dim * rd);
                for (std::size_t b = 0; b < rd; ++b)
                    for (std::size_t a = 0; a < acc_dim; ++a)
                        c[a + b * acc_dim] = f.mul(acc[i][a], right[j][b]);
                next.emplace_back(f, std::move(c));
            }
        acc = std::move(next);
        acc_dim *= rd;
    }
    return make_idempotent_basis(std::move(acc));
}

RingPoly::RingPoly(Field field, std::size_t l, std::vector<RingElement> coeffs)
    : field_(std::move(field)), l_(l), c_(std::move(coeffs)) {
    trim();
}

RingPoly RingPoly::from_components(const Field& f, const std::vector<Poly>& comps) {
    const std::size_t l = comps.size();
    std::size_t len = 0;
    for (const auto& p : comps) len = std::max(len, p.coeffs().size());
    std::vector<RingElement> c;
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<Elem> v(l);
        for (std::size_t i = 0; i < l; ++i) v[i] = comps[i].coeff(k);
        c.emplace_back(f, std::move(v));
    }
    return RingPoly(f, l, std::move(c));
}

void RingPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingElement RingPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : RingElement::zero(field_, l_);
}

int RingPoly::degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return RingPoly(a.field_, a.l_, {});
    std::vector<RingElement> out(a.c_.size() + b.c_.size() - 1, RingElement::zero(a.field_, a.l_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RingPoly(a.field_, a.l_, std::move(out));
}

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return RingPoly(a.field_, a.l_, std::move(out));
}

RingPoly RingPoly::mod_monic(const RingPoly& m) const {
    if (m.c_.empty() || m.c_.back() != RingElement::one(field_, l_))
        throw Error(Errc::NotMonic, "ring modulus must be monic");
    std::vector<RingElement> r = c_;
    const std::size_t dm = m.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > dm;) {
        RingElement t = r[k];
        if (t.is_zero()) continue;
        for (std::size_t j = 0; j <= dm; ++j) r[k - dm + j] -= t * m.c_[j];
    }
    if (r.size() > dm) r.resize(dm, RingElement::zero(field_, l_));
    return RingPoly(field_, l_, std::move(r));
}

RingVector RingPoly::to_vector(std::size_t n) const {
    std::vector<RingElement> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(coeff(i));
    return RingVector(field_, l_, std::move(e));
}

RingPoly RingPoly::from_vector(const RingVector& v) { return RingPoly(v.field(), v.l(), v.entries()); }

}  // namespace polycyclic
