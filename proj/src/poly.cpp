#include "polycyclic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polycyclic/error.hpp"

namespace polycyclic {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (!field_.contains(c)) throw Error(Errc::FieldMismatch, "coefficient code out of range");
    trim();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, std::size_t degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem s) const {
    Poly r(field_);
    if (s == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.mul(c_[i], s);
    r.trim();
    return r;
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    r.trim();
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    Poly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    const Field& f = a.field_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = field_.neg(c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Elem c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (k == 0 || c != 1) os << field_.format(c);
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::string Poly::to_list_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
}

namespace {

// Recursive-descent parser for polynomial expressions in x (with u as a
// constant of the field).
class PolyParser {
public:
    PolyParser(const Field& f, std::string s) : f_(f), s_(std::move(s)) {}

    Poly run() {
        Poly r = expr();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError, why + " in polynomial '" + s_ + "' at " + std::to_string(pos_));
    }
    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool starts_atom() const {
        return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 'x' ||
                                    s_[pos_] == 'u' || s_[pos_] == '(');
    }

    Poly expr() {
        Poly acc(f_);
        bool first = true;
        while (true) {
            bool minus = false;
            if (at('+') || at('-')) {
                minus = at('-');
                ++pos_;
            } else if (!first) {
                break;
            }
            Poly t = term();
            acc = minus ? acc - t : acc + t;
            first = false;
            if (!(at('+') || at('-'))) break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (at('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (at('^')) {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("missing exponent");
            base = p_pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Poly atom() {
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return Poly::x(f_);
        }
        if (c == 'u') {
            ++pos_;
            if (f_.m() == 1) fail("'u' used over a prime field");
            return Poly::constant(f_, f_.generator_u());
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!at(')')) fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(f_, f_.parse(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const Field& f_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const Field& f, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
    if (s.front() == '[') {
        if (s.back() != ']') throw Error(Errc::ParseError, "unterminated coefficient list");
        std::vector<Elem> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(f.parse(item));
        return Poly(f, std::move(coeffs));
    }
    return PolyParser(f, s).run();
}

std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Elem> quot(r.size() - db, 0);
    const Elem lead_inv = f.inv(b.lead());
    for (std::size_t k = r.size(); k-- > db;) {
        Elem c = r[k];
        if (c == 0) continue;
        Elem t = f.mul(c, lead_inv);
        quot[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(t, bc[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly p_mod(const Poly& a, const Poly& b) { return p_divmod(a, b).second; }

Poly p_gcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = p_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool p_divides(const Poly& d, const Poly& f) {
    if (d.is_zero()) return f.is_zero();
    return p_mod(f, d).is_zero();
}

Poly p_exact_div(const Poly& a, const Poly& b) {
    auto [quot, rem] = p_divmod(a, b);
    if (!rem.is_zero()) throw Error(Errc::NotADivisor, b.to_string() + " does not divide " + a.to_string());
    return quot;
}

Poly p_pow(const Poly& a, unsigned e) {
    Poly result = Poly::constant(a.field(), 1);
    Poly base = a;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly p_mulmod(const Poly& a, const Poly& b, const Poly& mod) { return p_mod(a * b, mod); }

Poly p_powmod(const Poly& a, std::uint64_t e, const Poly& mod) {
    Poly result = p_mod(Poly::constant(a.field(), 1), mod);
    Poly base = p_mod(a, mod);
    while (e) {
        if (e & 1u) result = p_mulmod(result, base, mod);
        e >>= 1;
        if (e) base = p_mulmod(base, base, mod);
    }
    return result;
}

Poly Factorization::expand(const Field& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& fac : factors) r = r * p_pow(fac.poly, fac.multiplicity);
    return r;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    os << unit;
    for (const auto& fac : factors) os << " * (" << fac.poly.to_string() << ")^" << fac.multiplicity;
    return os.str();
}

std::vector<Poly> p_divisors(const Factorization& fz, const Field& field) {
    std::vector<Poly> out{Poly::constant(field, 1)};
    for (const auto& fac : fz.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (fac.multiplicity + 1));
        for (const auto& d : out) {
            Poly cur = d;
            next.push_back(cur);
            for (unsigned e = 1; e <= fac.multiplicity; ++e) {
                cur = cur * fac.poly;
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Elem>> p_splits_distinct_linear(const Poly& f) {
    if (f.degree() < 1) throw Error(Errc::ZeroPolynomial, "need degree >= 1");
    if (!f.is_monic()) throw Error(Errc::NotMonic, f.to_string() + " is not monic");
    std::vector<Elem> roots;
    const Field& fld = f.field();
    for (Elem r = 0; r < fld.q(); ++r)
        if (f.eval(r) == 0) roots.push_back(r);
    if (static_cast<int>(roots.size()) != f.degree()) return std::nullopt;
    return roots;
}

std::vector<Poly> p_lagrange_idempotents(const Field& f, const std::vector<Elem>& roots) {
    if (roots.empty()) throw Error(Errc::EmptyInput, "no interpolation nodes");
    std::vector<Elem> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::DuplicateRoots, "interpolation nodes must be distinct");
    std::vector<Poly> out;
    out.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Poly num = Poly::constant(f, 1);
        Elem den = 1;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            num = num * Poly(f, {f.neg(roots[j]), 1});
            den = f.mul(den, f.sub(roots[i], roots[j]));
        }
        out.push_back(num.scaled(f.inv(den)));
    }
    return out;
}

}  // namespace polycyclic
