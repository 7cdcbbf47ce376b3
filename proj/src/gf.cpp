#include "polycyclic/gf.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "polycyclic/error.hpp"

namespace polycyclic {

namespace detail {

struct FieldTables {
    unsigned p = 0;
    unsigned m = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    Elem primitive = 1;
    std::vector<Elem> exp;            // 2(q-1) entries
    std::vector<std::uint32_t> log;   // q entries, log[0] unused
    std::vector<std::uint16_t> add;   // q*q entries for small extension fields
    std::vector<Elem> neg;
};

}  // namespace detail

namespace {

using Digits = std::vector<unsigned>;

Digits to_digits(Elem a, unsigned p, unsigned m) {
    Digits d(m);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem from_digits(const Digits& d, unsigned p) {
    Elem v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

Elem digit_add(Elem a, Elem b, unsigned p, unsigned m) {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

// Product in F_p[u]/(modulus) on digit vectors; modulus is monic of degree m.
Elem slow_mul(Elem a, Elem b, unsigned p, unsigned m, const std::vector<unsigned>& modulus) {
    if (m == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    Digits x = to_digits(a, p, m), y = to_digits(b, p, m);
    std::vector<unsigned> prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (unsigned k = 2 * m - 2; k >= m; --k) {
        unsigned c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < m; ++j)
            prod[k - m + j] = (prod[k - m + j] + (p - (c * modulus[j]) % p)) % p;
    }
    prod.resize(m);
    return from_digits(prod, p);
}

// Monic `f` (ascending, over F_p) has no monic factor of degree 1..deg/2.
bool irreducible_over_prime(const std::vector<unsigned>& f, unsigned p) {
    const unsigned n = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; d <= n / 2; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned c = 0; c < count; ++c) {
            std::vector<unsigned> g(d + 1);
            unsigned t = c;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            std::vector<unsigned> r = f;
            for (int k = static_cast<int>(n); k >= static_cast<int>(d); --k) {
                unsigned lead = r[k];
                if (lead == 0) continue;
                for (unsigned j = 0; j <= d; ++j)
                    r[k - d + j] = (r[k - d + j] + p - (lead * g[j]) % p) % p;
            }
            if (std::all_of(r.begin(), r.end(), [](unsigned v) { return v == 0; })) return false;
        }
    }
    return true;
}

// Powers of `g` cycle through every nonzero element exactly once.
bool fill_exp(detail::FieldTables& t, Elem g) {
    const unsigned order = t.q - 1;
    t.exp.assign(2 * static_cast<std::size_t>(order), 0);
    t.log.assign(t.q, 0);
    std::vector<bool> seen(t.q, false);
    Elem cur = 1;
    for (unsigned k = 0; k < order; ++k) {
        if (seen[cur]) return false;
        seen[cur] = true;
        t.exp[k] = cur;
        t.log[cur] = k;
        cur = slow_mul(cur, g, t.p, t.m, t.modulus);
    }
    if (cur != 1) return false;
    for (unsigned k = 0; k < order; ++k) t.exp[k + order] = t.exp[k];
    return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m) {
    if (p == 2 && m == 2) return {1, 1, 1};
    if (p == 2 && m == 3) return {1, 1, 0, 1};
    if (p == 3 && m == 2) return {2, 2, 1};
    // First primitive polynomial in code order.
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned c = 1; c < count; ++c) {
        std::vector<unsigned> f(m + 1);
        unsigned v = c;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[m] = 1;
        if (f[0] == 0 || !irreducible_over_prime(f, p)) continue;
        detail::FieldTables probe;
        probe.p = p;
        probe.m = m;
        probe.q = count;
        probe.modulus = f;
        if (fill_exp(probe, p)) return f;
    }
    throw Error(Errc::ReducibleModulus, "no primitive polynomial found");
}

std::string trim(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

bool is_prime(unsigned v) noexcept {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

Field Field::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::UnsupportedSize, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw Error(Errc::UnsupportedSize, "q exceeds 2^16");
    }
    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<unsigned>(q);
    if (m > 1) {
        if (modulus) {
            auto f = *modulus;
            for (auto& c : f) c %= p;
            while (!f.empty() && f.back() == 0) f.pop_back();
            if (f.size() != m + 1 || f.back() != 1)
                throw Error(Errc::NotMonic, "field modulus must be monic of degree " + std::to_string(m));
            if (!irreducible_over_prime(f, p))
                throw Error(Errc::ReducibleModulus, "field modulus is reducible over F_" + std::to_string(p));
            t->modulus = std::move(f);
        } else {
            t->modulus = default_modulus(p, m);
        }
    }
    if (t->q == 2) {
        fill_exp(*t, 1);
        t->primitive = 1;
    } else {
        // Prefer u itself (code p) when it is primitive.
        Elem first = m > 1 ? p : 2;
        bool found = fill_exp(*t, first);
        Elem g = first;
        for (Elem c = 2; !found && c < t->q; ++c) {
            g = c;
            found = fill_exp(*t, c);
        }
        if (!found) throw Error(Errc::ReducibleModulus, "no primitive element");
        t->primitive = g;
    }
    t->neg.resize(t->q);
    for (Elem a = 0; a < t->q; ++a) {
        Digits d = to_digits(a, p, m);
        for (auto& x : d) x = (p - x) % p;
        t->neg[a] = from_digits(d, p);
    }
    if (p != 2 && m > 1 && t->q <= 1024) {
        t->add.resize(static_cast<std::size_t>(t->q) * t->q);
        for (Elem a = 0; a < t->q; ++a)
            for (Elem b = 0; b < t->q; ++b)
                t->add[static_cast<std::size_t>(a) * t->q + b] = static_cast<std::uint16_t>(digit_add(a, b, p, m));
    }
    return Field(std::move(t));
}

unsigned Field::p() const noexcept { return t_->p; }
unsigned Field::m() const noexcept { return t_->m; }
unsigned Field::q() const noexcept { return t_->q; }
const std::vector<unsigned>& Field::modulus() const noexcept { return t_->modulus; }
Elem Field::primitive() const noexcept { return t_->primitive; }

Elem Field::add(Elem a, Elem b) const noexcept {
    if (t_->p == 2) return a ^ b;
    if (t_->m == 1) {
        Elem s = a + b;
        return s >= t_->p ? s - t_->p : s;
    }
    if (!t_->add.empty()) return t_->add[static_cast<std::size_t>(a) * t_->q + b];
    return digit_add(a, b, t_->p, t_->m);
}

Elem Field::neg(Elem a) const noexcept { return t_->neg[a]; }

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return 1;
    if (a == 0) return 0;
    const long long order = t_->q - 1;
    return t_->exp[static_cast<std::size_t>((static_cast<long long>(t_->log[a]) * (e % order)) % order)];
}

Elem Field::from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(t_->p);
    if (r < 0) r += t_->p;
    return static_cast<Elem>(r);
}

Elem Field::generator_u() const noexcept { return t_->m > 1 ? t_->p : from_int(t_->p); }

unsigned Field::log(Elem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "log of zero");
    return t_->log[a];
}

std::string Field::format(Elem a) const { return std::to_string(a); }

Elem Field::parse(std::string_view text) const {
    std::string s = trim(text);
    if (s.empty()) throw Error(Errc::ParseError, "empty field element");
    bool negative = false;
    std::string body = s;
    if (body[0] == '-') {
        negative = true;
        body = body.substr(1);
    }
    if (!body.empty() && std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        unsigned long long v = std::stoull(body);
        Elem e;
        if (m() == 1) {
            e = static_cast<Elem>(v % p());
        } else {
            if (v >= q()) throw Error(Errc::ParseError, "element code out of range: " + body);
            e = static_cast<Elem>(v);
        }
        return negative ? neg(e) : e;
    }
    // Sum of terms c*u^k with c an integer taken mod p.
    Elem total = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        bool minus = false;
        if (s[i] == '+' || s[i] == '-') {
            minus = s[i] == '-';
            ++i;
        }
        long long coeff = 1;
        bool have_coeff = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coeff = std::stoll(s.substr(start, i - start));
            have_coeff = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        long long power = 0;
        if (i < s.size() && s[i] == 'u') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == ps) throw Error(Errc::ParseError, "missing exponent in " + s);
                power = std::stoll(s.substr(ps, i - ps));
            }
        } else if (!have_coeff) {
            throw Error(Errc::ParseError, "cannot parse field element '" + s + "'");
        }
        Elem term = mul(from_int(coeff), pow(m() > 1 ? generator_u() : 1, power));
        total = minus ? sub(total, term) : add(total, term);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw Error(Errc::ParseError, "unexpected character in '" + s + "'");
    }
    return total;
}

bool Field::operator==(const Field& other) const noexcept {
    if (t_ == other.t_) return true;
    return t_->p == other.t_->p && t_->m == other.t_->m && t_->modulus == other.t_->modulus;
}

void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

}  // namespace polycyclic
