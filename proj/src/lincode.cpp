#include "polycyclic/lincode.hpp"

#include <algorithm>

#include "polycyclic/error.hpp"
#include "polycyclic/span.hpp"

namespace polycyclic {

LinearCode lc_from_rows(const Matrix& rows) {
    if (rows.cols() == 0) throw Error(Errc::EmptyInput, "code length must be positive");
    std::vector<std::size_t> piv;
    Matrix g = rref(rows, &piv);
    return LinearCode(std::move(g), std::move(piv));
}

LinearCode lc_from_rows(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw Error(Errc::LengthMismatch, "row length differs from n");
    return lc_from_rows(Matrix(f, n, rows));
}

LinearCode lc_zero(const Field& f, std::size_t n) { return lc_from_rows(Matrix(f, 0, n)); }

LinearCode lc_dual(const LinearCode& c) { return lc_from_rows(nullspace(c.gen())); }

bool lc_contains(const LinearCode& c, const LinearCode& d) {
    require_same_field(c.field(), d.field());
    if (c.n() != d.n()) throw Error(Errc::LengthMismatch, "codes have different lengths");
    return rank(vstack(c.gen(), d.gen())) == c.k();
}

bool lc_is_member(const LinearCode& c, const Vec& v) {
    if (v.size() != c.n()) throw Error(Errc::LengthMismatch, "vector length differs from n");
    Matrix m = c.gen();
    m.append_row(v);
    return rank(m) == c.k();
}

namespace {

struct XorAdd {
    Elem operator()(Elem a, Elem b) const noexcept { return a ^ b; }
};
struct PrimeAdd {
    Elem p;
    Elem operator()(Elem a, Elem b) const noexcept {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
};
struct FieldAdd {
    const Field* f;
    Elem operator()(Elem a, Elem b) const noexcept { return f->add(a, b); }
};

struct SparseRow {
    std::vector<std::uint32_t> idx;
    std::vector<Elem> val;
};

// Projective enumeration over the F_p-span of `basis`: for each top index T
// the codewords B_T + sum_{t<T} c_t B_t are visited in modular p-ary Gray
// order, one row addition per step.
template <class Add>
std::size_t gray_min_weight(const std::vector<Vec>& basis, unsigned p, std::size_t n, Add add) {
    std::vector<SparseRow> rows;
    for (const auto& b : basis) {
        SparseRow r;
        for (std::size_t c = 0; c < n; ++c)
            if (b[c] != 0) {
                r.idx.push_back(static_cast<std::uint32_t>(c));
                r.val.push_back(b[c]);
            }
        rows.push_back(std::move(r));
    }
    std::size_t best = n + 1;
    Vec cur(n);
    std::vector<unsigned> digit;
    for (std::size_t top = 0; top < rows.size() && best > 1; ++top) {
        std::fill(cur.begin(), cur.end(), 0);
        for (std::size_t j = 0; j < rows[top].idx.size(); ++j) cur[rows[top].idx[j]] = rows[top].val[j];
        std::size_t w = rows[top].idx.size();
        if (w > 0 && w < best) best = w;
        digit.assign(top, 0);
        while (best > 1) {
            std::size_t t = 0;
            while (t < top && digit[t] == p - 1) digit[t++] = 0;
            if (t == top) break;
            ++digit[t];
            const SparseRow& r = rows[t];
            for (std::size_t j = 0; j < r.idx.size(); ++j) {
                Elem& e = cur[r.idx[j]];
                const bool before = e != 0;
                e = add(e, r.val[j]);
                w += static_cast<std::size_t>(e != 0) - static_cast<std::size_t>(before);
            }
            if (w < best && w > 0) best = w;
        }
    }
    return best;
}

std::size_t exhaustive_min_weight(const LinearCode& c) {
    const Field& f = c.field();
    const Elem u = f.generator_u();
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < c.k(); ++i) {
        Vec row = c.gen().row_vec(i);
        for (unsigned s = 0; s < f.m(); ++s) {
            basis.push_back(row);
            row = vec_scale(f, row, u);
        }
    }
    if (f.p() == 2) return gray_min_weight(basis, 2, c.n(), XorAdd{});
    if (f.m() == 1) return gray_min_weight(basis, f.p(), c.n(), PrimeAdd{f.p()});
    return gray_min_weight(basis, f.p(), c.n(), FieldAdd{&f});
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = saturating_mul(r, n - k + i) / i;
    return r;
}

// Messages of weight exactly w with leading nonzero entry 1.
void weight_level(const LinearCode& c, std::size_t w, std::size_t start, Vec& cur, std::size_t& best,
                  bool leading) {
    const Field& f = c.field();
    if (w == 0) {
        std::size_t wt = hamming_weight(cur);
        if (wt > 0 && wt < best) best = wt;
        return;
    }
    for (std::size_t i = start; i + w <= c.k(); ++i) {
        const auto row = c.gen().row(i);
        for (Elem a = 1; a < f.q(); ++a) {
            Vec saved = cur;
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = f.add(cur[j], f.mul(a, row[j]));
            weight_level(c, w - 1, i + 1, cur, best, false);
            cur = std::move(saved);
            if (leading) break;
        }
    }
}

}  // namespace

Distance lc_min_distance(const LinearCode& c, std::uint64_t budget) {
    if (c.k() == 0) throw Error(Errc::ZeroCode, "minimum distance of the zero code");
    if (c.d_) return *c.d_;
    const Field& f = c.field();
    if (saturating_mul(saturating_pow(f.q(), c.k()), c.n()) <= budget) {
        c.d_ = Distance{exhaustive_min_weight(c), true};
        return *c.d_;
    }
    // A codeword whose message has weight w has weight >= w on the pivot
    // columns, so after all levels up to t the distance is >= min(best, t+1).
    std::size_t best = c.n() + 1;
    std::uint64_t spent = 0;
    std::size_t level = 0;
    while (level < c.k()) {
        std::uint64_t cost = saturating_mul(
            saturating_mul(binom(c.k(), level + 1), saturating_pow(f.q() - 1, level)), c.n());
        if (cost > budget - spent) break;
        spent += cost;
        ++level;
        Vec cur(c.n(), 0);
        weight_level(c, level, 0, cur, best, true);
        if (best <= level + 1) {
            c.d_ = Distance{best, true};
            return *c.d_;
        }
    }
    if (level == c.k()) {
        c.d_ = Distance{best, true};
        return *c.d_;
    }
    return Distance{std::max<std::size_t>(1, std::min(best, level + 1)), false};
}

std::vector<std::uint64_t> lc_weight_distribution(const LinearCode& c, std::uint64_t budget) {
    const Field& f = c.field();
    std::vector<std::uint64_t> dist(c.n() + 1, 0);
    for_each_vector(f, c.k(), budget, [&](const Vec& msg) {
        Vec word = c.k() == 0 ? Vec(c.n(), 0) : vec_mat(msg, c.gen());
        ++dist[hamming_weight(word)];
    });
    return dist;
}

bool lc_is_lcd(const LinearCode& c) {
    if (c.k() == 0) return true;
    return determinant(c.gen() * c.gen().transpose()) != 0;
}

std::size_t lc_hull_dimension(const LinearCode& c) {
    LinearCode d = lc_dual(c);
    return c.k() + d.k() - rank(vstack(c.gen(), d.gen()));
}

Singleton lc_classify(const LinearCode& c, const Distance& d) {
    if (!d.exact) throw Error(Errc::DistanceNotExact, "classification needs an exact distance");
    if (d.d + c.k() == c.n() + 1) return Singleton::Mds;
    if (d.d + c.k() == c.n()) return Singleton::AlmostMds;
    return Singleton::Neither;
}

std::string singleton_name(Singleton s) {
    switch (s) {
        case Singleton::Mds: return "MDS";
        case Singleton::AlmostMds: return "A-MDS";
        case Singleton::Neither: break;
    }
    return "-";
}

}  // namespace polycyclic
