#include "polycyclic/span.hpp"

#include <algorithm>
#include <limits>

#include "polycyclic/error.hpp"

namespace polycyclic {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, q);
    return r;
}

std::uint64_t pack(std::span<const Elem> v, unsigned q) {
    std::uint64_t code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * q + *it;
    return code;
}

Vec unpack(std::uint64_t code, unsigned q, std::size_t len) {
    Vec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = static_cast<Elem>(code % q);
        code /= q;
    }
    return v;
}

void for_each_in_span(const Matrix& rows, std::uint64_t budget, const std::function<void(const Vec&)>& visit) {
    const Field& f = rows.field();
    Matrix basis = rref(rows);
    const std::size_t k = basis.rows();
    if (saturating_pow(f.q(), k) > budget)
        throw Error(Errc::BudgetExceeded, "span of dimension " + std::to_string(k) + " exceeds budget");
    Vec coeff(k, 0);
    Vec cur(rows.cols(), 0);
    while (true) {
        visit(cur);
        // Odometer over coefficient vectors; recompute the running sum for
        // the digit that changed.
        std::size_t i = 0;
        while (i < k) {
            Elem old = coeff[i];
            Elem next = old + 1 == f.q() ? 0 : old + 1;
            coeff[i] = next;
            for (std::size_t c = 0; c < cur.size(); ++c)
                cur[c] = f.add(f.sub(cur[c], f.mul(old, basis(i, c))), f.mul(next, basis(i, c)));
            if (next != 0) break;
            ++i;
        }
        if (i == k) break;
    }
}

std::vector<std::uint64_t> span_set(const Matrix& rows, std::uint64_t budget) {
    std::vector<std::uint64_t> out;
    const unsigned q = rows.field().q();
    for_each_in_span(rows, budget, [&](const Vec& v) { out.push_back(pack(v, q)); });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_vector(const Field& f, std::size_t len, std::uint64_t budget,
                     const std::function<void(const Vec&)>& visit) {
    if (saturating_pow(f.q(), len) > budget)
        throw Error(Errc::BudgetExceeded, "ambient space exceeds budget");
    Vec v(len, 0);
    while (true) {
        visit(v);
        std::size_t i = 0;
        while (i < len) {
            v[i] = v[i] + 1 == f.q() ? 0 : v[i] + 1;
            if (v[i] != 0) break;
            ++i;
        }
        if (i == len) break;
    }
}

void for_each_vector_times(const Matrix& m, std::uint64_t budget,
                           const std::function<void(const Vec& v, const Vec& vm)>& visit) {
    const Field& f = m.field();
    const std::size_t len = m.rows(), cols = m.cols();
    if (saturating_pow(f.q(), len) > budget)
        throw Error(Errc::BudgetExceeded, "ambient space exceeds budget");
    Vec v(len, 0), vm(cols, 0);
    while (true) {
        visit(v, vm);
        std::size_t i = 0;
        for (; i < len; ++i) {
            const Elem old = v[i];
            v[i] = old + 1 == f.q() ? 0 : old + 1;
            const Elem delta = f.sub(v[i], old);
            const auto row = m.row(i);
            for (std::size_t j = 0; j < cols; ++j)
                if (row[j] != 0) vm[j] = f.add(vm[j], f.mul(delta, row[j]));
            if (v[i] != 0) break;
        }
        if (i == len) break;
    }
}

}  // namespace polycyclic
