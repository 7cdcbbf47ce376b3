#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polycyclic/error.hpp"
#include "polycyclic/poly.hpp"

using namespace polycyclic;

namespace {

Poly P(const Field& f, const char* s) { return Poly::parse(f, s); }

}  // namespace

TEST_CASE("arithmetic") {
    Field f2 = Field::make(2);
    auto [q, r] = p_divmod(P(f2, "x^7+1"), P(f2, "x+1"));
    CHECK(q == P(f2, "x^6+x^5+x^4+x^3+x^2+x+1"));
    CHECK(r.is_zero());

    Field f7 = Field::make(7);
    CHECK(P(f7, "x^2+5x+3") * P(f7, "x+2") == P(f7, "x^3+6x+6"));
    CHECK(P(f7, "x^3+6x+6").to_string() == "x^3+6x+6");
    CHECK(P(f7, "x^3+6x+6").to_list_string() == "[6,6,0,1]");
    CHECK(P(f7, "[6,6,0,1]") == P(f7, "x^3+6x+6"));
    CHECK(P(f7, "2*x^3 - x") == P(f7, "[0,6,0,2]"));
    CHECK(P(f7, "(x+1)^2") == P(f7, "x^2+2x+1"));

    Poly f = P(f7, "3x^4+2x+5");
    CHECK(p_gcd(f, Poly(f7)) == f.monic());
    CHECK(p_gcd(Poly(f7), Poly(f7)).is_zero());
    CHECK(p_gcd(P(f7, "x^2-1"), P(f7, "x^2+2x+1")) == P(f7, "x+1"));
    CHECK(f.eval(1) == 3);
    CHECK(f.derivative() == P(f7, "12x^3+2"));

    CHECK_THROWS_AS(p_divmod(f, Poly(f7)), Error);
    CHECK_THROWS_AS(f + P(f2, "x"), Error);
    CHECK_THROWS_AS(p_exact_div(P(f7, "x^2+1"), P(f7, "x+1")), Error);
}

TEST_CASE("division identity on random inputs") {
    std::mt19937_64 rng(1);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {7, 1}}) {
        Field f = Field::make(p, m);
        for (int i = 0; i < 200; ++i) {
            Poly a = oracle::random_poly(f, static_cast<int>(rng() % 10), rng);
            Poly b = oracle::random_poly(f, static_cast<int>(rng() % 5), rng);
            auto [q, r] = p_divmod(a, b);
            REQUIRE(q * b + r == a);
            REQUIRE(r.degree() < b.degree());
        }
    }
}

TEST_CASE("factorization examples") {
    Field f2 = Field::make(2);
    Factorization a = p_factor(P(f2, "x^7+1"));
    REQUIRE(a.factors.size() == 3);
    CHECK(a.factors[0].poly == P(f2, "x+1"));
    CHECK(a.factors[1].poly == P(f2, "x^3+x+1"));
    CHECK(a.factors[2].poly == P(f2, "x^3+x^2+1"));
    CHECK(a.to_string() == "1 * (x+1)^1 * (x^3+x+1)^1 * (x^3+x^2+1)^1");

    Field f5 = Field::make(5);
    Factorization b = p_factor(P(f5, "x^5-1"));
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].poly == P(f5, "x+4"));
    CHECK(b.factors[0].multiplicity == 5);

    Factorization c = p_factor(Poly::constant(f5, 3));
    CHECK(c.unit == 3);
    CHECK(c.factors.empty());

    CHECK(p_is_squarefree(P(f2, "x^7+1")));
    CHECK_FALSE(p_is_squarefree(P(f5, "x^5-1")));
    CHECK(p_is_squarefree(P(Field::make(3), "x+2")));
    CHECK_THROWS_AS(p_is_squarefree(Poly(f5)), Error);

    // p-th powers in characteristic p have zero derivative.
    Field f3 = Field::make(3);
    Factorization d = p_factor(P(f3, "(x^2+1)^3*(x+1)"));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[1].multiplicity == 3);
}

TEST_CASE("factorization agrees with trial division") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field f = Field::make(p, m);
        for (int i = 0; i < 40; ++i) {
            Poly a = oracle::random_poly(f, 1 + static_cast<int>(rng() % 8), rng);
            Factorization x = p_factor(a, rng());
            Factorization y = p_factor_trial(a);
            REQUIRE(x.unit == y.unit);
            REQUIRE(x.factors.size() == y.factors.size());
            for (std::size_t j = 0; j < x.factors.size(); ++j) {
                CHECK(x.factors[j].poly == y.factors[j].poly);
                CHECK(x.factors[j].multiplicity == y.factors[j].multiplicity);
                CHECK(p_is_irreducible(x.factors[j].poly));
            }
            CHECK(x.expand(f) == a);
            ++checked;
        }
    }
    CHECK(checked == 280);
}

TEST_CASE("divisors") {
    Field f5 = Field::make(5);
    auto d = p_divisors(p_factor(P(f5, "x^5-1")), f5);
    REQUIRE(d.size() == 6);
    CHECK(d.front().is_one());
    CHECK(d[1] == P(f5, "x+4"));
    CHECK(d.back() == P(f5, "x^5-1"));

    Field f2 = Field::make(2);
    CHECK(p_divisors(p_factor(P(f2, "x^7+1")), f2).size() == 8);
    CHECK(p_divisors(p_factor(Poly::constant(f2, 1)), f2).size() == 1);

    std::mt19937_64 rng(5);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {3, 2}}) {
        Field f = Field::make(p, m);
        for (int i = 0; i < 30; ++i) {
            Poly a = oracle::random_poly(f, 1 + static_cast<int>(rng() % 10), rng).monic();
            Factorization fz = p_factor(a);
            std::size_t expected = 1;
            for (const auto& fac : fz.factors) expected *= fac.multiplicity + 1;
            auto divs = p_divisors(fz, f);
            CHECK(divs.size() == expected);
            CHECK(std::is_sorted(divs.begin(), divs.end()));
            std::set<std::vector<Elem>> uniq;
            for (const auto& dv : divs) {
                CHECK(p_divides(dv, a));
                uniq.insert(dv.coeffs());
            }
            CHECK(uniq.size() == divs.size());
        }
    }
}

TEST_CASE("distinct linear splitting and Lagrange idempotents") {
    Field f3 = Field::make(3);
    auto roots = p_splits_distinct_linear(P(f3, "x^2-1"));
    REQUIRE(roots);
    CHECK(*roots == std::vector<Elem>{1, 2});
    Field f5 = Field::make(5);
    CHECK_FALSE(p_splits_distinct_linear(P(f5, "x^5-1")));
    CHECK_FALSE(p_splits_distinct_linear(P(Field::make(2), "x^2+x+1")));
    CHECK_THROWS_AS(p_splits_distinct_linear(P(f5, "2x+1")), Error);

    auto e = p_lagrange_idempotents(f3, {1, 2});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == P(f3, "2x+2"));
    CHECK(e[1] == P(f3, "x+2"));
    CHECK(p_lagrange_idempotents(f3, {2}).front().is_one());
    CHECK_THROWS_AS(p_lagrange_idempotents(f3, {1, 1}), Error);

    auto five = p_lagrange_idempotents(f5, {0, 1, 2, 3, 4});
    Poly mod = P(f5, "x^5-x");
    Poly sum(f5);
    for (std::size_t i = 0; i < 5; ++i) {
        sum += five[i];
        CHECK(p_mulmod(five[i], five[i], mod) == five[i]);
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) CHECK(p_mulmod(five[i], five[j], mod).is_zero());
    }
    CHECK(p_mod(sum, mod).is_one());

    // Splitting test agrees with the factorization.
    std::mt19937_64 rng(9);
    Field f7 = Field::make(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = oracle::random_poly(f7, 1 + static_cast<int>(rng() % 6), rng).monic();
        Factorization fz = p_factor(a);
        bool all_simple_linear = std::all_of(fz.factors.begin(), fz.factors.end(), [](const Factor& x) {
            return x.poly.degree() == 1 && x.multiplicity == 1;
        });
        CHECK(p_splits_distinct_linear(a).has_value() == all_simple_linear);
    }
}
