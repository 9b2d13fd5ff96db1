#include <doctest.h>

#include <random>

#include "symcomb/monomial.hpp"

using namespace symcomb;

namespace {

simplicial_complex k3() {
    return simplicial_complex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
}

simplicial_complex c6() {
    return simplicial_complex::from_facets(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
}

simplicial_complex u24() {
    return simplicial_complex::from_facets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("minimal generators") {
    monomial_ideal a(2, {{1, 0}, {1, 1}, {0, 2}});
    CHECK(a.generators() == std::vector<monomial>{{1, 0}, {0, 2}});
    CHECK_THROWS_AS(monomial_ideal(2, {{0, 0}}), unit_ideal);
    CHECK(monomial_ideal().is_zero());
}

TEST_CASE("intersect") {
    monomial_ideal a(3, {{1, 0, 0}, {0, 1, 0}});  // (x1, x2)
    monomial_ideal b(3, {{0, 1, 0}, {0, 0, 1}});  // (x2, x3)
    auto c = intersect(a, b);
    CHECK(c.generators() == std::vector<monomial>{{0, 1, 0}, {1, 0, 1}});
    CHECK(intersect(a, a) == a);

    // (x1,x2)^2 n (x2,x3)^2 n (x1,x3)^2
    auto p12 = prime_power({1, 2}, 2, 3);
    auto p23 = prime_power({2, 3}, 2, 3);
    auto p13 = prime_power({1, 3}, 2, 3);
    auto inter = intersect(intersect(p12, p23), p13);
    CHECK(inter.generators() ==
          std::vector<monomial>{{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
}

TEST_CASE("membership matches intersection") {
    std::mt19937_64 rng(3);
    monomial_ideal a(3, {{2, 0, 0}, {0, 1, 1}});
    monomial_ideal b(3, {{1, 1, 0}, {0, 0, 2}});
    auto c = intersect(a, b);
    for (int trial = 0; trial < 500; ++trial) {
        monomial m(3);
        for (auto& e : m) e = static_cast<int>(rng() % 7);
        CHECK(membership(m, c) == (membership(m, a) && membership(m, b)));
    }
}

TEST_CASE("symbolic powers of the triangle") {
    auto j1 = symbolic_power(k3(), {1, 1, 1}, 1);
    CHECK(j1.generators() == std::vector<monomial>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    auto j2 = symbolic_power(k3(), {1, 1, 1}, 2);
    CHECK(j2.generators().size() == 4);
    CHECK(j2.contains({1, 1, 1}));

    auto jsq = power(j1, 2);
    for (const auto& g : jsq.generators()) CHECK(total_degree(g) == 4);
    CHECK_FALSE(jsq.contains({1, 1, 1}));
    CHECK_THROWS_AS(power(j1, 0), nonpositive_k);
}

TEST_CASE("radical") {
    monomial_ideal a(3, {{2, 1, 0}, {0, 0, 3}});
    CHECK(radical(a).generators() == std::vector<monomial>{{0, 0, 1}, {1, 1, 0}});
    CHECK(radical(radical(a)) == radical(a));
    // radical of a symbolic power is the k = 1 cover ideal
    for (long k = 1; k <= 3; ++k)
        CHECK(radical(symbolic_power(k3(), {2, 1, 3}, k)) == symbolic_power(k3(), {1, 1, 1}, 1));
}

TEST_CASE("stanley-reisner and cover ideals") {
    auto j = cover_ideal(c6());
    monomial_ideal direct;
    for (size_t i = 0; i < c6().facets().size(); ++i) {
        auto p = prime_power_mask(c6().facets()[i], 1, 6);
        direct = i == 0 ? p : intersect(direct, p);
    }
    CHECK(j == direct);

    // I_Delta = J(dual), both directions, on pure complexes
    for (const auto& cx : {u24(), c6(), k3()}) {
        if (cx.n() <= static_cast<int>(vertices_of(cx.facets().front()).size())) continue;
        CHECK(stanley_reisner(cx) == cover_ideal(dual(cx)));
        CHECK(stanley_reisner(dual(cx)) == cover_ideal(cx));
    }

    CHECK(complex_of(stanley_reisner(c6())) == c6());
    CHECK(complex_of(stanley_reisner(u24())) == u24());
    CHECK_THROWS_AS(complex_of(monomial_ideal(2, {{2, 0}})), not_square_free);
}

TEST_CASE("height and dim") {
    auto hd = height_and_dim(stanley_reisner(u24()));
    CHECK(hd.height == 2);
    CHECK(hd.dim == 2);
    auto hd2 = height_and_dim(cover_ideal(c6()));
    CHECK(hd2.height == 2);
    CHECK(hd2.dim == 4);
    monomial_ideal principal(4, {{2, 0, 0, 0}});
    auto hd3 = height_and_dim(principal);
    CHECK(hd3.height == 1);
    CHECK(hd3.dim == 3);
}

TEST_CASE("height_and_dim matches complex dimension") {
    for (const auto& cx : {u24(), c6(), k3()})
        CHECK(height_and_dim(stanley_reisner(cx)).dim == cx.dimension() + 1);
}

TEST_CASE("symbolic vs ordinary") {
    auto res = symbolic_vs_ordinary(k3(), {1, 1, 1}, 2);
    REQUIRE_FALSE(res.equal);
    CHECK(*res.witness == monomial{1, 1, 1});

    CHECK(symbolic_vs_ordinary(k3(), {1, 1, 1}, 1).equal);
    CHECK(symbolic_vs_ordinary(c6(), {1, 1, 1}, 1).equal);

    auto single = simplicial_complex::from_facets(2, {{1, 2}});
    CHECK(symbolic_vs_ordinary(single, {1}, 3).equal);
}

TEST_CASE("symbolic contains ordinary power") {
    for (const auto& cx : {k3(), u24()}) {
        std::vector<long> w(cx.facets().size(), 1);
        auto base = symbolic_power(cx, w, 1);
        for (long k = 1; k <= 3; ++k) {
            auto symb = symbolic_power(cx, w, k);
            auto ord = power(base, k);
            for (const auto& g : ord.generators()) CHECK(symb.contains(g));
        }
    }
}
