#include <doctest.h>

#include <algorithm>
#include <random>

#include "symcomb/simplicial.hpp"

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

TEST_CASE("from_facets drops non-maximal members") {
    auto cx = simplicial_complex::from_facets(4, {{1, 2}, {2}, {3, 4}});
    CHECK(cx.facet_vertices() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(k3().facets().size() == 3);
    CHECK(c6().facets().size() == 6);
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(simplicial_complex::from_facets(3, {}), empty_input);
    CHECK_THROWS_AS(simplicial_complex::from_facets(3, {{}}), empty_input);
    CHECK_THROWS_AS(simplicial_complex::from_facets(3, {{1, 4}}), vertex_out_of_range);
    CHECK_THROWS_AS(simplicial_complex::from_facets(0, {{1}}), vertex_out_of_range);
}

TEST_CASE("from_facets is idempotent on facet lists") {
    auto cx = simplicial_complex::from_facets(5, {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 3, 5}});
    auto again = simplicial_complex::from_facets(5, cx.facet_vertices());
    CHECK(cx == again);
}

TEST_CASE("dimension and purity") {
    CHECK(k3().dimension() == 1);
    CHECK(simplicial_complex::from_facets(3, {{1, 2, 3}}).dimension() == 2);
    CHECK(simplicial_complex::from_facets(3, {{1, 2}, {3}}).dimension() == 1);
    CHECK(c6().is_pure());
    CHECK(u24().is_pure());
    CHECK_FALSE(simplicial_complex::from_facets(3, {{1, 2}, {3}}).is_pure());
}

TEST_CASE("matroid detection") {
    CHECK(is_matroid(u24()).holds);
    CHECK(is_matroid(k3()).holds);
    auto res = is_matroid(c6());
    REQUIRE_FALSE(res.holds);
    REQUIRE(res.witness.has_value());
    CHECK(vertices_of(res.witness->facet_f) == std::vector<int>{1, 2});
    CHECK(vertices_of(res.witness->facet_g) == std::vector<int>{4, 5});
    CHECK(res.witness->element_i == 1);

    auto bad = simplicial_complex::from_facets(5, {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 3, 5}});
    CHECK_FALSE(is_matroid(bad).holds);
    CHECK_FALSE(bad.is_pure());
}

TEST_CASE("symmetric exchange") {
    CHECK(symmetric_exchange_holds(u24()).holds);
    CHECK(symmetric_exchange_holds(k3()).holds);
    CHECK_FALSE(symmetric_exchange_holds(c6()).holds);
}

TEST_CASE("matroid implies pure and symmetric exchange") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> sets;
        int count = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) {
            std::vector<int> s;
            for (int v = 1; v <= n; ++v)
                if (rng() % 2) s.push_back(v);
            if (!s.empty()) sets.push_back(s);
        }
        if (sets.empty()) continue;
        auto cx = simplicial_complex::from_facets(n, sets);
        if (is_matroid(cx).holds) {
            CHECK(cx.is_pure());
            CHECK(symmetric_exchange_holds(cx).holds);
        }
    }
}

TEST_CASE("dual") {
    CHECK(dual(u24()) == u24());
    auto d = dual(c6());
    CHECK(d.facets().size() == 6);
    CHECK(d.dimension() == 3);
    CHECK(dual(d) == c6());
    CHECK_THROWS_AS(dual(simplicial_complex::from_facets(2, {{1, 2}})), dual_has_empty_facet);
}

TEST_CASE("strong connectedness") {
    CHECK(is_strongly_connected(c6()));
    CHECK(is_strongly_connected(u24()));
    CHECK_FALSE(is_strongly_connected(simplicial_complex::from_facets(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("connectivity degree") {
    // Stanley-Reisner primes of the hexagon: complements of the edges.
    std::vector<std::vector<int>> primes;
    for (auto f : c6().facets()) {
        std::vector<int> p;
        for (int v = 1; v <= 6; ++v)
            if (!(f & (vertex_set{1} << (v - 1)))) p.push_back(v);
        primes.push_back(p);
    }
    CHECK(connectivity_degree(primes, 6) == 1);
    CHECK(connectivity_degree({{1, 2}, {3, 4}}, 4) == -1);
    CHECK(connectivity_degree({{4, 5}}, 5) == 3);
    CHECK_THROWS_AS(connectivity_degree({{1}, {1, 2}}, 3), comparable_primes);
}

TEST_CASE("connectivity degree is invariant under vertex relabeling") {
    std::mt19937_64 rng(11);
    std::vector<std::vector<int>> primes = {{1, 2}, {2, 3}, {3, 4}, {4, 5, 6}};
    int base = connectivity_degree(primes, 6);
    std::vector<int> perm{1, 2, 3, 4, 5, 6};
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> relabeled;
        for (const auto& p : primes) {
            std::vector<int> q;
            for (int v : p) q.push_back(perm[v - 1]);
            relabeled.push_back(q);
        }
        CHECK(connectivity_degree(relabeled, 6) == base);
    }
}

TEST_CASE("matroid duality on random pure complexes") {
    std::mt19937_64 rng(13);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 2);
        int size = 2 + static_cast<int>(rng() % 2);
        if (size >= n) continue;
        std::vector<std::vector<int>> sets;
        int count = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v + 1;
            std::shuffle(all.begin(), all.end(), rng);
            sets.push_back(std::vector<int>(all.begin(), all.begin() + size));
        }
        auto cx = simplicial_complex::from_facets(n, sets);
        auto dd = dual(cx);
        CHECK(dual(dd) == cx);
        CHECK(is_matroid(cx).holds == is_matroid(dd).holds);
        ++checked;
    }
    CHECK(checked == 200);
}
