#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "orecode/field.hpp"

using namespace orecode;

TEST_CASE("field construction") {
    auto F = FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1});
    CHECK(F->q() == 64);
    CHECK(F->modulus() == std::vector<int>{1, 1, 0, 1, 1, 0, 1});
    CHECK(FiniteField::make(2, 1)->q() == 2);

    // default modulus is the first irreducible in (c0, c1, ...) order
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {2, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}, {2, 6}})
        CHECK(FiniteField::make(p, s)->modulus() == oracle::smallest_irreducible_scan(p, s));

    CHECK_THROWS_AS(FiniteField::make(4, 2), Error);
    try {
        FiniteField::make(2, 2, std::vector<int>{1, 0, 1});  // (x+1)^2
        FAIL("reducible modulus accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidModulus);
    }
    try {
        FiniteField::make(6, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidCharacteristic);
    }
    CHECK_THROWS_AS(FiniteField::make(2, 3, std::vector<int>{1, 1, 1}), Error);
}

TEST_CASE("size cap") {
    auto old = global_cap();
    set_global_cap(1 << 10);
    try {
        FiniteField::make(2, 11);
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
    set_global_cap(old);
}

TEST_CASE("arithmetic against schoolbook products") {
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 6}, {5, 2}, {7, 1}}) {
        auto F = FiniteField::make(p, s);
        oracle::NaiveField N(*F);
        CHECK(N.order(F->primitive()) == F->q() - 1);
        for (Elem a = 0; a < F->q(); ++a) {
            if (a) {
                CHECK(F->exp(F->log(a)) == a);
                CHECK(F->mul(a, F->inv(a)) == 1);
            }
            for (Elem b = 0; b < F->q(); ++b) {
                REQUIRE(F->mul(a, b) == N.mul(a, b));
                REQUIRE(F->add(a, b) == N.add(a, b));
            }
            CHECK(F->add(a, F->neg(a)) == 0);
        }
    }
}

TEST_CASE("primitive element is the first of full order") {
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 2}, {2, 6}, {3, 3}}) {
        auto F = FiniteField::make(p, s);
        oracle::NaiveField N(*F);
        Elem first = 0;
        for (Elem a = 2; a < F->q(); ++a)
            if (N.order(a) == F->q() - 1) {
                first = a;
                break;
            }
        if (F->q() == 3) first = 2;
        CHECK(F->primitive() == first);
    }
}

TEST_CASE("automorphisms") {
    auto F4 = FiniteField::make(2, 2);
    FieldAutomorphism tau(F4, 1);
    Elem w = F4->primitive();
    CHECK(tau.apply(w) == F4->mul(w, w));
    CHECK(tau.apply(w, 0) == w);

    auto F64 = FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1});
    FieldAutomorphism s1(F64, 1);
    CHECK(s1.order() == 6);
    Elem x = F64->primitive();
    CHECK(s1.apply(x, 6) == x);
    Elem y = x;
    for (int i = 0; i < 6; ++i) y = F64->mul(y, y);
    CHECK(y == x);
    CHECK(s1.apply(x, -1) == s1.apply(x, 5));

    // homomorphism, exhaustive for q <= 256
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 8}}) {
        auto F = FiniteField::make(p, s);
        for (unsigned r = 0; r < s; ++r) {
            FieldAutomorphism a(F, r);
            for (int k = 0; k < int(a.order()); ++k)
                for (Elem u = 0; u < F->q(); u += (F->q() > 64 ? 7 : 1))
                    for (Elem v = 0; v < F->q(); ++v) {
                        REQUIRE(a.apply(F->mul(u, v), k) == F->mul(a.apply(u, k), a.apply(v, k)));
                        REQUIRE(a.apply(F->add(u, v), k) == F->add(a.apply(u, k), a.apply(v, k)));
                    }
        }
    }
}

TEST_CASE("sigma norms") {
    auto F4 = FiniteField::make(2, 2);
    FieldAutomorphism tau(F4, 1);
    Elem w = F4->primitive();
    CHECK(sigma_norm(tau, w, 0) == 1);
    CHECK(sigma_norm(tau, w, 2) == 1);

    auto F64 = FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1});
    FieldAutomorphism s1(F64, 1);
    Elem g = F64->primitive();
    CHECK(sigma_norm(s1, g, 3) == F64->exp(7));
    oracle::NaiveField N(*F64);
    CHECK(sigma_norm(s1, g, 3) == oracle::norm(N, 1, g, 3));

    CHECK_THROWS_AS(sigma_norm(s1, 0, -1), Error);

    // additivity N_{i+j} = N_i sigma^i(N_j), exhaustive for q <= 64
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 6}}) {
        auto F = FiniteField::make(p, s);
        oracle::NaiveField NF(*F);
        for (unsigned r = 0; r < s; ++r) {
            FieldAutomorphism a(F, r);
            for (Elem x = 1; x < F->q(); ++x)
                for (int i = 0; i <= int(2 * s); ++i) {
                    REQUIRE(sigma_norm(a, x, i) == oracle::norm(NF, r, x, unsigned(i)));
                    for (int j = 0; j <= int(2 * s); ++j)
                        REQUIRE(sigma_norm(a, x, i + j) == F->mul(sigma_norm(a, x, i), a.apply(sigma_norm(a, x, j), i)));
                    // negative index identity N_i sigma^i(N_{-i}) = 1
                    REQUIRE(F->mul(sigma_norm(a, x, i), a.apply(sigma_norm(a, x, -i), i)) == 1);
                }
        }
    }

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto F = FiniteField::make(2, 6);
        FieldAutomorphism a(F, unsigned(rng() % 6));
        Elem x = Elem(rng() % 64);
        int i = int(rng() % 101);
        CHECK(sigma_norm(a, x, i) == sigma_norm_product(a, x, i));
    }
}

TEST_CASE("fixed subfields") {
    auto F64 = FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1});
    for (unsigned r = 0; r < 6; ++r) {
        FieldAutomorphism a(F64, r);
        auto E = fixed_subfield(a);
        std::uint32_t expect = 1u << std::gcd(r == 0 ? 6u : r, 6u);
        CHECK(E.sub_size() == expect);
        int fixed = 0;
        for (Elem x = 0; x < 64; ++x) {
            bool f = a.apply(x) == x;
            fixed += f;
            CHECK(f == E.contains(x));
        }
        CHECK(fixed == int(expect));
    }
}

TEST_CASE("subfield decomposition") {
    auto F4 = FiniteField::make(2, 2);
    SubfieldEmbedding E(F4, 1);
    Elem w = F4->primitive();
    CHECK(E.decompose(0) == std::vector<Elem>{0, 0});
    // basis {1, w}; w^2 = w + 1
    CHECK(E.basis() == std::vector<Elem>{1, w});
    CHECK(E.decompose(F4->mul(w, w)) == std::vector<Elem>{1, 1});

    auto F64 = FiniteField::make(2, 6);
    for (unsigned t : {1u, 2u, 3u, 6u}) {
        SubfieldEmbedding S(F64, t);
        for (Elem a = 0; a < 64; ++a) {
            auto c = S.decompose(a);
            CHECK(c.size() == 6 / t);
            for (Elem x : c) CHECK(S.contains(x));
            CHECK(S.recompose(c) == a);
        }
    }

    // rank against span closure
    std::mt19937 rng(3);
    for (auto [p, s, t] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 4, 2}, {2, 6, 1}, {2, 6, 3}, {3, 2, 1}, {2, 4, 1}}) {
        auto F = FiniteField::make(p, s);
        SubfieldEmbedding S(F, t);
        oracle::NaiveField N(*F);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Elem> v(size_t(1 + rng() % 6));
            for (auto& x : v) x = Elem(rng() % F->q());
            CHECK(S.rank(v) == oracle::rank_weight(N, t, v));
        }
    }
}

TEST_CASE("field spec and element literals") {
    auto F = parse_field_spec("2^6 mod=1,1,0,1,1,0,1");
    CHECK(F->q() == 64);
    CHECK(format_field_spec(*F) == "2^6 mod=1,1,0,1,1,0,1");
    auto G = parse_field_spec("3^2");
    CHECK(G->q() == 9);
    for (Elem a = 0; a < 64; ++a) CHECK(F->parse(F->format(a)) == a);
    CHECK(F->format(0) == "0");
    CHECK(F->format(1) == "1");
    CHECK(F->format(F->primitive()) == "g^1");
    CHECK(F->parse("g") == F->primitive());
    CHECK_THROWS_AS(parse_field_spec("2^x"), Error);
    CHECK_THROWS_AS(F->parse("h^2"), Error);
}

TEST_CASE("bracket integers") {
    for (unsigned p : {2u, 3u})
        for (unsigned r = 1; r < 4; ++r)
            for (std::uint64_t n = 0; n < 12; ++n) {
                std::uint64_t pr = ipow(p, r), acc = 0, pw = 1;
                for (std::uint64_t k = 0; k < n; ++k) {
                    acc += pw;
                    pw *= pr;
                }
                CHECK(bracket_mod(p, r, n, 1000003) == acc % 1000003);
            }
}
