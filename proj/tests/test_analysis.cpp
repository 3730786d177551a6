#include <doctest.h>

#include <cmath>
#include <random>

#include "skq/spectral.hpp"

using namespace skq;

namespace {

SGraphSpec cubic_spec(const FiniteField& F, int k) {
    std::vector<Poly> fs, gs;
    for (int i = 3; i <= k; ++i) {
        fs.push_back(Poly::monomial(F, static_cast<unsigned>(i - 1)));
        gs.push_back(Poly::monomial(F, 3));
    }
    return SGraphSpec(F, std::move(fs), std::move(gs));
}

}  // namespace

TEST_CASE("analyze_w basics") {
    FiniteField F(5, 1);
    SGraphSpec spec = cubic_spec(F, 4);
    // w = 0: every equation is vacuous
    auto zero = analyze_w(spec, {0, 0, 0, 0});
    CHECK(zero.n_w == 5);
    CHECK(zero.s_w_size == 0);
    CHECK(zero.t_w == 5);

    // d_g = 1 forces S_w empty
    SGraphSpec lin(F, {Poly::monomial(F, 2)}, {Poly::monomial(F, 1)});
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Fq> w(3);
        for (auto& c : w) c = static_cast<Fq>(rng() % 5);
        CHECK(analyze_w(lin, w).s_w_size == 0);
    }

    // T_w for the Theorem-3 shape: q or between 1 and k-2
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Fq> w(4);
        for (auto& c : w) c = static_cast<Fq>(rng() % 5);
        auto a = analyze_w(spec, w);
        bool ok = a.t_w == 5 || (a.t_w >= 1 && a.t_w <= 2);
        CHECK(ok);
    }
}

TEST_CASE("lemma 5.1 exhaustive sweeps") {
    {
        FiniteField F(5, 1);
        SGraphSpec spec(F, {Poly::monomial(F, 2)}, {Poly(F, {0, 0, 0, 1})});
        for (std::uint64_t enc = 0; enc < 125; ++enc) {
            auto w = decode_vertex(enc, 5, 3);
            CHECK(lemma51_check(spec, w, eigenvalue_at(spec, w)));
        }
    }
    {
        FiniteField F(7, 1);
        SGraphSpec spec(F, {Poly::monomial(F, 2)}, {Poly(F, {0, 1, 0, 1})});
        for (std::uint64_t enc = 0; enc < 343; ++enc) {
            auto w = decode_vertex(enc, 7, 3);
            CHECK(lemma51_check(spec, w, eigenvalue_at(spec, w)));
        }
    }
}

TEST_CASE("lemma 5.1 hypothesis gate") {
    FiniteField F(3, 2);  // q = 9, p = 3
    SGraphSpec spec(F, {Poly::monomial(F, 2)}, {Poly(F, {0, 0, 0, 1})});  // d_g = 3 >= p
    CHECK_THROWS_AS(lemma51_check(spec, {0, 0, 0}, eigenvalue_at(spec, {0, 0, 0})),
                    HypothesisViolatedError);
}

TEST_CASE("theorem 5.2 per-instance bound") {
    FiniteField F5(5, 1);
    auto rep5 = theorem52_bound(
        SGraphSpec(F5, {Poly::monomial(F5, 2)}, {Poly(F5, {0, 0, 0, 1})}));
    CHECK(rep5.holds);

    FiniteField F11(11, 1);
    auto rep11 = theorem52_bound(
        SGraphSpec(F11, {Poly::monomial(F11, 2)}, {Poly::monomial(F11, 1)}));
    CHECK(rep11.holds);
    CHECK(rep11.bound ==
          doctest::Approx(2.0 * 10.0 + 11.0).epsilon(1e-9));  // d_f(q-1)+q
}

TEST_CASE("connectivity rank matches BFS components and top multiplicity") {
    FiniteField F(5, 1);

    SUBCASE("connected cubic spec") {
        SGraphSpec spec = cubic_spec(F, 4);
        auto cr = connectivity_rank(spec);
        CHECK(cr.rank == 4);
        CHECK(cr.predicted_components == 1);
        CHECK(cr.condition2);
        auto comp = components(build_s_graph(spec));
        CHECK(comp.count == 1);
        Spectrum s = spectrum_formula(spec);
        CHECK(s.entries.front().multiplicity == 1);
    }

    SUBCASE("dependent f polynomials disconnect") {
        SGraphSpec spec(F, {Poly::monomial(F, 2), Poly::monomial(F, 2)},
                        {Poly::monomial(F, 1), Poly::monomial(F, 1)});
        auto cr = connectivity_rank(spec);
        CHECK(cr.rank == 3);
        CHECK(cr.predicted_components == 5);
        auto comp = components(build_s_graph(spec));
        CHECK(comp.count == 5);
        Spectrum s = spectrum_formula(spec);
        CHECK(s.entries.front().multiplicity == 5);
    }

    SUBCASE("condition 1 detects the Wenger shape") {
        SGraphSpec spec(F, {Poly::monomial(F, 2), Poly::monomial(F, 3)},
                        {Poly::monomial(F, 1), Poly::monomial(F, 1)});
        auto cr = connectivity_rank(spec);
        CHECK(cr.condition1);
        CHECK(cr.rank == 4);
    }
}

TEST_CASE("cubic classification sweep S(4,5)") {
    FiniteField F(5, 1);
    auto mq = compute_mq(F);
    auto rep = classify_cubic(cubic_spec(F, 4), mq.m_q);
    CHECK(rep.all_hold);
    CHECK(rep.exact_count + rep.bounded_count == 625);
}

TEST_CASE("classify_cubic hypothesis gate") {
    FiniteField F(7, 1);  // 7 = 1 mod 3
    CHECK_THROWS_AS(classify_cubic(cubic_spec(F, 4), 5.0),
                    HypothesisViolatedError);
}

TEST_CASE("theorem 3 at (5,4) including the witness identity") {
    auto rep = verify_theorem3(5, 4);
    CHECK(rep.equal);
    FiniteField F(5, 1);
    auto mq = compute_mq(F);
    CHECK(rep.predicted == doctest::Approx(4.0 * mq.m_q).epsilon(1e-9));
    // lambda_{(0,w2,0,w4)} = (q-1) eps_{w2 x + w4 x^3}
    SGraphSpec spec = cubic_spec(F, 4);
    for (Fq w2 = 1; w2 < 5; ++w2)
        for (Fq w4 = 1; w4 < 5; ++w4) {
            auto lam = eigenvalue_at(spec, {0, w2, 0, w4});
            auto eps = exp_sum(Poly(F, {0, w2, 0, w4}));
            CHECK(lam == eps.value * 4);
        }
}

TEST_CASE("theorem 3 hypothesis gate") {
    CHECK_THROWS_AS(verify_theorem3(7, 4), HypothesisViolatedError);  // 7 = 1 mod 3
    CHECK_THROWS_AS(verify_theorem3(5, 3), HypothesisViolatedError);  // k < 4
}

TEST_CASE("theorem 4 at (5,3)") {
    auto rep = verify_theorem4(5, 3);
    CHECK(rep.holds);
    FiniteField F(5, 1);
    auto mq = compute_mq(F);
    CHECK(rep.predicted == doctest::Approx(4.0 * mq.m_q).epsilon(1e-9));
}

TEST_CASE("remark 2 odd-power bound") {
    auto rep = remark2_bound(7, 4, 2);  // g = X^5, 7 != 1 mod 5
    CHECK(rep.holds);
    CHECK_THROWS_AS(remark2_bound(11, 4, 5), HypothesisViolatedError);  // 11 = 1 mod 11
}

TEST_CASE("cover containment and lambda2 monotonicity") {
    FiniteField F(5, 1);
    auto rep = cover_check(cubic_spec(F, 3), cubic_spec(F, 4));
    CHECK(rep.is_submultiset);
    CHECK(rep.lambda2_monotone);

    // projection structure: lambda_{(w,0)} in the cover equals lambda_w
    SGraphSpec base = cubic_spec(F, 3);
    SGraphSpec cover = cubic_spec(F, 4);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Fq> w(3);
        for (auto& c : w) c = static_cast<Fq>(rng() % 5);
        std::vector<Fq> wext = w;
        wext.push_back(0);
        CHECK(eigenvalue_at(cover, wext) == eigenvalue_at(base, w));
    }

    CHECK_THROWS_AS(cover_check(cubic_spec(F, 3), cubic_spec(F, 5)),
                    SpecMismatchError);
}

TEST_CASE("exact Cheeger constants") {
    auto cycle = [](int m) {
        Graph g;
        g.n = m;
        g.adj.assign(m, {});
        for (int i = 0; i < m; ++i) {
            g.adj[i].push_back(static_cast<std::uint32_t>((i + 1) % m));
            g.adj[i].push_back(static_cast<std::uint32_t>((i + m - 1) % m));
            std::sort(g.adj[i].begin(), g.adj[i].end());
        }
        return g;
    };
    for (int m : {6, 8, 10}) {
        auto res = cheeger_exact(cycle(m));
        // h = 2 / floor(m/2)
        CHECK(res.h_num * (m / 2) == 2 * res.h_den);
        double h = double(res.h_num) / double(res.h_den);
        CHECK(h >= res.lower - 1e-9);
        CHECK(h <= res.upper + 1e-9);
    }

    Graph k4;
    k4.n = 4;
    k4.adj = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    auto res = cheeger_exact(k4);
    CHECK(res.h_num == 2 * res.h_den);  // h = 2, attained at |A| = 2

    // disconnected: h = 0
    Graph two;
    two.n = 4;
    two.adj = {{1}, {0}, {3}, {2}};
    auto res0 = cheeger_exact(two);
    CHECK(res0.h_num == 0);

    Graph big;
    big.n = 30;
    big.adj.assign(30, {});
    CHECK_THROWS_AS(cheeger_exact(big), SizeExceededError);
}

TEST_CASE("ramanujan decision for the theorem 3 spec") {
    FiniteField F(5, 1);
    Spectrum s = spectrum_formula(cubic_spec(F, 4));
    auto l2 = second_eigenvalue(s);
    auto mq = compute_mq(F);
    bool expected = std::max(5.0, 4.0 * mq.m_q) <= 2.0 * std::sqrt(19.0) + 1e-9;
    CHECK(is_ramanujan(s) == expected);
    CHECK(l2.numeric == doctest::Approx(std::max(5.0, 4.0 * mq.m_q)));
}
