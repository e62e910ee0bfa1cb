#include <doctest.h>

#include <cmath>
#include <random>

#include "cqg/kac_degree.hpp"
#include "cqg/models.hpp"

using namespace cqg;

namespace {

using M = IntBlockElement::Matrix;

IntBlockElement single(const M& x) {
    IntBlockElement e;
    e.blocks["a"] = x;
    return e;
}

M unit(int n, int i, int j) {
    M x = M::Zero(n, n);
    x(i, j) = 1;
    return x;
}

IntBlockElement random_element(std::mt19937_64& gen, int n) {
    M x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = std::int64_t(gen() % 7) - 3;
    IntBlockElement e;
    e.blocks["a"] = x;
    e.blocks["b"] = M::Constant(1, 1, std::int64_t(gen() % 7) - 3);
    return e;
}

}  // namespace

TEST_CASE("Kac predicates") {
    auto s3 = is_kac(builtin_finite_group_dual("s3"));
    CHECK(s3.kac());
    CHECK(s3.consistent());
    auto su = is_kac(builtin_su_q_2(0.5, 4));
    CHECK_FALSE(su.kac());
    CHECK(su.consistent());
    CHECK(is_kac(builtin_su_q_2(1.0, 4)).kac());
    CHECK(is_kac(builtin_free_orthogonal_fund({1, 1, 1})).kac());
    CHECK_FALSE(is_kac(builtin_free_orthogonal_fund({1, 1, 2})).by_qdim);
}

TEST_CASE("N_G") {
    CHECK(n_G(builtin_finite_group_dual("s3")).value == 2);
    CHECK_FALSE(n_G(builtin_finite_group_dual("s3")).lower_bound);
    CHECK(n_G(builtin_finite_group_dual("cyclic_5")).value == 1);
    auto su = n_G(builtin_su_q_2(0.5, 4));
    CHECK(su.value == 5);
    CHECK(su.lower_bound);
}

TEST_CASE("standard polynomial examples") {
    auto s = standard_polynomial<std::int64_t>({single(unit(2, 0, 0)), single(unit(2, 0, 1)), single(unit(2, 1, 0))});
    M expected = M::Zero(2, 2);
    expected(0, 0) = 2;
    expected(1, 1) = 1;
    CHECK(s.blocks["a"] == expected);

    std::mt19937_64 gen(3);
    const auto x = random_element(gen, 3), y = random_element(gen, 3);
    CHECK(standard_polynomial<std::int64_t>({x, y, x}).is_zero());
    M d1 = M::Zero(2, 2), d2 = M::Zero(2, 2);
    d1.diagonal() << 3, -1;
    d2.diagonal() << 2, 5;
    CHECK(standard_polynomial<std::int64_t>({single(d1), single(d2)}).is_zero());
    CHECK_THROWS_AS(standard_polynomial<std::int64_t>({x}), PreconditionError);
}

TEST_CASE("subset recursion agrees with the permutation sum") {
    std::mt19937_64 gen(11);
    for (int r = 2; r <= 6; ++r)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<IntBlockElement> xs;
            for (int i = 0; i < r; ++i) xs.push_back(random_element(gen, 3));
            const auto fast = standard_polynomial(xs);
            CHECK(fast == standard_polynomial_naive(xs));
            // Alternating: a transposition negates.
            std::swap(xs[0], xs[r - 1]);
            auto swapped = standard_polynomial(xs);
            for (auto& [l, b] : swapped.blocks) b = -b;
            CHECK(swapped == fast);
        }
}

TEST_CASE("standard polynomial is multilinear") {
    std::mt19937_64 gen(5);
    std::vector<IntBlockElement> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(random_element(gen, 3));
    const auto y = random_element(gen, 3);
    auto with = [&](const IntBlockElement& first) {
        auto v = xs;
        v[1] = first;
        return standard_polynomial(v);
    };
    IntBlockElement sum = xs[1];
    for (auto& [l, b] : sum.blocks) b = 2 * b + y.blocks.at(l);
    auto lhs = with(sum);
    auto a = with(xs[1]), c = with(y);
    for (auto& [l, b] : a.blocks) b = 2 * b + c.blocks.at(l);
    CHECK(lhs == a);
}

TEST_CASE("Amitsur-Levitzki on M_2 and M_3") {
    const std::vector<std::pair<IrrepLabel, int>> m2{{"a", 2}}, m3{{"a", 3}};
    auto ex = identity_check(m2, 4, IdentityStrategy::exhaustive, 0, 0);
    CHECK(ex.holds);
    CHECK(ex.tuples_checked == 256);
    CHECK(identity_check(m2, 4, IdentityStrategy::random, 1000, 42).holds);

    auto w = identity_check(m2, 3, IdentityStrategy::exhaustive, 0, 0);
    REQUIRE_FALSE(w.holds);
    REQUIRE(w.witness.size() == 3);
    CHECK(std::tuple(w.witness[0].row, w.witness[0].col) == std::tuple(0, 0));
    CHECK(std::tuple(w.witness[1].row, w.witness[1].col) == std::tuple(0, 1));
    CHECK(std::tuple(w.witness[2].row, w.witness[2].col) == std::tuple(1, 0));

    CHECK(identity_check(m3, 6, IdentityStrategy::random, 200, 42).holds);
    CHECK_FALSE(identity_check(m3, 5, IdentityStrategy::random, 1000, 42).holds);
    CHECK_THROWS_AS(identity_check(m3, 7, IdentityStrategy::exhaustive, 0, 0), PreconditionError);
}

TEST_CASE("random identity checks do not depend on the thread count") {
    const std::vector<std::pair<IrrepLabel, int>> m3{{"a", 3}, {"b", 1}};
    auto one = identity_check(m3, 5, IdentityStrategy::random, 1000, 9, 1);
    auto many = identity_check(m3, 5, IdentityStrategy::random, 1000, 9, 8);
    REQUIRE_FALSE(one.holds);
    CHECK(one.witness_index == many.witness_index);
    CHECK(one.value == many.value);
    auto again = identity_check(m3, 5, IdentityStrategy::random, 1000, 9, 3);
    CHECK(again.witness_index == one.witness_index);
}

TEST_CASE("bounded degree on models") {
    QGModel s3 = builtin_finite_group_dual("s3");
    CHECK(bounded_degree_identity_check(s3, 4, IdentityStrategy::exhaustive, 0, 0).holds);
    CHECK_FALSE(bounded_degree_identity_check(s3, 3, IdentityStrategy::exhaustive, 0, 0).holds);
    CHECK(bounded_degree_identity_check(builtin_finite_group_dual("cyclic_5"), 2, IdentityStrategy::exhaustive, 0, 0)
              .holds);
}

TEST_CASE("Prop 6.2 inequality") {
    QGModel su = builtin_su_q_2(0.5, 8);
    Prop62Result r = prop_6_2_check(su, "1", "1", "2");
    CHECK(r.value == doctest::Approx(1.05).epsilon(1e-12));
    CHECK(r.pass);
    QGModel su8 = builtin_su_q_2(0.8, 8);
    CHECK(prop_6_2_check(su8, "1", "2", "3").pass);
    CHECK_THROWS_AS(prop_6_2_check(su, "1", "1", "0"), PreconditionError);
    CHECK_THROWS_AS(prop_6_2_check(su, "1", "1", "3"), PreconditionError);

    QGModel s3 = builtin_finite_group_dual("s3");
    // At Gamma = 1 every component qualifies and d_1 / dim H(Gamma) = 1 throughout.
    CHECK(prop_6_2_check(s3, "std", "std", "std").value == doctest::Approx(1.0));
    CHECK(prop_6_2_check(s3, "std", "std", "triv").value == doctest::Approx(1.0));
    CHECK_THROWS_AS(prop_6_2_check(s3, "std", "sign", "triv"), PreconditionError);
}

TEST_CASE("theta normal form") {
    auto a = theta_normal_form(RhoSpectrum::from_values({4, 1, 0.25}));
    CHECK(a.gamma == 4);
    CHECK(a.thetas == std::vector<double>{1});
    CHECK(a.odd);
    auto b = theta_normal_form(RhoSpectrum::from_values({2, 0.5}));
    CHECK(b.thetas == std::vector<double>{1});
    CHECK_FALSE(b.odd);
    CHECK(theta_normal_form(RhoSpectrum::from_values({1, 1})).kac_marker);
    CHECK_THROWS_AS(theta_normal_form(normalize_rho({1, 1, 4}).spectrum), PreconditionError);

    const double q = 0.7;
    std::vector<double> v;
    for (int j = 0; j <= 6; ++j) v.push_back(std::pow(q, 6 - 2 * j));
    v.push_back(std::pow(q, 1.5));
    v.push_back(std::pow(q, -1.5));
    const auto s = RhoSpectrum::from_values(v);
    const auto f = theta_normal_form(s);
    CHECK(f.thetas.size() == 4);
    CHECK(same_multiset(f.reconstruct(), s, 1e-12));
}

TEST_CASE("main theorem sequence") {
    const double q = 0.5;
    QGModel su = builtin_su_q_2(q, 16);
    auto seq = main_theorem_sequence(su, "1", 3);
    REQUIRE(seq.size() == 4);
    const std::vector<std::string> labels{"1", "2", "4", "8"};
    const std::vector<double> gammas{2, 4, 16, 256};
    for (int k = 0; k < 4; ++k) {
        CHECK(seq[k].label.id == labels[k]);
        CHECK(seq[k].gamma == doctest::Approx(gammas[k]));
        CHECK(seq[k].k == k + 1);
    }
    CHECK(main_theorem_sequence(su, "1", 0).size() == 1);
    CHECK_THROWS_AS(main_theorem_sequence(su, "0", 2), PreconditionError);
    CHECK_THROWS_AS(main_theorem_sequence(builtin_su_q_2(q, 6), "1", 3), TruncationError);

    // Lemma 6.3 on consecutive steps telescopes to (1 - q^{2m''+2}) / (1 - q^{2m'+2}).
    auto lemma = lemma_6_3_check(seq, {1, 2, 3, 4}, 2.0);
    REQUIRE(lemma.size() == 3);
    CHECK(lemma[0].value == doctest::Approx(1.05).epsilon(1e-12));
    for (std::size_t i = 0; i < lemma.size(); ++i) {
        const int m1 = std::stoi(labels[i]), m2 = std::stoi(labels[i + 1]);
        CHECK(lemma[i].value == doctest::Approx((1 - std::pow(q, 2 * m2 + 2)) / (1 - std::pow(q, 2 * m1 + 2))));
        CHECK(lemma[i].pass);
    }
    CHECK(lemma_6_3_check(seq, {1, 4}, 2.0)[0].pass);
    CHECK_THROWS_AS(lemma_6_3_check(seq, {1, 5}, 2.0), PreconditionError);
}

TEST_CASE("subsequence refinement escapes in dimension on SU_q(2)") {
    QGModel su = builtin_su_q_2(0.5, 16);
    auto seq = main_theorem_sequence(su, "1", 4);
    RefineResult r = subsequence_refine(su, seq, 2.0, 1000);
    CHECK(r.outcome == RefineOutcome::dimension_escape);
    CHECK(r.dims == std::vector<int>{2, 3, 5, 9, 17});
}

TEST_CASE("constant-dimension data is refined and contradicts the final bound") {
    // Hand-built steps with Gamma(alpha_k) = 2^{2^{k-1}}, all of dimension 2.
    QGModel::Data d;
    d.name = "synthetic";
    d.trivial = "e";
    d.irreps.push_back({"e", 1, RhoSpectrum::from_values({1}), "e"});
    std::vector<SequenceStep> seq;
    for (int k = 1; k <= 5; ++k) {
        const double g = std::pow(2.0, std::ldexp(1.0, k - 1));
        const std::string l = "a" + std::to_string(k);
        d.irreps.push_back({l, 2, RhoSpectrum::from_values({g, 1 / g}), l});
        seq.push_back({k, l, g, std::log(g), g + 1 / g, 1, 2});
    }
    QGModel m(d);
    RefineResult r = subsequence_refine(m, seq, 2.0, 1000);
    REQUIRE(r.outcome == RefineOutcome::refined);
    CHECK(r.k_indices == std::vector<int>{1, 3, 5});
    CHECK(r.dimension == 2);
    auto n = nierownosc_eval({seq[0], theta_normal_form(m.irrep("a1").rho)},
                             {seq[2], theta_normal_form(m.irrep("a3").rho)}, 2.0, 2);
    CHECK(n.final_bound_value == doctest::Approx((2 + std::pow(2.0, -7)) / 2.5).epsilon(1e-12));
    CHECK(n.final_bound_value < 1);
    // These data cannot come from a genuine sequence: the lemma's lower bound fails.
    CHECK(n.lower_bound_value < 1);
    CHECK(lemma_6_3_check(seq, {1, 3}, 2.0)[0].value < 1);

    CHECK_THROWS_AS(nierownosc_eval({seq[0], theta_normal_form(m.irrep("a1").rho)},
                                    {seq[0], theta_normal_form(m.irrep("a1").rho)}, 2.0, 2),
                    PreconditionError);
    CHECK(subsequence_refine(m, seq, 2.0, 2).outcome == RefineOutcome::exhausted);
}

TEST_CASE("nierownosc stays finite for distant steps") {
    SequenceStep a{3, "x", 0, 0, 0, 1, 4}, b{40, "y", 0, 0, 0, 1, 4};
    ThetaForm ta{false, 2.0, {1, 0.5}, 4, false}, tb{false, 2.0, {1, 0.25}, 4, false};
    auto n = nierownosc_eval({a, ta}, {b, tb}, 2.0, 4);
    CHECK(std::isfinite(n.final_bound_value));
    CHECK(n.final_bound_value < 1);
}

TEST_CASE("Corollary 6.5 probe") {
    QGModel su = builtin_su_q_2(0.5, 20);
    ProbeResult p = corollary_6_5_probe(su, {{"1", 1}}, 20, 20);
    REQUIRE(p.witness);
    CHECK(p.witness->id == "20");
    CHECK(p.witness_dim == 21);
    CHECK(p.factors_used == 20);

    ProbeResult small = corollary_6_5_probe(su, {{"1", 1}}, 1, 2);
    REQUIRE(small.witness);
    CHECK(small.witness->id == "1");
    ProbeResult two = corollary_6_5_probe(su, {{"1", 1}}, 2, 2);
    REQUIRE(two.witness);
    CHECK(two.witness->id == "2");

    CHECK_FALSE(corollary_6_5_probe(su, {{"1", 1}}, 20, 19).witness);
    CHECK_THROWS_AS(corollary_6_5_probe(builtin_su_q_2(1.0, 4), {{"1", 1}}, 3, 4), PreconditionError);

    ProbeResult truncated = corollary_6_5_probe(builtin_su_q_2(0.5, 4), {{"1", 1}}, 10, 8);
    CHECK_FALSE(truncated.witness);
    CHECK_FALSE(truncated.truncations.empty());
}

TEST_CASE("consistency trap never fires on built-ins") {
    std::vector<QGModel> models{builtin_finite_group_dual("s3"), builtin_finite_group_dual("cyclic_5"),
                                builtin_su_q_2(0.5, 8), builtin_su_q_2(1.0, 6),
                                builtin_free_orthogonal_fund({1, 2, 3})};
    std::mt19937_64 gen(17);
    for (int i = 0; i < 5; ++i) {
        models.push_back(builtin_finite_group_dual("cyclic_" + std::to_string(1 + gen() % 9)));
        models.push_back(builtin_su_q_2(0.2 + 0.7 * double(gen() % 1000) / 1000, 8));
    }
    for (const auto& m : models) {
        TrapReport t = consistency_trap(m, 3, 42);
        CHECK_FALSE(t.fired());
    }
    CHECK(consistency_trap(builtin_finite_group_dual("s3"), 3, 42).validated);
    CHECK(consistency_trap(builtin_finite_group_dual("s3"), 3, 42).bounded_degree);
}
