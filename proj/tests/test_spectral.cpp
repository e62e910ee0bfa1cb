#include <doctest.h>

#include <cmath>

#include "cqg/models.hpp"
#include "cqg/spectral.hpp"

using namespace cqg;

namespace {
RhoSpectrum spec(std::vector<double> v) { return RhoSpectrum::from_values(std::move(v)); }
}  // namespace

TEST_CASE("spectral projections") {
    auto p = spectral_projection(spec({4, 1, 0.25}), 1);
    CHECK(p.indices == std::vector<std::size_t>{1});
    CHECK(spectral_projection(spec({4, 1, 0.25}), 2).dim() == 0);
    CHECK(spectral_projection(spec({1, 1, 1}), 1).dim() == 3);
    CHECK_THROWS_AS(spectral_projection(spec({1}), 0), PreconditionError);
    CHECK(projection_matrix(spec({4, 1, 0.25}), 0.25).real().trace() == 1);
}

TEST_CASE("projection pairs of a tensor product") {
    const auto f = spec({2, 0.5});
    auto one = tensor_projection_pairs(f, f, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].t_left == 2);
    CHECK(one[0].t_right == 0.5);
    CHECK(one[0].dim + one[1].dim == 2);
    auto four = tensor_projection_pairs(f, f, 4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].dim == 1);
    CHECK(tensor_projection_pairs(f, f, 3).empty());
}

TEST_CASE("spectral grid") {
    QGModel su = builtin_su_q_2(0.5, 4);
    auto g = spectral_grid(su, "0", "1");
    std::vector<std::pair<double, double>> on;
    int probes = 0;
    for (const auto& p : g) {
        if (p.probe)
            ++probes;
        else
            on.emplace_back(p.s, p.t);
    }
    CHECK(probes == 4);
    REQUIRE(on.size() == 2);
    CHECK(on[0] == std::pair{0.5, 2.0});
    CHECK(on[1] == std::pair{2.0, 0.5});

    QGModel s3 = builtin_finite_group_dual("s3");
    int grid = 0;
    for (const auto& p : spectral_grid(s3, "std", "std"))
        if (!p.probe) {
            ++grid;
            CHECK(p.s == 1);
            CHECK(p.t == 1);
        }
    CHECK(grid == 1);
}

TEST_CASE("Theorem 5.3 on the fundamental") {
    QGModel su = builtin_su_q_2(0.5, 4);
    Theorem53Result r = verify_theorem_5_3(su, "0", "1", 2, 0.5);
    CHECK_FALSE(r.truncated());
    CHECK(r.residual_eq1 < 1e-12);
    CHECK(r.residual_eq2 < 1e-12);
    // (d_0 / t) dim H_1(t) and d_0 t dim H_1(t).
    CHECK(r.rhs_norm_eq1 == doctest::Approx(2.0));
    CHECK(r.rhs_norm_eq2 == doctest::Approx(0.5));

    Theorem53Result swapped = verify_theorem_5_3(su, "0", "1", 0.5, 2);
    CHECK(swapped.rhs_norm_eq2 == doctest::Approx(2.0));
    CHECK(swapped.residual_eq2 < 1e-12);

    Theorem53Result off = verify_theorem_5_3(su, "2", "1", 7, 11);
    CHECK(off.lhs_norm_eq1 == 0);
    CHECK(off.rhs_norm_eq1 == 0);
    CHECK(off.lhs_norm_eq2 == 0);
}

TEST_CASE("Theorem 5.3 on a Kac model is a dimension count") {
    QGModel s3 = builtin_finite_group_dual("s3");
    for (const auto& a : s3.irreps())
        for (const auto& b : s3.irreps()) {
            Theorem53Result r = verify_theorem_5_3(s3, a.label, b.label, 1, 1);
            CHECK(r.rhs_norm_eq1 == doctest::Approx(a.dim * b.dim));
            CHECK(r.residual_eq1 < 1e-12);
            CHECK(r.residual_eq2 < 1e-12);
        }
}

TEST_CASE("Theorem 5.3 flags truncated sums") {
    QGModel su = builtin_su_q_2(0.5, 3);
    Theorem53Result r = verify_theorem_5_3(su, "3", "2", 1, 1);
    CHECK(r.truncated());
    QGModel bare = builtin_su_q_2(0.5, 3).with_cg(nullptr);
    CHECK_THROWS_AS(verify_theorem_5_3(bare, "1", "1", 1, 1), CgUnavailable);
}
