#include <doctest.h>

#include "cqg/fusion.hpp"
#include "cqg/models.hpp"

using namespace cqg;

TEST_CASE("decompose") {
    QGModel su = builtin_su_q_2(0.5, 6);
    Decomposition d = decompose(su, "1", "1");
    CHECK(d.components == std::vector<std::pair<IrrepLabel, int>>{{"0", 1}, {"2", 1}});
    CHECK(decompose(su, "0", "3").components == std::vector<std::pair<IrrepLabel, int>>{{"3", 1}});

    QGModel s3 = builtin_finite_group_dual("s3");
    CHECK(decompose(s3, "std", "std").components ==
          std::vector<std::pair<IrrepLabel, int>>{{"triv", 1}, {"sign", 1}, {"std", 1}});
    CHECK_THROWS_AS(decompose(su, "4", "4"), TruncationError);
    CHECK_THROWS_AS(decompose(su, "x", "1"), UnknownLabel);
}

TEST_CASE("tensor powers and P_n") {
    QGModel su = builtin_su_q_2(0.5, 6);
    CHECK(tensor_power_decompose(su, "1", 2).components == std::vector<std::pair<IrrepLabel, int>>{{"0", 1}, {"2", 1}});
    CHECK(tensor_power_decompose(su, "1", 3).components == std::vector<std::pair<IrrepLabel, int>>{{"1", 2}, {"3", 1}});
    CHECK(tensor_power_decompose(su, "2", 1).components == std::vector<std::pair<IrrepLabel, int>>{{"2", 1}});
    CHECK(p_n(su, "1", 2) == 3);
    CHECK(p_n(su, "1", 3) == 4);
    CHECK(p_n(su, "2", 1) == 3);

    // Total dimension is multiplicative.
    const Decomposition d = tensor_power_decompose(su, "1", 5);
    int total = 0;
    for (const auto& [l, k] : d.components) total += k * su.irrep(l).dim;
    CHECK(total == 32);
}

TEST_CASE("Gamma-top components") {
    QGModel su = builtin_su_q_2(0.5, 6);
    CHECK(gamma_top_components(su, "1", "1").components == std::vector<std::pair<IrrepLabel, int>>{{"2", 1}});
    CHECK(gamma_top_components(su, "1", "2").components == std::vector<std::pair<IrrepLabel, int>>{{"3", 1}});
    QGModel s3 = builtin_finite_group_dual("s3");
    CHECK(gamma_top_components(s3, "std", "std").components.size() == 3);
}

TEST_CASE("Frobenius reciprocity") {
    CHECK(frobenius_check(builtin_su_q_2(0.5, 6)).ok());
    CHECK(frobenius_check(builtin_finite_group_dual("s3")).ok());
    CHECK(frobenius_check(builtin_finite_group_dual("cyclic_4")).ok());

    auto data = builtin_finite_group_dual("s3").data();
    data.fusion.set("std", "std", {{"triv", 1}, {"std", 1}});
    FrobeniusReport r = frobenius_check(QGModel(data));
    REQUIRE_FALSE(r.ok());
    bool names_sign = false;
    for (const auto& v : r.violations)
        names_sign |= v.labels.front() == IrrepLabel("sign") && v.labels[1] == IrrepLabel("std");
    CHECK(names_sign);
}
