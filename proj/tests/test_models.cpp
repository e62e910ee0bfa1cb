#include <doctest.h>

#include <cmath>
#include <set>

#include "cqg/dimensions.hpp"
#include "cqg/intertwiners.hpp"
#include "cqg/models.hpp"

using namespace cqg;

TEST_CASE("su_q_2 spectra") {
    QGModel m = builtin_su_q_2(0.5, 2);
    CHECK(m.irrep("1").rho.values() == std::vector<double>{2, 0.5});
    CHECK(m.irrep("1").rho.trace() == 2.5);
    CHECK(m.irrep("2").rho.values() == std::vector<double>{4, 1, 0.25});
    CHECK(m.irrep("2").rho.trace() == 5.25);
    const QGModel classical = builtin_su_q_2(1.0, 5);
    for (const auto& ir : classical.irreps())
        for (double v : ir.rho.values()) CHECK(v == 1.0);
    CHECK_THROWS_AS(builtin_su_q_2(0.0, 2), PreconditionError);
    CHECK_THROWS_AS(builtin_su_q_2(0.5, -1), PreconditionError);
}

TEST_CASE("su_q_2 under q -> 1/q") {
    QGModel a = builtin_su_q_2(0.6, 6), b = builtin_su_q_2(1 / 0.6, 6);
    for (std::size_t i = 0; i < a.irreps().size(); ++i)
        CHECK(same_multiset(a.irreps()[i].rho, b.irreps()[i].rho, 1e-12));
    CHECK(validate_model(b).ok());
    for (const auto& [pair, comps] : b.fusion().entries()) {
        const CgList l = cg_set(b, pair.first, pair.second);
        CHECK(verify_cg_unitarity(l).max() < 1e-10);
        CHECK(cg_rho_intertwining_residual(b, l) < 1e-10);
    }
}

TEST_CASE("su_q_2 spectra sit inside tensor powers of the fundamental") {
    QGModel m = builtin_su_q_2(0.5, 6);
    const RhoSpectrum f = m.irrep("1").rho;
    RhoSpectrum power = f;
    for (int n = 1; n <= 6; ++n) {
        if (n > 1) power = tensor(power, f);
        std::set<long> exps;
        for (double v : power.values()) exps.insert(std::lround(std::log2(v)));
        for (double v : m.irrep(std::to_string(n)).rho.values()) CHECK(exps.count(std::lround(std::log2(v))));
    }
}

TEST_CASE("su_q_2 CG data on every ingested pair") {
    for (double q : {0.5, 0.8}) {
        QGModel m = builtin_su_q_2(q, 6);
        for (const auto& [pair, comps] : m.fusion().entries()) {
            const CgList l = cg_set(m, pair.first, pair.second);
            CHECK(l.size() == comps.size());
            CHECK(verify_cg_unitarity(l).max() < 1e-10);
            CHECK(cg_rho_intertwining_residual(m, l) < 1e-10);
        }
    }
}

TEST_CASE("finite group duals") {
    QGModel z5 = builtin_finite_group_dual("cyclic_5");
    CHECK(z5.irreps().size() == 5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(z5.fusion().multiplicity(std::to_string((a + b) % 5), std::to_string(a), std::to_string(b)) == 1);
    CHECK(z5.conjugate("2") == IrrepLabel("3"));
    CHECK(builtin_finite_group_dual("z5").irreps().size() == 5);

    QGModel s3 = builtin_finite_group_dual("s3");
    std::vector<int> dims;
    for (const auto& ir : s3.irreps()) dims.push_back(ir.dim);
    CHECK(dims == std::vector<int>{1, 1, 2});
    CHECK(s3.fusion().find("std", "std")->size() == 3);

    QGModel z1 = builtin_finite_group_dual("cyclic_1");
    CHECK(z1.irreps().size() == 1);
    CHECK_THROWS_AS(builtin_finite_group_dual("a5"), PreconditionError);
    CHECK_THROWS_AS(builtin_finite_group_dual("cyclic_0"), PreconditionError);
}

TEST_CASE("free orthogonal fundamental") {
    QGModel a = builtin_free_orthogonal_fund({1, 1, 2});
    const RhoSpectrum& s = a.irrep("u").rho;
    CHECK(s[0] == doctest::Approx(std::sqrt(6.0)));
    CHECK(s[1] == doctest::Approx(std::sqrt(6.0) / 4));
    CHECK_FALSE(symmetry_check(s));
    CHECK(a.conjugate("u") == IrrepLabel("u_bar"));

    QGModel b = builtin_free_orthogonal_fund({1, 1});
    CHECK(symmetry_check(b.irrep("u").rho));
    CHECK(b.conjugate("u") == IrrepLabel("u"));
    QGModel c = builtin_free_orthogonal_fund({1, 1, 1});
    CHECK(c.irrep("u").rho.values() == std::vector<double>{1, 1, 1});
    CHECK_THROWS_AS(builtin_free_orthogonal_fund({}), PreconditionError);
}

TEST_CASE("rho defining property oracle") {
    CHECK(rho_defining_property_oracle(RhoSpectrum::from_values({2, 0.5})));
    CHECK(rho_defining_property_oracle(RhoSpectrum::from_values({4, 1, 0.25})));
    CHECK_FALSE(rho_defining_property_oracle(RhoSpectrum::from_values({2, 1})));
    CHECK_THROWS_AS(rho_defining_property_oracle(RhoSpectrum::from_values({1}), 2), PreconditionError);
}

TEST_CASE("every built-in validates") {
    std::vector<QGModel> ms{builtin_su_q_2(0.5, 8), builtin_su_q_2(0.8, 8), builtin_su_q_2(1.0, 4),
                            builtin_finite_group_dual("s3"), builtin_finite_group_dual("cyclic_5"),
                            builtin_free_orthogonal_fund({1, 1, 2}), builtin_free_orthogonal_fund({1, 2})};
    for (const auto& m : ms) {
        ValidationReport r = validate_model(m);
        CHECK_MESSAGE(r.ok(), m.name());
        CHECK(load_model(model_to_json(m)).irreps().size() == m.irreps().size());
    }
}
