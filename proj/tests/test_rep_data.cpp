#include <doctest.h>

#include <cmath>

#include "cqg/models.hpp"
#include "cqg/rep_data.hpp"

using namespace cqg;
using nlohmann::json;

namespace {

json z2_doc() {
    return json::parse(R"({
      "name": "z2", "trivial": "0",
      "irreps": [ {"label": "0", "dim": 1, "rho": [1], "conjugate": "0"},
                  {"label": "1", "dim": 1, "rho": [1], "conjugate": "1"} ],
      "fusion": [ {"left": "0", "right": "0", "components": {"0": 1}},
                  {"left": "0", "right": "1", "components": {"1": 1}},
                  {"left": "1", "right": "0", "components": {"1": 1}},
                  {"left": "1", "right": "1", "components": {"0": 1}} ]
    })");
}

}  // namespace

TEST_CASE("normalize_rho rescales onto trace balance") {
    auto a = normalize_rho({1, 4});
    CHECK(a.scale == doctest::Approx(0.5));
    CHECK(a.spectrum[0] == doctest::Approx(2.0));
    CHECK(a.spectrum[1] == doctest::Approx(0.5));

    auto b = normalize_rho({1, 1, 4});
    CHECK(b.scale == doctest::Approx(std::sqrt(3.0 / 8.0)));
    CHECK(b.spectrum[0] == doctest::Approx(std::sqrt(6.0)));
    CHECK(b.spectrum.trace_balance_residual() < 1e-12);

    auto c = normalize_rho({1, 1, 1});
    CHECK(c.spectrum.values() == std::vector<double>{1, 1, 1});

    CHECK_THROWS_AS(normalize_rho({}), ConsistencyError);
    CHECK_THROWS_AS(normalize_rho({1, -1}), ConsistencyError);
}

TEST_CASE("spectra are sorted and reject non-positive entries") {
    auto s = RhoSpectrum::from_values({0.25, 4, 1});
    CHECK(s.values() == std::vector<double>{4, 1, 0.25});
    CHECK_THROWS_AS(RhoSpectrum::from_values({1, 0}), ConsistencyError);
    CHECK(RhoSpectrum::from_values({3, 1, 1.0 / 3}).trace_balance_residual() < 1e-14);
    CHECK(tensor(RhoSpectrum::from_values({2, 0.5}), RhoSpectrum::from_values({2, 0.5})).values() ==
          std::vector<double>{4, 1, 1, 0.25});
}

TEST_CASE("load_model accepts a group dual document") {
    QGModel m = load_model(z2_doc());
    CHECK(m.irreps().size() == 2);
    CHECK(m.fusion().multiplicity("0", "1", "1") == 1);
    CHECK_FALSE(m.fusion().multiplicity("0", "2", "2").has_value());
}

TEST_CASE("load_model rejects an unbalanced spectrum") {
    json doc = z2_doc();
    doc["irreps"][1]["rho"] = {2.0, 1.0};
    doc["irreps"][1]["dim"] = 2;
    doc["fusion"] = json::array();
    CHECK_THROWS_AS(load_model(doc), ConsistencyError);

    // Opting into normalization records the scale instead.
    doc["normalize_rho"] = true;
    doc["irreps"][1]["rho"] = {4.0, 1.0};
    ValidationReport r;
    QGModel m = load_model(doc, {}, &r);
    CHECK(m.irrep("1").rho[0] == doctest::Approx(2.0));
    CHECK(r.rho_scale.at("1") == doctest::Approx(0.5));
}

TEST_CASE("load_model reports schema errors") {
    CHECK_THROWS_AS(load_model(json::parse(R"({"name": "x"})")), SchemaError);
    json doc = z2_doc();
    doc["irreps"][1]["label"] = "0";
    CHECK_THROWS_AS(load_model(doc), SchemaError);
    doc = z2_doc();
    doc["irreps"][1]["conjugate"] = "7";
    CHECK_THROWS_AS(load_model(doc), ConsistencyError);
    CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), SchemaError);
}

TEST_CASE("validate_model finds a Frobenius violation") {
    QGModel base = builtin_su_q_2(0.5, 4);
    auto data = base.data();
    // m(2, 1 (x) 1) = 1 but 2 is dropped from 1 (x) 1's reciprocal partner.
    data.fusion.set("2", "1", {{"3", 1}});
    QGModel bad(data);
    ValidationReport r = validate_model(bad);
    bool frob = false, dim_count = false;
    for (const auto& v : r.violations) {
        frob |= v.kind == "frobenius";
        dim_count |= v.kind == "dimension_count";
    }
    CHECK(frob);
    CHECK(dim_count);
    CHECK(validate_model(base).ok());
}

TEST_CASE("su_q_2 round-trips through the JSON schema") {
    QGModel m = builtin_su_q_2(0.5, 4);
    json doc = model_to_json(m);
    QGModel back = load_model(doc);
    REQUIRE(back.irreps().size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(back.irreps()[i].dim == int(i) + 1);
        CHECK(same_multiset(back.irreps()[i].rho, m.irreps()[i].rho, 1e-14));
    }
    auto a = m.cg_tensors("2", "1");
    auto b = back.cg_tensors("2", "1");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(a->size() == b->size());
    for (std::size_t i = 0; i < a->size(); ++i) CHECK(((*a)[i].coeffs - (*b)[i].coeffs).norm() < 1e-15);
    CHECK(model_to_json(back).dump() == doc.dump());
}
