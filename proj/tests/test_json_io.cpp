#include <gtest/gtest.h>

#include "staudt/combinatorics.hpp"
#include "staudt/errors.hpp"
#include "staudt/json_io.hpp"
#include "support.hpp"

using namespace staudt;
using json_io::json;
using support::Q;

TEST(Json, FieldsAndScalars)
{
    EXPECT_EQ(json_io::to_json(Q).dump(), R"({"kind":"rationals"})");
    EXPECT_EQ(json_io::to_json(FieldSpec::prime(101)).dump(), R"({"kind":"prime","p":101})");
    EXPECT_EQ(json_io::field_from_json(json::parse(R"({"kind":"prime","p":7})")), FieldSpec::prime(7));
    EXPECT_EQ(json_io::field_from_json(json("prime:13")), FieldSpec::prime(13));
    EXPECT_THROW(json_io::field_from_json(json::parse(R"({"kind":"reals"})")), ParseError);
    EXPECT_THROW(json_io::field_from_json(json::parse(R"({"kind":"prime","p":"x"})")), ParseError);

    const auto half = Scalar::from_rational(Q, mpq_class(-1) / 2);
    EXPECT_EQ(json_io::to_json(half).dump(), R"("-1/2")");
    EXPECT_EQ(json_io::scalar_from_json(json("-2/4"), Q), half);
    EXPECT_EQ(json_io::scalar_from_json(json(-3), FieldSpec::prime(7)), Scalar::from_int(FieldSpec::prime(7), 4));
    EXPECT_THROW(json_io::scalar_from_json(json("1/0"), Q), Error);
    EXPECT_THROW(json_io::scalar_from_json(json(1.5), Q), ParseError);
}

TEST(Json, ConfigurationRoundTrip)
{
    const auto config = support::curve_configuration({0, 1, 3, 7, 8}, 3);
    const auto j = json_io::to_json(config);
    EXPECT_EQ(j["dim"], 3);
    EXPECT_EQ(json_io::configuration_from_json(json::parse(j.dump())), config);

    auto bad = j;
    bad["dim"] = 2;
    EXPECT_THROW(json_io::configuration_from_json(bad), DimensionMismatch);
    bad = j;
    bad["points"] = json::array();
    EXPECT_THROW(json_io::configuration_from_json(bad), ParseError);
    EXPECT_THROW(json_io::configuration_from_json(json::parse(R"({"field":{"kind":"rationals"}})")), ParseError);
}

TEST(Json, ModelRoundTrip)
{
    const auto model = fit_rnc(support::curve_configuration({0, 1, 2, 5, 9}, 2));
    const auto back = json_io::model_from_json(json::parse(json_io::to_json(model).dump()), Q);
    EXPECT_EQ(back.alphas, model.alphas);
    EXPECT_EQ(back.frame_map, model.frame_map);
}

TEST(Json, InstanceRoundTrip)
{
    for (const auto& field : {Q, FieldSpec::prime(101)}) {
        const auto inst = sample_instance(3, field, 5);
        const auto j = json_io::to_json(inst);
        EXPECT_EQ(j["schema"], "vonstaudt-instance/1");
        const auto back = json_io::instance_from_json(json::parse(j.dump()));
        EXPECT_EQ(back.Q, inst.Q);
        EXPECT_EQ(back.P, inst.P);
        EXPECT_EQ(back.planes, inst.planes);
        EXPECT_EQ(back.R, inst.R);
        EXPECT_EQ(back.seed, inst.seed);
        EXPECT_EQ(json_io::to_json(back).dump(), j.dump());
    }
}

TEST(Json, InstanceFromParametersOnly)
{
    const auto j = json::parse(R"({"d":2,"field":{"kind":"rationals"},"Q":[["0","1"],["1","1"],["2","1"],["3","1"],["4","1"],["5","1"]]})");
    const auto inst = json_io::instance_from_json(j);
    EXPECT_EQ(inst.R, build_instance(2, support::params({0, 1, 2, 3, 4, 5}), Q).R);
}

TEST(Json, InstanceInconsistencies)
{
    const auto j = json_io::to_json(sample_instance(2, Q, 1));
    auto bad = j;
    bad["P"][0] = bad["P"][1];
    EXPECT_THROW(json_io::instance_from_json(bad), ParseError);
    bad = j;
    bad["Q"].erase(0);
    EXPECT_THROW(json_io::instance_from_json(bad), DimensionMismatch);
    bad = j;
    bad["Q"][1] = bad["Q"][0];
    EXPECT_THROW(json_io::instance_from_json(bad), Error);
    bad = j;
    bad.erase("Q");
    EXPECT_THROW(json_io::instance_from_json(bad), ParseError);

    // A stored R is taken as given.
    auto tampered = j;
    tampered["R"][0] = json::array({"1", "2", "3"});
    const auto inst = json_io::instance_from_json(tampered);
    EXPECT_EQ(inst.R.at(1), support::point({1, 2, 3}));
    EXPECT_FALSE(verify_instance(inst).verdict);
}

TEST(Json, Certificate)
{
    const auto cert = verify_instance(sample_instance(2, Q, 3), {.castelnuovo = true});
    const auto j = json_io::to_json(cert);
    EXPECT_EQ(j["schema"], "vonstaudt-cert/1");
    EXPECT_EQ(j["verdict"], true);
    EXPECT_EQ(j["psi_total"], 1);
    EXPECT_EQ(j["psi_failures"], json::array());
    EXPECT_EQ(j["castelnuovo_ok"], true);
    EXPECT_EQ(j["seed"], 3);

    const auto plain = json_io::to_json(verify_instance(build_instance(2, support::params({0, 1, 2, 3, 4, 5}), Q)));
    EXPECT_TRUE(plain["seed"].is_null());
    EXPECT_TRUE(plain["castelnuovo_ok"].is_null());
}

TEST(Json, Records)
{
    const auto split = SubsetSplit::make(3, {7, 4, 5, 6});
    EXPECT_EQ(json_io::factorization_record(3, split, true).dump(),
              R"({"kind":"factorization","d":3,"K":[4,5,6,7],"ok":true})");

    const auto idx = PsiIndex::make(3, 8, index_range(1, 7), index_range(1, 6));
    const auto rec = json_io::psi_identity_record(idx, verify_psi_identity(3, idx));
    EXPECT_EQ(rec["kind"], "psi");
    EXPECT_EQ(rec["ok"], true);
    EXPECT_EQ(rec["J"], json::parse("[1,2,3,4,5,6,7]"));

    const auto report = psi_eval(support::curve_configuration({0, 1, 2, 3, 4, 5, 6, 7}, 3), idx);
    const auto rj = json_io::to_json(report);
    EXPECT_EQ(rj["value"], "0");
    EXPECT_EQ(rj["m1"], rj["m2"]);
}
