#include <gtest/gtest.h>

#include "delforge/constructions.hpp"
#include "delforge/errors.hpp"
#include "delforge/serialize.hpp"

namespace delforge {
namespace {

TEST(SerializeTest, RationalStrings) {
  EXPECT_EQ(to_json(Rational(-1, 3)), Json("-1/3"));
  EXPECT_EQ(to_json(Rational(2)), Json("2"));
  EXPECT_EQ(rational_from_json(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
  EXPECT_THROW(rational_from_json(Json("x")), ParseError);
}

TEST(SerializeTest, LatticeLayout) {
  const Json j = to_json(standard_d_lattice(2));
  EXPECT_EQ(j, Json::parse(R"({"dim": 2, "basis": [["1","1"],["1","-1"]]})"));
}

TEST(SerializeTest, InstancesRoundTrip) {
  for (const auto& inst : {construct_pn(6), construct_half_cube(4), construct_cross_polytope(3), construct_segment()}) {
    const std::string text = dump_json(to_json(inst));
    const DelaunayInstance back = instance_from_json(parse_json(text));
    EXPECT_EQ(back.label, inst.label);
    EXPECT_EQ(back.dim, inst.dim);
    EXPECT_EQ(back.form, inst.form);
    EXPECT_EQ(back.lattice, inst.lattice);
    EXPECT_EQ(back.vertices, inst.vertices);
    EXPECT_EQ(dump_json(to_json(back)), text);
  }
}

TEST(SerializeTest, CertificatesRoundTrip) {
  const auto inst = construct_half_cube(5);
  const auto sphere = verify_delaunay(inst);
  const auto ext = certify_extreme(inst, sphere);
  const auto sym = automorphisms(inst);

  const Json sj = to_json(sphere);
  EXPECT_EQ(to_json(sphere_certificate_from_json(parse_json(dump_json(sj)))), sj);
  const Json ej = to_json(ext);
  EXPECT_EQ(extremality_certificate_from_json(parse_json(dump_json(ej))), ext);
  const Json yj = to_json(sym);
  EXPECT_EQ(to_json(symmetry_report_from_json(parse_json(dump_json(yj)))), yj);

  EXPECT_EQ(sj["status"], "verified");
  EXPECT_TRUE(sj["witness"].is_null());
  EXPECT_EQ(ej["kernel_dim"], 5);
  EXPECT_TRUE(ej["recovered_form"].is_null());
  EXPECT_EQ(yj["group_order"], "1920");
}

TEST(SerializeTest, MalformedInstancesAreRejected) {
  const std::string good = dump_json(to_json(construct_half_cube(3)));
  EXPECT_NO_THROW(instance_from_json(parse_json(good)));
  EXPECT_THROW(parse_json("{not json"), ParseError);
  EXPECT_THROW(instance_from_json(Json::array()), ParseError);

  Json j = parse_json(good);
  j.erase("vertices");
  EXPECT_THROW(instance_from_json(j), ParseError);

  j = parse_json(good);
  j["form"] = Json::parse(R"([["1","2","0"],["0","1","0"],["0","0","1"]])");
  EXPECT_THROW(instance_from_json(j), ParseError);

  j = parse_json(good);
  j["lattice"]["basis"] = Json::parse(R"([["1","1","0"],["2","2","0"],["0","0","1"]])");
  EXPECT_THROW(instance_from_json(j), ParseError);

  j = parse_json(good);
  j["vertices"][0] = Json::parse(R"(["0","0"])");
  EXPECT_THROW(instance_from_json(j), ParseError);

  j = parse_json(good);
  j["dim"] = -3;
  EXPECT_THROW(instance_from_json(j), ParseError);
}

}  // namespace
}  // namespace delforge
