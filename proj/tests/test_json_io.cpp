#include <catch2/catch_amalgamated.hpp>

#include "kscheck/json_io.hpp"

using namespace kscheck;

namespace {
RationalUnitVector3 unit(int x, int y, int z) {
  return RationalUnitVector3(Rational(x), Rational(y), Rational(z));
}
}  // namespace

TEST_CASE("rational JSON round trip") {
  CHECK(to_json(Rational(104, 185)) == Json("104/185"));
  CHECK(rational_from_json(Json("104/185")) == Rational(104, 185));
  CHECK(rational_from_json(Json("7")) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("family JSON round trip") {
  FamilyParameters p = paper_parameters();
  Json j = family_to_json(p);
  CHECK(j["cA"] == "104/185");
  CHECK(j["cB"] == "10209400000/12605796209");
  FamilyParameters back = family_from_json(j);
  CHECK(back.a.c() == p.a.c());
  CHECK(back.b.s() == p.b.s());
  CHECK(back.norm_factor == p.norm_factor);
  CHECK_THROWS_AS(family_from_json(Json{{"cA", "1/2"}}),
                  std::invalid_argument);
}

TEST_CASE("rational vector sets round trip") {
  std::vector<RationalUnitVector3> vecs{unit(1, 0, 0),
                                        RationalUnitVector3(Rational(3, 5),
                                                            Rational(0),
                                                            Rational(4, 5))};
  Json j = to_json(vecs);
  CHECK(j["dimension"] == 3);
  CHECK(j["field"] == "rational");
  auto back = vector_set_from_json(j);
  auto* rational = std::get_if<std::vector<RationalUnitVector3>>(&back);
  REQUIRE(rational != nullptr);
  CHECK(*rational == vecs);
}

TEST_CASE("real vector sets round trip") {
  std::vector<RealVector3> vecs{{1.0, 0.0, 0.0}, {0.0, 0.70710678118654752,
                                                  0.70710678118654752}};
  Json j = to_json(vecs);
  CHECK(j["field"] == "real");
  auto back = vector_set_from_json(j);
  auto* real = std::get_if<std::vector<RealVector3>>(&back);
  REQUIRE(real != nullptr);
  CHECK(real->size() == 2);
}

TEST_CASE("malformed vector sets are rejected") {
  CHECK_THROWS_AS(vector_set_from_json(Json{{"field", "rational"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_set_from_json(Json{{"field", "octonion"},
                                            {"vectors", Json::array({1})}}),
                  std::invalid_argument);
  // Non-unit rational vectors violate the exact contract.
  Json bad{{"dimension", 3},
           {"field", "rational"},
           {"vectors", Json::array({Json::array({"1", "1", "0"})})}};
  CHECK_THROWS_AS(vector_set_from_json(bad), std::invalid_argument);
}

TEST_CASE("partial colorings parse and translate") {
  Json j{{"assignments", Json{{"0", 1}, {"2", 0}}}};
  PartialColoring partial = partial_from_json(j);
  CHECK(partial.assignments.at(0) == 1);
  CHECK(partial.assignments.at(2) == 0);
  CHECK_THROWS_AS(partial_from_json(Json{{"assignments", Json{{"x", 1}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(partial_from_json(Json{{"assignments", Json{{"0", 2}}}}),
                  std::invalid_argument);

  // Antipodal inputs collapse; contradictory values on them are an error.
  auto graph = build_graph(std::vector<RationalUnitVector3>{
      unit(1, 0, 0), unit(-1, 0, 0), unit(0, 1, 0)});
  PartialColoring by_input;
  by_input.assignments[0] = 1;
  by_input.assignments[1] = 0;
  CHECK_THROWS_AS(translate_partial(graph, by_input), std::invalid_argument);
  by_input.assignments[1] = 1;
  PartialColoring ok = translate_partial(graph, by_input);
  CHECK(ok.assignments.size() == 1);
}

TEST_CASE("colorability JSON carries witness or certificate") {
  auto graph = build_graph(std::vector<RationalUnitVector3>{
      unit(1, 0, 0), unit(0, 1, 0), unit(0, 0, 1), unit(-1, 0, 0)});
  auto feasible = find_ks_coloring(graph.structure, {});
  Json j = colorability_to_json(feasible, graph.input_to_vertex);
  CHECK(j["colorable"] == true);
  REQUIRE(j["witness"].is_array());
  CHECK(j["witness"].size() == 4);  // one entry per input position
  CHECK(j["witness"][0] == j["witness"][3]);  // antipodal inputs agree
  CHECK(j["certificate"].is_null());

  PartialColoring two_ones;
  two_ones.assignments[0] = 1;
  two_ones.assignments[1] = 1;
  auto infeasible = find_ks_coloring(graph.structure, two_ones);
  REQUIRE_FALSE(infeasible.colorable());
  Json k = colorability_to_json(infeasible, graph.input_to_vertex);
  CHECK(k["colorable"] == false);
  CHECK(k["witness"].is_null());
  REQUIRE(k["certificate"].is_array());
  CHECK(k["certificate"].back().contains("violation"));
}

TEST_CASE("F report fields") {
  Json j = fvalue_to_json(f_qm(paper_parameters()));
  CHECK(j["F_3dp"] == "1.108");
  CHECK(j["F_decimal"] == "1.108734031349");
  const std::string exact = j["F_exact"].get<std::string>();
  Rational sum = parse_rational(j["term_AB"].get<std::string>()) +
                 parse_rational(j["term_CB"].get<std::string>());
  CHECK(parse_rational(exact) == sum);
}

TEST_CASE("sweep CSV shape") {
  FamilyParameters params = paper_parameters();
  MeyerModel model(Axis::Y);
  SweepReport sweep = precision_sweep(model, params, {1e-2, 1e-3}, 200, 4);
  std::string csv = sweep_to_csv(sweep);
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 3);  // header + one row per epsilon
  CHECK(csv.rfind("epsilon,samples,model_seed", 0) == 0);
}

TEST_CASE("nonexistent files raise input errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"),
                  std::invalid_argument);
}
