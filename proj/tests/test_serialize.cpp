#include <doctest.h>

#include "pego/families.hpp"
#include "pego/serialize.hpp"

using namespace pego;
using HF = HalfLineFunction;

TEST_CASE("function DSL round trip preserves evaluation") {
  const auto f = HF::sum({
      HF::scale(HF::modulate(HF::exponential(1.3), 7.0), Complex(0.5, -2.0)),
      HF::translate(HF::indicator(0.25, 1.75), 2.0),
      HF::damp(HF::poly_bump(0.5), 0.3),
  });
  const auto restored = function_from_json(function_to_json(f));
  for (double t : {-1.0, 0.0, 0.1, 0.5, 1.3, 2.5, 3.9}) {
    CHECK(restored(t).real() == f(t).real());
    CHECK(restored(t).imag() == f(t).imag());
  }
}

TEST_CASE("spec DSL examples parse") {
  CHECK(function_from_json(Json::parse(R"({"kind":"exponential","a":1.0})"))(1.0).real() ==
        doctest::Approx(std::exp(-1.0)));
  CHECK(function_from_json(Json::parse(R"({"kind":"indicator","a":1.0,"b":2.0})"))(1.5).real() == 1.0);
  const auto tr = function_from_json(Json::parse(R"({"kind":"translate","s":2.0,"base":{"kind":"indicator","a":0.0,"b":1.0}})"));
  CHECK(tr(2.5).real() == 1.0);
  CHECK(tr(1.5).real() == 0.0);
  const auto mod = function_from_json(
      Json::parse(R"({"kind":"modulate","omega":6.2832,"base":{"kind":"exponential","a":1.0}})"));
  CHECK(std::abs(mod(1.0)) == doctest::Approx(std::exp(-1.0)));
  const auto sum = function_from_json(Json::parse(R"({"kind":"sum","terms":[{"kind":"exponential","a":1.0}]})"));
  CHECK(sum(0.5).real() == doctest::Approx(std::exp(-0.5)));

  const auto grid = grid_from_json(Json::parse(R"({"dt":1e-3,"t_max":40.0})"));
  CHECK(grid.n == 40000);
}

TEST_CASE("malformed DSL raises config errors") {
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"a":1.0})")), Error);
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"kind":"mystery"})")), Error);
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"kind":"exponential"})")), Error);
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"kind":"scale","c":"x","base":{"kind":"exponential","a":1}})")),
                  Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"name":"f","members":[]})")), Error);
}

TEST_CASE("family JSON round trip") {
  const auto spec = catalog_family("exp-scale");
  const auto restored = family_from_json(family_to_json(spec));
  CHECK(restored.name == spec.name);
  CHECK(restored.order.x == spec.order.x);
  CHECK(restored.label == spec.label);
  CHECK(restored.parameters == spec.parameters);
  CHECK(restored.members.size() == spec.members.size());
  CHECK(family_to_json(restored).dump() == family_to_json(spec).dump());
}

TEST_CASE("sampled functions round trip bit-exactly") {
  const TimeGrid grid(0.1, 2.0);
  std::vector<Complex> values(grid.n);
  for (int j = 0; j < grid.n; ++j) values[j] = Complex(std::sin(j), std::cos(j));
  const auto f = HF::sampled(grid, values);
  const auto restored = function_from_json(function_to_json(f));
  for (int j = 0; j < grid.n; ++j) {
    CHECK(restored(grid.node(j)) == f(grid.node(j)));
  }
}

TEST_CASE("CSV emitters document their columns") {
  const TimeGrid grid(0.05, 2.0);
  const auto ygrid = default_frequency_grid(grid);
  const auto slice = laplace_line(HF::exponential(1.0), Order(0.0), grid, ygrid);
  const auto csv = slice_to_csv({slice});
  CHECK(csv.rfind("# columns: member,y,re,im,abs\n", 0) == 0);
  // one row per node plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == ygrid.node_count() + 1);
}
