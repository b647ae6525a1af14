#include <doctest.h>

#include <algorithm>

#include "pego/criteria.hpp"
#include "pego/families.hpp"
#include "pego/serialize.hpp"

using namespace pego;
using HF = HalfLineFunction;

namespace {
const TimeGrid kFine;
const TimeGrid kCoarse(0.01, 20.0);
}  // namespace

TEST_CASE("catalog members all verify as Laplace-Pego at their declared order") {
  for (const auto& spec : catalog()) {
    const auto family = instantiate(spec, kFine);
    for (const auto& member : family.members) {
      const auto norms = verify_pego(member, family.order, kFine);
      CHECK(std::isfinite(norms.l1));
      CHECK(std::isfinite(norms.l2));
    }
  }
}

TEST_CASE("catalog carries the seven labeled families plus the zero family") {
  const auto names = catalog_names();
  for (const char* required : {"zero", "exp-singleton", "indicator-set", "exp-scale", "translate-ray",
                               "translate-ray-x1", "modulation-ray", "dilation"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  for (const auto& spec : catalog()) {
    CHECK(!spec.members.empty());
    CHECK(spec.parameters.size() == spec.members.size());
    if (spec.label != Label::Unknown) CHECK(!spec.rationale.empty());
  }
  CHECK(catalog_family("translate-ray").order.x == 0.0);
  CHECK(catalog_family("translate-ray").label == Label::NonCompact);
  CHECK(catalog_family("translate-ray-x1").order.x == 1.0);
  CHECK(catalog_family("translate-ray-x1").label == Label::Compact);
}

TEST_CASE("unknown catalog name raises a config error") {
  CHECK_THROWS_AS(catalog_family("no-such-family"), Error);
}

TEST_CASE("random families are deterministic in the seed") {
  const auto a = random_family(7, 12);
  const auto b = random_family(7, 12);
  CHECK(family_to_json(a).dump() == family_to_json(b).dump());
  const auto c = random_family(8, 12);
  CHECK(family_to_json(a).dump() != family_to_json(c).dump());
}

TEST_CASE("random family construction bounds parameters so members verify") {
  const auto spec = random_family(1, 20);
  CHECK(spec.members.size() == 20);
  CHECK(spec.label == Label::Unknown);
  const auto family = instantiate(spec, kFine);
  for (const auto& member : family.members) {
    const auto norms = verify_pego(member, Order(1.0), kFine);
    CHECK(std::isfinite(norms.l1));
    CHECK(std::isfinite(norms.l2));
  }

  const auto tiny = random_family(0, 1);
  CHECK(tiny.members.size() == 1);
}

TEST_CASE("criterion values are stable under permutation and duplication") {
  const auto spec = catalog_family("exp-scale");
  const auto family = instantiate(spec, kCoarse);

  std::vector<HF> permuted(family.members.rbegin(), family.members.rend());
  const PegoFamily permuted_family(permuted, family.order, kCoarse, family.label);

  std::vector<HF> duplicated = family.members;
  duplicated.insert(duplicated.end(), family.members.begin(), family.members.end());
  const PegoFamily duplicated_family(duplicated, family.order, kCoarse, family.label);

  const double base = exp_equivanish_tail(family, 1.0, 1e-2).supremum;
  CHECK(exp_equivanish_tail(permuted_family, 1.0, 1e-2).supremum == base);
  CHECK(exp_equivanish_tail(duplicated_family, 1.0, 1e-2).supremum == base);

  const double mod = exp_equicont_modulus(family, 0.04, 4, 1e-2).supremum;
  CHECK(exp_equicont_modulus(permuted_family, 0.04, 4, 1e-2).supremum == mod);
  CHECK(exp_equicont_modulus(duplicated_family, 0.04, 4, 1e-2).supremum == mod);

  CHECK(permuted_family.label == family.label);
  CHECK(duplicated_family.label == family.label);
}

TEST_CASE("instantiate rejects empty member lists") {
  FamilySpec spec;
  spec.name = "empty";
  CHECK_THROWS_AS(instantiate(spec, kCoarse), Error);
}
