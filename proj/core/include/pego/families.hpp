#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pego/halfline.hpp"

namespace pego {

/// Named, labeled family recipe: the explicit sampling plan (parameter list
/// and order) plus the ground-truth label and its one-line provenance.
struct FamilySpec {
  std::string name;
  Order order;
  Label label = Label::Unknown;
  std::string rationale;
  std::vector<double> parameters;
  std::vector<HalfLineFunction> members;
};

/// Labeled test catalog. Sampling plans are part of each family: parameter
/// lists are stored in the order the net oracle consumes them.
std::vector<FamilySpec> catalog();

const FamilySpec& catalog_family(const std::string& name);

std::vector<std::string> catalog_names();

struct KindMix {
  double exponential = 0.4;
  double indicator = 0.3;
  double modulated = 0.3;
};

/// Deterministic-in-seed family of random finite sums of exponentials,
/// indicators and modulated exponentials with bounded parameters.
FamilySpec random_family(std::uint64_t seed, int size, KindMix mix = {});

PegoFamily instantiate(const FamilySpec& spec, const TimeGrid& grid);

}  // namespace pego
