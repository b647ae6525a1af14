#include "pego/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pego {

namespace {

/// Bit-reversal (van der Corput) ordering of 0..count-1: prefixes cover the
/// parameter range coarsely first, so the net oracle's nested prefixes see
/// the whole family at increasing density.
std::vector<int> bit_reversed_order(int count) {
  int bits = 0;
  while ((1 << bits) < count) ++bits;
  std::vector<int> order;
  order.reserve(count);
  for (int i = 0; i < (1 << bits); ++i) {
    int r = 0;
    for (int b = 0; b < bits; ++b)
      if (i & (1 << b)) r |= 1 << (bits - 1 - b);
    if (r < count) order.push_back(r);
  }
  if (order.empty()) order.push_back(0);
  return order;
}

FamilySpec make_spec(std::string name, double x, Label label, std::string rationale) {
  FamilySpec spec;
  spec.name = std::move(name);
  spec.order = Order(x);
  spec.label = label;
  spec.rationale = std::move(rationale);
  return spec;
}

}  // namespace

std::vector<FamilySpec> catalog() {
  std::vector<FamilySpec> out;

  {
    auto spec = make_spec("zero", 0.0, Label::Compact, "single zero function: finite set");
    spec.parameters = {0.0};
    spec.members = {HalfLineFunction::zero()};
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("exp-singleton", 0.0, Label::Compact, "single decaying exponential: finite set");
    spec.parameters = {1.0};
    spec.members = {HalfLineFunction::exponential(1.0)};
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("indicator-set", 0.0, Label::Compact,
                          "indicators 1_(0,b), b in [1, 1.5]: continuous image of a compact parameter interval");
    const int count = 65;
    for (int idx : bit_reversed_order(count)) {
      const double b = 1.0 + idx / 128.0;
      spec.parameters.push_back(b);
      spec.members.push_back(HalfLineFunction::indicator(0.0, b));
    }
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("exp-scale", 0.0, Label::Compact,
                          "e^{-at}, a in [1,2]: continuous image of a compact parameter interval");
    for (int i = 0; i <= 10; ++i) {
      const double a = 1.0 + 0.1 * i;
      spec.parameters.push_back(a);
      spec.members.push_back(HalfLineFunction::exponential(a));
    }
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("translate-ray", 0.0, Label::NonCompact,
                          "unit indicators shifted by s = 0..8 at order 0: pairwise distances sqrt(2)");
    for (int s = 0; s <= 8; ++s) {
      spec.parameters.push_back(s);
      spec.members.push_back(HalfLineFunction::translate(HalfLineFunction::indicator(0.0, 1.0), s));
    }
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("translate-ray-x1", 1.0, Label::Compact,
                          "the same translate ray at order 1: weighted members decay like e^{-2s} toward 0");
    for (int s = 0; s <= 8; ++s) {
      spec.parameters.push_back(s);
      spec.members.push_back(HalfLineFunction::translate(HalfLineFunction::indicator(0.0, 1.0), s));
    }
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("modulation-ray", 0.0, Label::NonCompact,
                          "e^{i omega t} e^{-t}, omega = 0..200: spectral mass escapes to high frequency");
    for (int i = 0; i <= 20; ++i) {
      const double omega = 10.0 * i;
      spec.parameters.push_back(omega);
      spec.members.push_back(HalfLineFunction::modulate(HalfLineFunction::exponential(1.0), omega));
    }
    out.push_back(std::move(spec));
  }
  {
    auto spec = make_spec("dilation", 0.0, Label::NonCompact,
                          "sqrt(c) 1_(0,1)(ct), c = 1..64: mass concentrates at 0, shift modulus bounded below");
    for (int i = 0; i <= 6; ++i) {
      const double c = std::pow(2.0, i);
      spec.parameters.push_back(c);
      spec.members.push_back(
          HalfLineFunction::scale(HalfLineFunction::indicator(0.0, 1.0 / c), Complex(std::sqrt(c), 0.0)));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

const FamilySpec& catalog_family(const std::string& name) {
  static const std::vector<FamilySpec> families = catalog();
  for (const auto& spec : families) {
    if (spec.name == name) return spec;
  }
  std::ostringstream msg;
  msg << "unknown family '" << name << "'; known families:";
  for (const auto& spec : families) msg << ' ' << spec.name;
  throw_error(ErrorCode::Config, msg.str());
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& spec : catalog()) names.push_back(spec.name);
  return names;
}

namespace {

/// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int index(int count) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(count)); }
};

HalfLineFunction random_term(Rng& rng, const KindMix& mix) {
  const double total = mix.exponential + mix.indicator + mix.modulated;
  const double pick = rng.uniform() * total;
  const Complex coeff(rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0));
  if (pick < mix.exponential) {
    return HalfLineFunction::scale(HalfLineFunction::exponential(rng.uniform(0.5, 3.0)), coeff);
  }
  if (pick < mix.exponential + mix.indicator) {
    const double a = rng.uniform(0.0, 8.0);
    const double b = a + rng.uniform(0.1, 2.0);
    return HalfLineFunction::scale(HalfLineFunction::indicator(a, b), coeff);
  }
  const double omega = rng.uniform(0.0, 50.0);
  return HalfLineFunction::scale(
      HalfLineFunction::modulate(HalfLineFunction::exponential(rng.uniform(0.5, 3.0)), omega), coeff);
}

}  // namespace

FamilySpec random_family(std::uint64_t seed, int size, KindMix mix) {
  if (size < 1) throw_error(ErrorCode::Config, "random family size must be >= 1");
  auto spec = make_spec("random", 1.0, Label::Unknown, "randomized members; no analytic ground truth");
  Rng rng(seed);
  for (int i = 0; i < size; ++i) {
    spec.parameters.push_back(static_cast<double>(i));
    const int terms = 1 + rng.index(3);
    std::vector<HalfLineFunction> parts;
    parts.reserve(terms);
    for (int t = 0; t < terms; ++t) parts.push_back(random_term(rng, mix));
    spec.members.push_back(terms == 1 ? parts.front() : HalfLineFunction::sum(std::move(parts)));
  }
  return spec;
}

PegoFamily instantiate(const FamilySpec& spec, const TimeGrid& grid) {
  return PegoFamily(spec.members, spec.order, grid, spec.label);
}

}  // namespace pego
