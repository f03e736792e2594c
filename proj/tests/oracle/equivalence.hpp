#pragma once

// Componentwise comparison of the library's derivation operators with the
// oracle on random (model, preset) pairs.

#include <random>
#include <string>
#include <vector>

#include "nkt/t_tensor.hpp"
#include "oracle/derivation_oracle.hpp"
#include "support/random_models.hpp"

namespace oracle {

struct PairResult {
  std::string model;
  nkt::PresetName preset;
  std::size_t components = 0;
  std::size_t mismatches = 0;
};

inline PairResult compare_pair(const nkt::FrameModel& m, nkt::PresetName p, const nkt::NumericCoeffs& a) {
  nkt::CurvatureData d = nkt::curvature(m);
  Operators op{d, a};
  PairResult out{m.name, p};
  const std::size_t n = d.dim;
  auto check = [&](const Rational& lib, const Rational& ref) {
    ++out.components;
    out.mismatches += lib != ref;
  };
  for (bool printed : {true, false}) {
    auto lib = nkt::t_dot_riemann_components(
        d, a, printed ? nkt::DerivationVariant::printed : nkt::DerivationVariant::standard);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            Vec ref = t_dot_r(op, i, j, k, l, printed);
            for (std::size_t q = 0; q < n; ++q) check(lib(i, j, k, l, q), ref[q]);
          }
  }
  auto lib = nkt::t_dot_ricci_components(d, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) check(lib(i, j, k), t_dot_s(op, i, j, k));
  return out;
}

inline std::vector<PairResult> random_pairs(unsigned seed, int count) {
  nkt::test_support::ModelGenerator gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, nkt::all_presets.size() - 1);
  std::vector<PairResult> out;
  for (int trial = 0; trial < count; ++trial) {
    nkt::FrameModel m = gen.next();
    nkt::PresetName p = nkt::all_presets[pick(gen.rng())];
    nkt::Bindings at{{nkt::Var::n, Rational(static_cast<long>(m.n()))},
                     {nkt::Var::a0, gen.small() + 1},
                     {nkt::Var::a1, gen.small()}};
    out.push_back(compare_pair(m, p, nkt::evaluate_coeffs(nkt::preset(p), at)));
  }
  return out;
}

}  // namespace oracle
