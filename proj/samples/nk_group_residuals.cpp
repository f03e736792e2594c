// Which presets are xi-flat on the 3-dim N(1 - lambda^2) Lie group?
#include <iomanip>
#include <iostream>

#include "nkt/t_tensor.hpp"

int main(int argc, char** argv) {
  nkt::Rational lambda = argc > 1 ? nkt::parse_rational(argv[1]) : nkt::Rational(1, 2);
  nkt::FrameModel m = nkt::nk_lie_group_3d(lambda);
  nkt::CurvatureData d = nkt::curvature(m);
  std::cout << m.name << ", kappa = " << nkt::to_string(1 - lambda * lambda) << "\n";
  for (const auto& info : nkt::preset_table) {
    nkt::TCoeffs c = nkt::preset(info.id);
    if (c.has_flag("free-parameters")) continue;
    nkt::NumericCoeffs a = nkt::evaluate_coeffs(c, m.n());
    nkt::Rational res = nkt::condition_residual(m, d, a, nkt::ConditionKind::xi_t_flat, {});
    std::cout << "  " << std::left << std::setw(8) << info.label << (res == 0 ? "xi-flat" : "residual " + nkt::to_string(res))
              << "\n";
  }
}
