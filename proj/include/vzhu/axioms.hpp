#ifndef VZHU_AXIOMS_HPP
#define VZHU_AXIOMS_HPP

#include <cstdint>

#include "vzhu/report.hpp"
#include "vzhu/view.hpp"

namespace vzhu {

struct AxiomSampling {
  Rational max_weight = 6;
  std::size_t samples = 500;
  std::uint64_t seed = 7;
  int mode_range = 4;
};

// Borcherds commutator, skew symmetry, vacuum/creation and D-bracket on
// seeded basis samples of weight <= max_weight, modes in [-mode_range, mode_range].
VerificationReport axiom_audit(const View& view, const AxiomSampling& s);

}  // namespace vzhu

#endif  // VZHU_AXIOMS_HPP
