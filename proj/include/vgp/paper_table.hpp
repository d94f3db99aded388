#pragma once

#include <array>

namespace vgp {

// Published call prices on the 31 x 6 lattice (S = 438.98, r = 0.06), maturities as paper_taus().
struct PaperTable3Row {
    double strike;
    double moneyness;
    std::array<double, 6> bsm;
    std::array<double, 6> vg_extended;
    std::array<double, 6> vg_generalized;
};

const std::array<PaperTable3Row, 31>& paper_table3();

} // namespace vgp
