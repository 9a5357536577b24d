#pragma once

namespace qcorr {

// Per-sample bundle of the atom-atom correlation measures.
struct CorrelationRecord {
    double t = 0.0;            // time in units 1/g
    double concurrence = 0.0;  // C
    double chsh = 0.0;         // B, violation means > 2
    double discord = 0.0;      // D
    double mutual = 0.0;       // I
    double classical = 0.0;    // J
    double purity = 0.0;       // tr(rho_AB^2)
};

}  // namespace qcorr
