// Physical system: two two-level atoms coupled to one lossy cavity mode
// truncated at two photons. Provides the rotating-frame Hamiltonian, the
// Lindblad superoperator for cavity decay, and the supported initial states.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "qcorr/linalg.hpp"

namespace qcorr::model {

using linalg::ComplexMatrix;
using linalg::cplx;

// All rates and frequencies in units of a reference coupling g.
struct SystemParams {
    double g1 = 1.0;
    double g2 = 1.0;
    double delta1 = 0.0;  // omega_A - omega
    double delta2 = 0.0;  // omega_B - omega
    double kappa = 0.0;   // cavity photon loss rate

    void validate() const {
        if (!(g1 > 0.0) || !(g2 > 0.0)) {
            throw std::invalid_argument("SystemParams: couplings must be positive");
        }
        if (!(kappa >= 0.0)) {
            throw std::invalid_argument("SystemParams: kappa must be non-negative");
        }
    }
};

enum class InitialState { EE0, EG1, GE1, BellPlus1 };

std::string to_string(InitialState s);

// Product space: atom A (x) atom B (x) photon number 0..2, dimension 12.
// Per atom the excited level comes first (e = 0, g = 1), so
//   product_index(a, b, n) = 6a + 3b + n.
inline constexpr std::size_t kDim = 12;
inline constexpr std::size_t kSuperDim = kDim * kDim;

constexpr std::size_t product_index(int atom_a, int atom_b, int photons) {
    return static_cast<std::size_t>(6 * atom_a + 3 * atom_b + photons);
}

// The eight basis states reachable from the supported initial states,
// in the conventional order used throughout:
//   0: |e,e,0>  1: |e,g,1>  2: |e,g,0>  3: |g,e,1>
//   4: |g,e,0>  5: |g,g,2>  6: |g,g,1>  7: |g,g,0>
// Indexing here is 0-based; the matching density-matrix components are
// written rho11..rho88 elsewhere.
inline constexpr std::array<std::size_t, 8> kBasis = {
    product_index(0, 0, 0), product_index(0, 1, 1), product_index(0, 1, 0),
    product_index(1, 0, 1), product_index(1, 0, 0), product_index(1, 1, 2),
    product_index(1, 1, 1), product_index(1, 1, 0),
};

// The four product states never populated by the dynamics from the
// supported initial states (all carry more than two excitations).
inline constexpr std::array<std::size_t, 4> kUnreachable = {
    product_index(0, 0, 1), product_index(0, 0, 2),
    product_index(0, 1, 2), product_index(1, 0, 2),
};

// Total excitation number of each basis state in kBasis order.
inline constexpr std::array<int, 8> kExcitations = {2, 2, 1, 2, 1, 2, 1, 0};

struct FullState {
    ComplexMatrix rho;  // 12x12 density matrix in the product ordering

    // Hermiticity and unit trace within 1e-10; eigenvalues >= -1e-8 are
    // checked separately where the spectrum is already needed.
    void validate() const;
};

// H/hbar in the frame rotating at the cavity frequency:
//   (delta1/2) sz_A + (delta2/2) sz_B
//   + g1 (a sp_A + a^dag sm_A) + g2 (a sp_B + a^dag sm_B)
ComplexMatrix hamiltonian(const SystemParams& p);

// 144x144 superoperator L with vec(rho_dot) = L vec(rho) (row-major vec):
//   L = -i(H (x) I - I (x) H^T) + kappa (a (x) conj(a))
//       - kappa/2 (a^dag a (x) I + I (x) (a^dag a)^T)
ComplexMatrix liouvillian(const SystemParams& p);

FullState initial_density(InitialState s);

// N = sp_A sm_A + sp_B sm_B + a^dag a; commutes with the Hamiltonian.
ComplexMatrix number_operator();

// Photon annihilation operator on the product space.
ComplexMatrix annihilation_operator();

}  // namespace qcorr::model
