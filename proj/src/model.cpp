#include "qcorr/model.hpp"

#include <cmath>

namespace qcorr::model {

namespace {

const cplx kI{0.0, 1.0};

ComplexMatrix photon_annihilation() {
    ComplexMatrix a(3, 3);
    a(0, 1) = 1.0;
    a(1, 2) = std::sqrt(2.0);
    return a;
}

// atom operators in the (e, g) ordering
ComplexMatrix sigma_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix sigma_plus() { return ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}; }

ComplexMatrix on_atom_a(const ComplexMatrix& op) {
    return linalg::kron(linalg::kron(op, ComplexMatrix::identity(2)), ComplexMatrix::identity(3));
}
ComplexMatrix on_atom_b(const ComplexMatrix& op) {
    return linalg::kron(linalg::kron(ComplexMatrix::identity(2), op), ComplexMatrix::identity(3));
}
ComplexMatrix on_field(const ComplexMatrix& op) {
    return linalg::kron(ComplexMatrix::identity(4), op);
}

}  // namespace

std::string to_string(InitialState s) {
    switch (s) {
        case InitialState::EE0: return "ee0";
        case InitialState::EG1: return "eg1";
        case InitialState::GE1: return "ge1";
        case InitialState::BellPlus1: return "bell";
    }
    return "?";
}

void FullState::validate() const {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw std::invalid_argument("FullState: density matrix must be 12x12");
    }
    if (!rho.is_hermitian(1e-10)) {
        throw std::invalid_argument("FullState: density matrix not Hermitian within 1e-10");
    }
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > 1e-10) {
        throw std::invalid_argument("FullState: trace deviates from 1 beyond 1e-10");
    }
}

ComplexMatrix hamiltonian(const SystemParams& p) {
    p.validate();
    const ComplexMatrix a = on_field(photon_annihilation());
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix spA = on_atom_a(sigma_plus());
    const ComplexMatrix spB = on_atom_b(sigma_plus());

    ComplexMatrix h = (p.delta1 / 2.0) * on_atom_a(sigma_z());
    h += (p.delta2 / 2.0) * on_atom_b(sigma_z());
    h += p.g1 * (a * spA + ad * spA.adjoint());
    h += p.g2 * (a * spB + ad * spB.adjoint());
    return h;
}

ComplexMatrix liouvillian(const SystemParams& p) {
    const ComplexMatrix h = hamiltonian(p);
    const ComplexMatrix a = on_field(photon_annihilation());
    const ComplexMatrix n = a.adjoint() * a;
    const ComplexMatrix id = ComplexMatrix::identity(kDim);

    ComplexMatrix l = (-kI) * (linalg::kron(h, id) - linalg::kron(id, h.transpose()));
    if (p.kappa != 0.0) {
        // a is real, so conj(a) = a
        l += p.kappa * linalg::kron(a, a);
        l -= (p.kappa / 2.0) * (linalg::kron(n, id) + linalg::kron(id, n.transpose()));
    }
    return l;
}

FullState initial_density(InitialState s) {
    FullState st{ComplexMatrix(kDim, kDim)};
    switch (s) {
        case InitialState::EE0:
            st.rho(kBasis[0], kBasis[0]) = 1.0;
            break;
        case InitialState::EG1:
            st.rho(kBasis[1], kBasis[1]) = 1.0;
            break;
        case InitialState::GE1:
            st.rho(kBasis[3], kBasis[3]) = 1.0;
            break;
        case InitialState::BellPlus1:
            st.rho(kBasis[1], kBasis[1]) = 0.5;
            st.rho(kBasis[3], kBasis[3]) = 0.5;
            st.rho(kBasis[1], kBasis[3]) = 0.5;
            st.rho(kBasis[3], kBasis[1]) = 0.5;
            break;
    }
    return st;
}

ComplexMatrix number_operator() {
    const ComplexMatrix a = on_field(photon_annihilation());
    const ComplexMatrix spA = on_atom_a(sigma_plus());
    const ComplexMatrix spB = on_atom_b(sigma_plus());
    return spA * spA.adjoint() + spB * spB.adjoint() + a.adjoint() * a;
}

ComplexMatrix annihilation_operator() { return on_field(photon_annihilation()); }

}  // namespace qcorr::model
