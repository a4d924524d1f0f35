#include "coqdyn/matrix2.hpp"

#include <cmath>
#include <stdexcept>

namespace coqdyn {

CoqMatrix2 pauli(int l) {
    const Coq one(1.0);
    const Coq i = Coq::unit_i();
    const Coq j = Coq::unit_j();
    const Coq k = Coq::unit_k();
    switch (l) {
    case 1: return {Coq(0.0), one, one, Coq(0.0)};
    case 2: return {Coq(0.0), -i, i, Coq(0.0)};
    case 3: return {one, Coq(0.0), Coq(0.0), -one};
    case 4: return {Coq(0.0), -j, j, Coq(0.0)};
    case 5: return {Coq(0.0), -k, k, Coq(0.0)};
    default: throw std::out_of_range("pauli index must be in 1..5");
    }
}

Hamiltonian build_hamiltonian(const Params& u, NullPolicy policy) {
    Hamiltonian h;
    h.u = u;
    h.regime = classify(u);

    h.matrix = u[0] * CoqMatrix2::identity();
    for (int l = 1; l <= 5; ++l)
        h.matrix = h.matrix + u[l] * pauli(l);

    const double g2 = gap2(u);
    h.spectrum.gap2 = g2;
    h.spectrum.kind = h.regime.spectrum_kind;
    switch (h.spectrum.kind) {
    case SpectrumKind::RealPair:
        h.spectrum.e_plus = u[0] + std::sqrt(g2);
        h.spectrum.e_minus = u[0] - std::sqrt(g2);
        break;
    case SpectrumKind::ComplexConjugatePair:
        h.spectrum.e_plus = u[0];
        h.spectrum.e_minus = std::sqrt(-g2);
        break;
    case SpectrumKind::Degenerate:
        h.spectrum.e_plus = u[0];
        h.spectrum.e_minus = u[0];
        break;
    }

    if (h.regime.kind == RegimeKind::Null) {
        if (policy == NullPolicy::Reject)
            throw NullGenerator("u2^2 = u4^2 + u5^2: generator unit undefined");
        h.nu = 0.0;
        h.generator_unit = Coq(0.0);
        return h;
    }

    h.nu = nu_of(u);
    h.generator_unit = Coq(0.0, u[2], u[4], u[5]) / h.nu;
    return h;
}

Spectrum eigenvalues(const Hamiltonian& h) { return h.spectrum; }

CoqMatrix2 generator(const Hamiltonian& h) {
    if (h.regime.kind == RegimeKind::Null)
        throw NullGenerator("no evolution generator in the null regime");
    return h.generator_unit * h.matrix;
}

} // namespace coqdyn
