#pragma once

#include <string>
#include <vector>

#include "spectra/duality.hpp"
#include "spectra/mspec.hpp"
#include "spectra/rings.hpp"

namespace spectra {

struct AxiomViolation : std::runtime_error {
    explicit AxiomViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A Q(i) SC algebra with a conjugate-linear involution star(v) = S * conj(v).
/// Construction validates star^2 = id and multiplicativity on basis pairs.
struct InvolutiveAlgebra {
    RingPtr algebra;
    Matrix<GQ> star;
};

InvolutiveAlgebra make_involutive(const RingPtr& a, Matrix<GQ> star);

std::vector<GQ> apply_star(const InvolutiveAlgebra& a, const std::vector<GQ>& coords);

/// The unique involution making dev an isomorphism onto coordinatewise
/// conjugation: star = dev^-1 . conj . dev.  Requires the algebra to split
/// with bijective dev.
InvolutiveAlgebra canonical_involution(const RingPtr& a);

/// The fixed subring of the involution, as a rational real form.
struct HermitianBasis {
    RingPtr real_form;                      // SC algebra over Q
    std::vector<std::vector<GQ>> vectors;   // basis of the fixed subspace, in A-coordinates
};

HermitianBasis hermitian_subring(const InvolutiveAlgebra& a);

/// Scalar extension Q -> Q(i) with conjugation-on-scalars as the involution.
InvolutiveAlgebra induce(const RingPtr& a0);

struct RoundtripCert {
    bool valid = false;
    Matrix<GQ> iso;  // explicit invertible matrix realizing the isomorphism
    std::string note;
};

/// H(I(A0)) isomorphic to A0, as an explicit exact matrix identity.
RoundtripCert roundtrip_hi(const RingPtr& a0);
/// I(H(A)) isomorphic to A, commuting with the involutions.
RoundtripCert roundtrip_ih(const InvolutiveAlgebra& a);

/// Characters of the scalar extension matched to characters of the real
/// form; bijective for every split rational algebra.
std::vector<std::size_t> base_change_mspec(const RingPtr& a0);

/// ||a . a*|| = ||a||^2 on exact squared moduli, for each sample.
AxiomReport check_banach_star_complex(const InvolutiveAlgebra& a,
                                      const std::vector<RingElement>& samples);

/// phi . star = star . phi as an exact matrix identity.
bool check_hom_star_compat(const RingHom& phi, const InvolutiveAlgebra& src,
                           const InvolutiveAlgebra& tgt);

}  // namespace spectra
