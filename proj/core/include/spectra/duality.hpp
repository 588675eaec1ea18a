#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/mspec.hpp"
#include "spectra/rings.hpp"

namespace spectra {

struct FinSpace {
    std::vector<std::string> points;
    std::size_t size() const { return points.size(); }
    friend bool operator==(const FinSpace& a, const FinSpace& b) { return a.points == b.points; }
};

/// Total map f : source -> target, assignment[i] = index of f(point i).
struct SpaceMap {
    FinSpace source, target;
    std::vector<int> assignment;

    friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
        return a.source == b.source && a.target == b.target && a.assignment == b.assignment;
    }
};

SpaceMap identity_map(const FinSpace& x);
SpaceMap compose_maps(const SpaceMap& g, const SpaceMap& f);  // g after f

struct NotInduced : std::runtime_error {
    NotInduced() : std::runtime_error("homomorphism coordinate is not a point evaluation") {}
};

/// Contravariant function-ring functor: the pullback hom K^target -> K^source.
RingHom f_functor(const SpaceMap& f, FieldTag field);

struct ReflResult {
    RingPtr ring;                           // K^X
    std::vector<MaxIdealRep> spectrum;      // MSpec(K^X)
    std::vector<std::size_t> point_to_ideal;  // x -> index into spectrum
    bool bijective = false;
};

/// x |-> Ker(ev_x), matched against the computed spectrum.
ReflResult refl_alg(const FinSpace& x, FieldTag field);

/// The unique map inducing a validated hom between function rings.
SpaceMap hom_to_map(const RingHom& phi);

/// Naturality square: mspec_map(F(f)) . refl_source = refl_target . f.
bool check_naturality(const SpaceMap& f, FieldTag field);

struct SccCertificate {
    FinSpace bar_x;
    std::vector<std::size_t> c;  // the reflection map X -> barX
    bool c_bijective = false;
    std::size_t targets_checked = 0;
    std::size_t maps_checked = 0;
    bool factorizations_unique = true;
    std::size_t target_cap = 0;
    std::string note;
};

/// barX = MSpec(K^X) with the reflection as the universal map; the
/// certificate enumerates every map into targets of size <= target_cap and
/// verifies the unique factorization through c.
SccCertificate scc_finite(const FinSpace& x, FieldTag field, std::size_t target_cap);

/// Exact sup norm data.  Over Q the norm itself is rational; over Q(i) only
/// its square is, and comparisons happen on squares.
struct SupNorm {
    Rational sq;               // norm squared
    bool squared_only = false; // true when only the square is rational
    Rational value;            // the norm, valid when !squared_only

    friend bool operator==(const SupNorm& a, const SupNorm& b) { return a.sq == b.sq; }
    friend bool operator<=(const SupNorm& a, const SupNorm& b) { return a.sq <= b.sq; }
};

SupNorm sup_norm_of_coords(const std::vector<GQ>& coords, FieldTag field);
/// Norm of an element of a function ring, or of any split SC algebra
/// (transported through dev).
SupNorm sup_norm(const RingElement& a);

struct AxiomReport {
    bool ok = true;
    std::string violation;  // empty when ok
};

/// Norm axioms for a real function-ring stand-in: ||1|| = 1, ||a^2|| = ||a||^2,
/// submultiplicativity, and exact invertibility of 1 + a^2.  A doctored
/// coordinate transform may be supplied in place of dev (negative testing).
AxiomReport check_banach_star_real(const RingPtr& a, const std::vector<RingElement>& samples,
                                   const std::optional<Matrix<GQ>>& doctored_transform = {});

struct ContractReport {
    bool ok = true;
    bool automatic = false;  // pullback homs between function rings can only drop coordinates
    std::string violation;
};

/// ||phi(a)|| <= ||a|| for every sample, exactly.
ContractReport check_contractive(const RingHom& phi, const std::vector<RingElement>& samples);

}  // namespace spectra
