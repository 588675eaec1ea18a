#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/poly.hpp"
#include "spectra/scalar.hpp"

namespace spectra {

struct OwnerMismatch : std::invalid_argument {
    OwnerMismatch() : std::invalid_argument("elements belong to different rings") {}
};
struct InvalidRing : std::invalid_argument {
    explicit InvalidRing(const std::string& what) : std::invalid_argument(what) {}
};

/// Z/n. n = 1 is the zero ring.
struct ZMod {
    std::uint64_t n;
};

/// Boolean ring of all subsets of a finite ground set (symmetric difference,
/// intersection). Empty ground set gives the zero ring.
struct BoolRing {
    std::vector<std::string> ground;
};

/// Commutative unital algebra over Q or Q(i) given by structure constants:
/// table[i][j] holds the coordinates of e_i * e_j.
struct SCAlgebra {
    FieldTag field;
    std::size_t dim;
    std::vector<std::vector<std::vector<GQ>>> table;
    std::vector<GQ> unit;
    // optional point labels when the algebra is a function ring K^X
    std::vector<std::string> labels;
};

struct RingSpec {
    std::variant<ZMod, BoolRing, SCAlgebra> v;

    bool is_zmod() const { return std::holds_alternative<ZMod>(v); }
    bool is_bool() const { return std::holds_alternative<BoolRing>(v); }
    bool is_sc() const { return std::holds_alternative<SCAlgebra>(v); }
    const ZMod& zmod() const { return std::get<ZMod>(v); }
    const BoolRing& bool_ring() const { return std::get<BoolRing>(v); }
    const SCAlgebra& sc() const { return std::get<SCAlgebra>(v); }

    bool is_zero_ring() const;
    friend bool operator==(const RingSpec& a, const RingSpec& b);
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline constexpr std::size_t kDefaultDimCap = 12;

RingPtr make_zmod(std::uint64_t n);
RingPtr make_bool_ring(std::vector<std::string> ground);
/// Validates commutativity, associativity and unit laws on all basis triples.
RingPtr make_sc_algebra(FieldTag field, std::vector<std::vector<std::vector<GQ>>> table,
                        std::vector<GQ> unit, std::vector<std::string> labels = {},
                        std::size_t dim_cap = kDefaultDimCap);

/// K^X with the point indicators of X as basis (componentwise product).
RingPtr mk_function_ring(const std::vector<std::string>& points, FieldTag field);

/// Q[t]/(f) as a structure-constant algebra with basis 1, t, ..., t^(d-1).
RingPtr mk_quotient_by(const Poly<GQ>& f, FieldTag field);

struct RingElement {
    RingPtr owner;
    std::variant<std::uint64_t, std::vector<bool>, std::vector<GQ>> data;

    const std::vector<GQ>& coords() const { return std::get<std::vector<GQ>>(data); }
    const std::vector<bool>& subset() const { return std::get<std::vector<bool>>(data); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(data); }
};

RingElement zmod_elt(const RingPtr& r, std::uint64_t value);
RingElement bool_elt(const RingPtr& r, std::vector<bool> subset);
RingElement sc_elt(const RingPtr& r, std::vector<GQ> coords);

RingElement ring_zero(const RingPtr& r);
RingElement ring_one(const RingPtr& r);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
bool ring_eq(const RingElement& a, const RingElement& b);

/// Multiplication-by-a operator on the basis of an SC algebra.
Matrix<GQ> mult_matrix(const SCAlgebra& alg, const std::vector<GQ>& coords);

/// Witness of non-invertibility: a maximal ideal containing the element.
struct UnitWitness {
    // prime p for Z/n, ground point index for a boolean ring,
    // kernel-of-character values for a split SC algebra
    std::variant<std::uint64_t, int, std::vector<GQ>> v;
};

struct UnitCheck {
    bool invertible = false;
    std::optional<RingElement> inverse;
    std::optional<UnitWitness> witness;
};

/// Invertibility with exact inverse or a maximal-ideal witness.
/// For an SC algebra the witness requires the character splitter and raises
/// NotKValued when the algebra does not split.  (Defined in mspec.cpp.)
UnitCheck is_unit(const RingElement& a);

struct ScrambleResult {
    RingPtr algebra;
    Matrix<GQ> basis_change;      // columns = new basis in old coordinates
    Matrix<GQ> basis_change_inv;  // recorded for oracle checks
};

/// Transport an SC algebra through an invertible basis change.
ScrambleResult scramble(const RingPtr& a, const Matrix<GQ>& p);

struct RingHom {
    RingPtr source, target;
    // SC -> SC: matrix sending source coordinates to target coordinates.
    // ZMod(n) -> ZMod(m): the residue projection (requires m | n); no data.
    // Bool(X) -> Bool(Y): pullback along a ground-set map g : Y -> X,
    // stored as g (one source-ground index per target-ground point).
    std::variant<Matrix<GQ>, std::monostate, std::vector<int>> action;
};

struct HomReport {
    bool valid = true;
    std::string violation;  // empty when valid
};

HomReport hom_validate(const RingHom& phi);
/// Validating constructor; throws InvalidRing when the candidate fails.
RingHom make_sc_hom(const RingPtr& source, const RingPtr& target, Matrix<GQ> action);
RingHom make_zmod_hom(const RingPtr& source, const RingPtr& target);
RingHom make_bool_hom(const RingPtr& source, const RingPtr& target, std::vector<int> ground_map);

RingElement apply_hom(const RingHom& phi, const RingElement& a);
RingHom compose_homs(const RingHom& psi, const RingHom& phi);  // psi after phi

}  // namespace spectra
