#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spectra/poly.hpp"
#include "spectra/rings.hpp"

namespace spectra {

/// The ring has a maximal ideal whose residue field is strictly larger than
/// the base field, so the evaluation machinery does not apply.
struct NotKValued : std::runtime_error {
    explicit NotKValued(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("polynomial must be nonzero") {}
};

/// A ring homomorphism onto the base field, as the vector of basis values.
struct Character {
    RingPtr source;
    std::vector<GQ> values;

    GQ apply(const std::vector<GQ>& coords) const {
        GQ r(0);
        for (std::size_t i = 0; i < values.size(); ++i) r += values[i] * coords[i];
        return r;
    }
    GQ apply(const RingElement& a) const { return apply(a.coords()); }

    friend bool operator==(const Character& a, const Character& b) {
        return a.values == b.values;
    }
};

/// Unitality and multiplicativity on all basis pairs, checked exactly.
bool char_valid(const Character& chi);

/// A maximal ideal: prime generator (Z/n), ground point (boolean ring), or
/// kernel of a character (SC algebra).
struct MaxIdealRep {
    std::variant<std::uint64_t, int, Character> v;

    bool is_prime() const { return std::holds_alternative<std::uint64_t>(v); }
    bool is_point() const { return std::holds_alternative<int>(v); }
    bool is_char_kernel() const { return std::holds_alternative<Character>(v); }
    std::uint64_t prime() const { return std::get<std::uint64_t>(v); }
    int point() const { return std::get<int>(v); }
    const Character& character() const { return std::get<Character>(v); }

    std::string describe(const RingSpec& ring) const;
};

struct ZariskiSet {
    std::vector<MaxIdealRep> ambient;   // the whole MSpec
    std::vector<std::size_t> members;   // indices into ambient
};

/// The double evaluation a |-> (chi_1(a), ..., chi_n(a)).
struct DevTransform {
    RingPtr source;
    std::vector<Character> characters;
    Matrix<GQ> matrix;  // row i = values of chi_i
    bool bijective = false;

    std::vector<GQ> apply(const std::vector<GQ>& coords) const { return matrix.apply(coords); }
};

/// All characters of an SC algebra, by recursive eigen-splitting of
/// multiplication operators.  Returns fewer than dim characters when the
/// algebra is non-reduced; throws NotKValued when some characteristic
/// polynomial has an irreducible factor of degree >= 2 over the base field.
std::vector<Character> split_characters(const RingPtr& a);

/// The complete list of maximal ideals; empty iff the zero ring.
std::vector<MaxIdealRep> mspec(const RingPtr& a);

bool ideal_contains(const MaxIdealRep& m, const RingElement& a);

/// Maximal ideals containing a, and the complement.
ZariskiSet zer(const RingElement& a);
ZariskiSet nzer(const RingElement& a);

/// The unique character with kernel m.
Character ev_hom(const RingPtr& a, const MaxIdealRep& m);

DevTransform dev(const RingPtr& a);

/// n |-> phi^-1(n): index map from MSpec(target) into MSpec(source),
/// computed by composing characters with phi.
std::vector<std::size_t> mspec_map(const RingHom& phi);

/// Maximality test for a principal ideal (g) in Q[t].  Supports the ideals
/// the demos need: zero, constants, degree 1, and degree 2-3 via rational
/// root search.
bool principal_ideal_maximal(const PolyQ& g, bool ambient_is_field);

struct PreimageReport {
    std::string source_ring;  // "Q[t]"
    std::string target_ring;  // "Q(t)"
    std::string ideal = "(0)";
    std::string preimage = "(0)";
    bool preimage_maximal = false;
    std::string witness;  // nonzero noninvertible element of the residue ring
};

/// The inclusion Q[t] -> Q(t): the zero ideal is maximal upstairs but its
/// preimage is not, witnessed by t in the residue ring.
PreimageReport demo_preimage_not_maximal();

/// A rational c with a(c) != 0 and b(c) != 0, found by enumerating
/// c = 0, 1, -1, 2, -2, ...; succeeds within deg(a) + deg(b) + 1 candidates.
Rational demo_non_hausdorff(const PolyQ& a, const PolyQ& b);

}  // namespace spectra
