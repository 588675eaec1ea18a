#pragma once

#include <string>
#include <vector>

#include "spectra/scalar.hpp"

namespace spectra {

struct LevelOutOfRange : std::out_of_range {
    LevelOutOfRange() : std::out_of_range("level index out of range") {}
};
struct NotDistinct : std::invalid_argument {
    NotDistinct() : std::invalid_argument("cylinders coincide at the common level") {}
};

/// A tower of finite discrete levels with transition maps; the desk-scale
/// profinite space is its inverse limit.
struct InverseSystem {
    std::vector<int> level_sizes;                 // level 0 first
    std::vector<std::vector<int>> transitions;    // transitions[k] : level k+1 -> level k

    std::size_t levels() const { return level_sizes.size(); }
    /// Project a point of level `from` down to level `to` (to <= from).
    int project(int from, int point, int to) const;
};

InverseSystem make_system(std::vector<int> level_sizes, std::vector<std::vector<int>> transitions);
/// The binary tower {*} <- {0,1} <- {00,01,10,11} <- ... with `depth+1` levels.
InverseSystem cantor_system(int depth);

struct Cylinder {
    int level;
    int point;
};

/// A clopen subset of the limit, stored at its minimal representing level.
struct ClopenSet {
    int level = 0;
    std::vector<int> members;  // sorted, distinct points of that level

    friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
        return a.level == b.level && a.members == b.members;
    }
};

/// Canonicalize: push down to the smallest level at which the set is a union
/// of transition fibers.
ClopenSet canonicalize(const InverseSystem& sys, ClopenSet c);
ClopenSet make_clopen(const InverseSystem& sys, int level, std::vector<int> members);
ClopenSet full_clopen(const InverseSystem& sys);
ClopenSet empty_clopen(const InverseSystem& sys);

/// Fiber preimage of the clopen at a (weakly) deeper level.
std::vector<int> pullback(const InverseSystem& sys, const ClopenSet& c, int to_level);

enum class ClopenOp { Union, Intersect, Complement };
ClopenSet clopen_boolean(const InverseSystem& sys, const ClopenSet& a, const ClopenSet& b,
                         ClopenOp op);
/// Symmetric difference: the boolean-ring addition on clopens.
ClopenSet clopen_symdiff(const InverseSystem& sys, const ClopenSet& a, const ClopenSet& b);

/// A function constant on the cylinders of one level.
template <typename V>
struct BasicStepFn {
    int level = 0;
    std::vector<V> values;  // indexed by the points of that level

    friend bool operator==(const BasicStepFn& a, const BasicStepFn& b) {
        return a.level == b.level && a.values == b.values;
    }
};
using StepFn = BasicStepFn<Rational>;

/// Re-express a step function at a deeper level (pullback of values).
template <typename V>
BasicStepFn<V> step_at_level(const InverseSystem& sys, const BasicStepFn<V>& s, int level) {
    if (level < s.level || level >= static_cast<int>(sys.levels())) throw LevelOutOfRange();
    BasicStepFn<V> r;
    r.level = level;
    r.values.resize(sys.level_sizes[level]);
    for (int z = 0; z < sys.level_sizes[level]; ++z)
        r.values[z] = s.values[sys.project(level, z, s.level)];
    return r;
}

StepFn step_add(const InverseSystem& sys, const StepFn& a, const StepFn& b);
StepFn step_mul(const InverseSystem& sys, const StepFn& a, const StepFn& b);

/// The 0/1 step function of a clopen set; always an idempotent.
StepFn indicator(const InverseSystem& sys, const ClopenSet& c);
bool is_idempotent_step(const InverseSystem& sys, const StepFn& s);

/// Distinct values with pairwise-disjoint clopen supports covering the space.
std::vector<std::pair<Rational, ClopenSet>> step_decompose(const InverseSystem& sys,
                                                           const StepFn& s);

struct Covering {
    std::vector<ClopenSet> parts;
};

struct NotACovering : std::runtime_error {
    Cylinder witness;
    explicit NotACovering(Cylinder w)
        : std::runtime_error("parts do not cover the space; uncovered cylinder " +
                             std::to_string(w.point) + "@" + std::to_string(w.level)),
          witness(w) {}
};

/// Refinement by level-k0 cylinders: rho sends each level-k0 point to the
/// least-index covering part containing its cylinder.
struct RefinementCert {
    int k0 = 0;
    std::vector<int> rho;
};

RefinementCert refine_covering(const InverseSystem& sys, const Covering& u);
/// Independent re-validation of the certificate by pullback containment.
bool validate_refinement(const InverseSystem& sys, const Covering& u, const RefinementCert& cert);

/// An idempotent that is 1 on x's cylinder and 0 on y's.
StepFn separating_idempotent(const InverseSystem& sys, const Cylinder& x, const Cylinder& y);

}  // namespace spectra
