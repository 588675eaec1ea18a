#pragma once

#include <utility>
#include <vector>

#include "spectra/profinite.hpp"

namespace spectra {

struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};
struct OutOfRange : std::domain_error {
    OutOfRange() : std::domain_error("value outside the declared range") {}
};

/// Nonincreasing per-level oscillation bounds.
struct ModulusTable {
    std::vector<double> osc;  // indexed by level
};

/// A continuous function on the inverse limit, represented by per-level value
/// tables plus an oscillation modulus: |values_k(project(z)) - values_k'(z)|
/// <= osc[k] for all k <= k' <= depth.
struct RepresentedFn {
    int depth = 0;
    std::vector<std::vector<double>> values;  // values[k] indexed by level-k points
    ModulusTable modulus;
    double range_lo = 0, range_hi = 0;
};

/// Validates the level-consistency invariant exhaustively; throws
/// std::invalid_argument on violation.
RepresentedFn make_represented_fn(const InverseSystem& sys, int depth,
                                  std::vector<std::vector<double>> values,
                                  ModulusTable modulus, double range_lo, double range_hi);

/// The binary-digit function on the Cantor tower: values_k(z) = sum of the
/// first k bits weighted 2^-i, osc[k] = 2^-k.
RepresentedFn cantor_binary_fn(const InverseSystem& sys, int depth);

/// [lo, hi] containing the true sup norm.
std::pair<double, double> sup_norm_bounds(const RepresentedFn& f);

using StepFnD = BasicStepFn<double>;

struct DensityCert {
    double epsilon = 0;
    int level = 0;
    StepFnD step;
    double bound = 0;  // certified sup distance, < epsilon
};

/// The values table at the least level whose oscillation already beats
/// epsilon; certified by the representation invariant.
DensityCert step_approximate(const RepresentedFn& f, double epsilon);

/// Snap values to the dyadic grid mu_i = lo + i * 2^-k * (hi - lo), where a
/// value in [mu_0, mu_1] or (mu_{i-1}, mu_i] maps to mu_i.  Per-value error
/// is at most 2^-k * (hi - lo); at most 2^k + 1 distinct outputs.
std::pair<std::vector<double>, double> quantize(const std::vector<double>& values,
                                                double range_lo, double range_hi, int k);

/// Level selection at epsilon/2 composed with grid quantization at
/// epsilon/2; the certified bound is the sum plus one ulp of headroom.
DensityCert density_certificate(const InverseSystem& sys, const RepresentedFn& f, double epsilon);

}  // namespace spectra
