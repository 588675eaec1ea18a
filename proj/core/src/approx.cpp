#include "spectra/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectra {

RepresentedFn make_represented_fn(const InverseSystem& sys, int depth,
                                  std::vector<std::vector<double>> values,
                                  ModulusTable modulus, double range_lo, double range_hi) {
    if (depth < 0 || depth >= static_cast<int>(sys.levels()))
        throw std::invalid_argument("depth exceeds the system");
    if (static_cast<int>(values.size()) != depth + 1 ||
        static_cast<int>(modulus.osc.size()) != depth + 1)
        throw std::invalid_argument("one value table and one oscillation bound per level");
    if (range_hi < range_lo) throw std::invalid_argument("empty range");
    for (int k = 0; k <= depth; ++k) {
        if (static_cast<int>(values[k].size()) != sys.level_sizes[k])
            throw std::invalid_argument("value table arity mismatch");
        if (!std::isfinite(modulus.osc[k]) || modulus.osc[k] < 0)
            throw std::invalid_argument("oscillation bounds must be finite and nonnegative");
        if (k > 0 && modulus.osc[k] > modulus.osc[k - 1])
            throw std::invalid_argument("oscillation bounds must be nonincreasing");
        for (double v : values[k])
            if (!(range_lo <= v && v <= range_hi))
                throw std::invalid_argument("value outside the declared range");
    }
    // level consistency for every point of every level: fold the min/max of
    // all deeper values into each fiber, then compare against the level value
    std::vector<double> mn = values[depth], mx = values[depth];
    for (int k = depth; k >= 0; --k) {
        for (int z = 0; z < sys.level_sizes[k]; ++z) {
            double dev = std::max(mx[z] - values[k][z], values[k][z] - mn[z]);
            if (dev > modulus.osc[k])
                throw std::invalid_argument("level-consistency invariant violated");
        }
        if (k == 0) break;
        std::vector<double> pmn(sys.level_sizes[k - 1], std::numeric_limits<double>::infinity());
        std::vector<double> pmx(sys.level_sizes[k - 1], -std::numeric_limits<double>::infinity());
        for (int z = 0; z < sys.level_sizes[k]; ++z) {
            int p = sys.transitions[k - 1][z];
            pmn[p] = std::min({pmn[p], mn[z], values[k - 1][p]});
            pmx[p] = std::max({pmx[p], mx[z], values[k - 1][p]});
        }
        mn = std::move(pmn);
        mx = std::move(pmx);
    }
    return {depth, std::move(values), std::move(modulus), range_lo, range_hi};
}

RepresentedFn cantor_binary_fn(const InverseSystem& sys, int depth) {
    std::vector<std::vector<double>> values(depth + 1);
    ModulusTable mod;
    for (int k = 0; k <= depth; ++k) {
        values[k].resize(1 << k);
        for (int z = 0; z < (1 << k); ++z) {
            double v = 0;
            // z's bits, most recent bit last; bit i (from the top of the
            // tower) contributes 2^-(i+1)
            for (int i = 0; i < k; ++i)
                if (z >> (k - 1 - i) & 1) v += std::ldexp(1.0, -(i + 1));
            values[k][z] = v;
        }
        mod.osc.push_back(std::ldexp(1.0, -k));
    }
    return make_represented_fn(sys, depth, std::move(values), std::move(mod), 0.0, 1.0);
}

std::pair<double, double> sup_norm_bounds(const RepresentedFn& f) {
    double m = 0;
    for (double v : f.values[f.depth]) m = std::max(m, std::fabs(v));
    double o = f.modulus.osc[f.depth];
    return {std::max(0.0, m - o), m + o};
}

DensityCert step_approximate(const RepresentedFn& f, double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    for (int k = 0; k <= f.depth; ++k)
        if (f.modulus.osc[k] < epsilon) {
            DensityCert cert;
            cert.epsilon = epsilon;
            cert.level = k;
            cert.step = {k, f.values[k]};
            cert.bound = f.modulus.osc[k];
            return cert;
        }
    throw InsufficientDepth("oscillation at maximal depth still >= epsilon; deepen the representation");
}

std::pair<std::vector<double>, double> quantize(const std::vector<double>& values,
                                                double range_lo, double range_hi, int k) {
    if (k < 0) throw std::invalid_argument("grid exponent must be nonnegative");
    double lambda = range_hi - range_lo;
    double h = std::ldexp(lambda, -k);
    std::vector<double> out;
    out.reserve(values.size());
    double n = std::ldexp(1.0, k);
    for (double v : values) {
        if (!(range_lo <= v && v <= range_hi)) throw OutOfRange();
        double i;
        if (lambda == 0) {
            i = 0;
        } else {
            i = std::ceil((v - range_lo) / h);
            if (i < 1) i = 1;  // [mu_0, mu_1] is right-closed like the rest
            if (i > n) i = n;
        }
        out.push_back(range_lo + i * h);
    }
    return {std::move(out), h};
}

DensityCert density_certificate(const InverseSystem& sys, const RepresentedFn& f, double epsilon) {
    (void)sys;
    DensityCert cert = step_approximate(f, epsilon / 2);
    double lambda = f.range_hi - f.range_lo;
    int k = 0;
    while (std::ldexp(lambda, -k) >= epsilon / 2) {
        ++k;
        if (k > 1100) throw std::logic_error("grid exponent runaway");
    }
    auto [snapped, qerr] = quantize(cert.step.values, f.range_lo, f.range_hi, k);
    cert.step.values = std::move(snapped);
    cert.epsilon = epsilon;
    double b = cert.bound + qerr;
    cert.bound = std::nextafter(b, std::numeric_limits<double>::infinity());
    return cert;
}

}  // namespace spectra
