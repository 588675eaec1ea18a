#pragma once

#include "json.hpp"  // vendored nlohmann/json

#include "spectra/approx.hpp"
#include "spectra/complexify.hpp"
#include "spectra/profinite.hpp"
#include "spectra/rings.hpp"

namespace spectra {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// scalars serialize as exact decimal strings "p/q"; Q(i) scalars as
// {"re":"p/q","im":"r/s"}
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json scalar_to_json(const GQ& z, FieldTag field);
GQ scalar_from_json(const Json& j, FieldTag field);

Json ring_to_json(const RingSpec& r);
RingPtr ring_from_json(const Json& j);

/// The sc schema plus a "star" matrix.
Json involutive_to_json(const InvolutiveAlgebra& a);
InvolutiveAlgebra involutive_from_json(const Json& j);

Json system_to_json(const InverseSystem& sys);
InverseSystem system_from_json(const Json& j);

Json clopen_to_json(const ClopenSet& c);
ClopenSet clopen_from_json(const InverseSystem& sys, const Json& j);

Json covering_to_json(const Covering& u);
Covering covering_from_json(const InverseSystem& sys, const Json& j);

Json stepfn_to_json(const StepFn& s);
StepFn stepfn_from_json(const Json& j);

Json represented_to_json(const RepresentedFn& f);
RepresentedFn represented_from_json(const InverseSystem& sys, const Json& j);

}  // namespace spectra
