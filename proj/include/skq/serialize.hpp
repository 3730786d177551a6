#pragma once

#include <memory>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "skq/charsum.hpp"
#include "skq/graphs.hpp"
#include "skq/spectral.hpp"

namespace skq {

/// A spec together with the field it owns (JSON input has no other owner
/// for the field object).
struct LoadedSpec {
    std::shared_ptr<FiniteField> field;
    SGraphSpec spec;
};

/// Parse {p, e, k, f: [[...]], g: [[...]]} with coefficients as canonical
/// integers, ascending degree. Unknown keys are rejected.
LoadedSpec parse_spec_json(const nlohmann::json& j,
                           std::uint64_t size_cap = FiniteField::kDefaultSizeCap);

nlohmann::json field_to_json(const FiniteField& field);
nlohmann::json spectrum_to_json(const Spectrum& s, const SGraphSpec& spec);
nlohmann::json exp_sum_to_json(const ExpSumResult& r);

/// Decimal string with 12 significant digits.
std::string decimal12(double x);

}  // namespace skq
