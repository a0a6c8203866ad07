#pragma once

#include <json.hpp>

#include "tricircle/closed_forms.hpp"
#include "tricircle/constructions.hpp"
#include "tricircle/stripe_oracle.hpp"
#include "tricircle/verifiers.hpp"

namespace tricircle::cli {

using json = nlohmann::json;

// Keys come out sorted (std::map backed objects) and every number is an integer,
// so parse-then-dump reproduces the emitted text byte for byte.

json to_json(const TripartiteSpec& s);
json to_json(const BoundsReport& r);
json to_json(const CrossingBreakdown& b);
json to_json(const DrawingLabels& d);
json to_json(const K22nDrawing& d);
json to_json(const StripeDrawing& d);
json to_json(const VerificationReport& r);
json to_json(const std::vector<TableRow>& rows);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace tricircle::cli
