#pragma once

#include "json.hpp"

#include "constellab/approx.hpp"
#include "constellab/quotient.hpp"
#include "constellab/staircase.hpp"

namespace constellab {

/// All reports use the default nlohmann object (keys stored sorted), so a
/// rendered report is canonical: same content, same bytes.
using Json = nlohmann::json;

/// Label in the problem-file form: entries joined by single spaces ("0 1").
std::string label_key(const IrrepLabel& label);

/// Exact values serialize as canonical "p/q" strings, never as numbers.
Json to_json(const Rational& value);
Json to_json(const RayTail& tail);
Json to_json(const IsotypicFunction& f);
Json to_json(const HilbertFunction& h);
Json to_json(const ThetaVector& theta);
Json to_json(const QMatrix& m);
Json to_json(const GradedSubspace& s);
Json to_json(const std::set<IrrepLabel>& labels);
Json to_json(const StabilityVerdict& verdict);
Json to_json(const GitParameters& params);
Json to_json(const GitVerdict& verdict);
Json to_json(const OneStepWeight& weight);
Json to_json(const LimitReport& report);
Json to_json(const WindowChoice& choice);
Json to_json(const ActionSpec& action, const QuotientPoint& point);
Json to_json(const ActionSpec& action, const InvariantGenerators& gens);

/// Canonical rendering: sorted keys, two-space indentation, one trailing
/// newline.  Reports with equal content are byte-identical.
std::string render_report(const Json& report);

}  // namespace constellab
