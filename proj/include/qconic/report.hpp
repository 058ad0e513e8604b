#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qconic/analysis.hpp"
#include "qconic/combinatorics.hpp"
#include "qconic/freeness.hpp"
#include "qconic/singular_locus.hpp"

// Structured (JSON) and plain-text renderings. Exact values are strings;
// fields named "approx" are decimal approximations for display only.
namespace qconic {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const FieldPtr& field);
Json to_json(const Point3& p);
Json to_json(const WeakCombinatorics& wc);
Json to_json(const SingularPointRecord& r);
Json to_json(const SyzygyWitness& w);
Json to_json(const FreenessReport& r);
Json to_json(const AnalysisReport& r);
Json to_json(const TheoremAReport& r);
Json to_json(const DerivationCheck& c);

std::string render_text(const AnalysisReport& r);
std::string render_text(const FreenessReport& r);
std::string render_text(const TheoremAReport& r);
std::string render_text(const DerivationCheck& c);

/// Point coordinates as text, e.g. "(t : 1 : 0)" with t the field generator.
std::string point_text(const Point3& p);

/// Parses {"conics": [{"coeffs": ["a", "b", "c", "d", "e", "f"]}, ...]}.
/// Coefficients are rational strings (integers are also accepted). Throws
/// ParseError with line and column for malformed documents.
std::vector<Conic> parse_arrangement_document(std::string_view text);

/// The document format read by parse_arrangement_document.
std::string arrangement_document(const ConicArrangement& arr);

/// Filters for enumeration rows.
enum class EnumFilter { TheoremB, Discriminant, TacnodeBound };
EnumFilter parse_filter(std::string_view name);
std::string to_string(EnumFilter f);

/// Outcome of one filter on one vector; empty when it does not apply.
std::optional<bool> filter_outcome(EnumFilter f, const WeakCombinatorics& wc);

}  // namespace qconic
