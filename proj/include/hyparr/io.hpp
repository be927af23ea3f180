#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hyparr/arrangement.hpp"
#include "hyparr/criteria.hpp"
#include "hyparr/derivations.hpp"

namespace hyparr::io {

using Json = nlohmann::ordered_json;

/// Parses {"dim", "hyperplanes", "labels"?, "mult"?}. Entries are JSON integers
/// or "p/q" strings. Throws ParseError with a line or field location such as
/// "hyperplanes[2][1]: ..."; geometric errors keep their own codes.
Multiarrangement parse_arrangement(std::string_view text);
Multiarrangement arrangement_from_json(const Json& doc);
Multiarrangement read_arrangement_file(const std::filesystem::path& path);

Json to_json(const CentralArrangement& a);
/// Omits "mult" when every multiplicity is 1.
Json to_json(const Multiarrangement& m);
Json to_json(const AffineArrangement& a);

Json to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);

Json to_json(const FreenessVerdict& v);
Json to_json(const std::vector<SigmaStatus>& sigma);
Json to_json(const TamenessTag& t);

Json to_json(const ComparisonReport& r);
ComparisonReport report_from_json(const Json& j);

}  // namespace hyparr::io
