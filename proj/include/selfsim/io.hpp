#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "selfsim/cover.hpp"
#include "selfsim/embedding.hpp"
#include "selfsim/ifs.hpp"
#include "selfsim/verify.hpp"

namespace selfsim {

/*
 * IFS spec file grammar (line oriented; '#' starts a comment, blank lines
 * are ignored):
 *
 *   header  := "m=" <count> [ "family=" <tag> { <key> "=" <value> } ]
 *   map     := <rational> <rational>          ratio, then offset
 *   rational:= ["-"] digits [ "/" digits ]
 *
 *   tag        keys
 *   generic    (none)
 *   three-map  rho, lambda
 *   equal-gap  ratios (comma separated)
 *   two-map    alpha, beta
 *   grid       beta           (m from the header)
 *   four-map   (none)
 *
 * The header comes first and exactly m map lines follow. For a tagged
 * family the map lines may be omitted; when present they must equal the
 * family's maps exactly. Family constraints are validated while parsing.
 */
Ifs parse_ifs(std::string_view text);
Ifs read_ifs_file(const std::string& path);
/// Inverse of parse_ifs: header with family parameters, then every map.
std::string format_ifs(const Ifs& ifs);

/// "ratio offset", e.g. "-1/5 1/5".
Similitude parse_map(std::string_view text);

std::string format_verdict(const EmbeddingVerdict& v);
std::string format_cover(const CoverReport& report);
std::string format_enumeration(const EnumerationResult& r);
std::string format_decomposition(const Decomposition& d, const Similitude& f);
std::string format_report(const TheoremReport& r);

nlohmann::json to_record(const Interval& i);
nlohmann::json to_record(const CoverReport& report);
nlohmann::json to_record(const EmbeddingVerdict& v);
nlohmann::json to_record(const EnumerationResult& r);
nlohmann::json to_record(const Decomposition& d);
nlohmann::json to_record(const TheoremReport& r);

/// Strip diagram of covers at depths 0..depth, one row per depth. Gaps of
/// the first level are labelled (G1, G2 for three-map sets).
std::string render_cover_svg(const Ifs& ifs, int depth, std::uint64_t budget = kDefaultCylinderBudget);

}  // namespace selfsim
