#pragma once

// External formats. Vertices are 1-based everywhere outside the library.
//
//   quiver JSON   {"n": 4, "arrows": [[1,2],[2,3],[2,3],[3,1]]}
//   quiver text   one "src -> dst [xK]" per line, optional "vertices N",
//                 '#' starts a comment
//   seed JSON     {"quiver": {...}, "mode": "free"|"symbolic",
//                  "cluster": ["x1", ...], "coefficients": [["pp1","pm1"], ...],
//                  "history": [2, 1]}   (all but "quiver" optional)
//   Laurent JSON  {"terms": [{"coef": "1", "exps": [...]}, ...]}

#include "json.hpp"
#include <string>
#include <string_view>

#include "clusterlab/algebra.hpp"

namespace clusterlab {

using json = nlohmann::ordered_json;

/// Parses JSON, reporting syntax errors as ParseError with line and column.
json parse_json(std::string_view text);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

std::string to_text(const Quiver& q);
Quiver parse_quiver_text(std::string_view text);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, const TablePtr& table);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

/// Accepts seed JSON, quiver JSON or quiver text. A bare quiver becomes the
/// initial seed in `mode`; a seed document keeps its own mode.
Seed load_seed(std::string_view text, CoefficientMode mode = CoefficientMode::Free);

std::string to_string(CoefficientMode mode);
CoefficientMode mode_from_string(std::string_view s);

json to_json(const ProjectiveSet& ps);
json to_json(const MutationType& t);
json to_json(const EnumerationReport& r);
json to_json(const MembershipCertificate& c, const GeneratorSet& gens);
json to_json(const RankReport& r);
json to_json(const VerifyReport& r);
json to_json(const ClusterVariable& v);

/// 1-based external sequence to 0-based internal, validated against n.
MutationSequence sequence_from_external(const std::vector<long long>& seq, std::size_t n);
std::vector<std::size_t> sequence_to_external(const MutationSequence& seq);

}  // namespace clusterlab
