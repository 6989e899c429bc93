#pragma once

// JSON forms of the library's values. Coefficients are canonical scalar
// strings, so a document re-parsed with the same mode reproduces the value
// exactly and dumps to the same bytes.

#include <array>
#include <string>

#include "hq/annihilator.hpp"
#include "hq/eliminant.hpp"
#include "hq/laurent.hpp"
#include "json.hpp"

namespace hq {

using Json = nlohmann::ordered_json;

// {"text": "...", "terms": [{"b": i, "a": j, "c": "..."}, ...]}
Json to_json(const HqElement& x);
HqElement element_from_json(const Json& j, const QMode& mode);

// {"text": "...", "terms": [{"e": [i, j], "c": "..."}, ...]}
Json to_json(const BiPoly& f, const std::array<std::string, 2>& names);
BiPoly bipoly_from_json(const Json& j, const QMode& mode);

// Exponents ordered (M, lambda, mu).
Json to_json(const TriPoly& f);
TriPoly tripoly_from_json(const Json& j, const QMode& mode);

// {"text": "...", "lo": n, "coeffs": ["...", ...]}
Json to_json(const LaurentVector& v);
LaurentVector laurent_from_json(const Json& j, const QMode& mode);

// Coefficients are element documents.
Json to_json(const CentralBiPoly& f);
CentralBiPoly central_from_json(const Json& j, const QMode& mode);

Json to_json(const EliminantReport& r);
Json to_json(const SearchResult& r);
Json to_json(const CentralSearchResult& r);

}  // namespace hq
