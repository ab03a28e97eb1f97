#ifndef TDSHUFFLE_RENDER_HPP
#define TDSHUFFLE_RENDER_HPP

#include "json.hpp"

#include "tdshuffle/hopf.hpp"
#include "tdshuffle/laws.hpp"
#include "tdshuffle/tensor.hpp"

namespace tdshuffle {

// JSON forms. All of them are deterministic: terms appear in canonical map
// order and object keys are sorted by the JSON library. Elements round-trip
// through parse_element; the others are output-only report shapes.
//
// element: [{"coeff": "L + 1", "word": [[1,0],[0,0]]}, ...]
// square:  [{"coeff": "1", "left": [[1,0]], "right": [[0,0]]}, ...]
nlohmann::json to_json(const Coefficient& c);
nlohmann::json to_json(const TensorElement& e);
nlohmann::json to_json(const TensorSquareElement& e);
nlohmann::json to_json(const HopfReport& report);
nlohmann::json to_json(const SuiteResult& result);

}  // namespace tdshuffle

#endif
