#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fubini/bipoly.hpp"
#include "fubini/ratfunc.hpp"

namespace fubini {

// JSON: polynomials are arrays of rational strings, lowest power first.
nlohmann::json to_json(const PolyZ& p);
nlohmann::json to_json(const PolyQ& p);
/// Rectangular grid, outer index = power of x.
nlohmann::json to_json(const BiPolyZ& p);
nlohmann::json to_json(const RatFunc& f);

PolyQ poly_from_json(const nlohmann::json& j);

/// Compact one-line JSON, the canonical text used in identity reports.
std::string serialize(const PolyZ& p);
std::string serialize(const PolyQ& p);
std::string serialize(const BiPolyZ& p);
std::string serialize(const RatFunc& f);
inline std::string serialize(const Rat& r) { return r.str(); }
inline std::string serialize(const Int& i) { return to_string(i); }

// Human-readable renderings, e.g. "6y^3 + 6y^2 + y", "(-2λ)/(λ-1)^2".
std::string pretty(const PolyQ& p, std::string_view var);
std::string pretty(const PolyZ& p, std::string_view var);
std::string pretty(const BiPolyZ& p);
std::string pretty(const RatFunc& f, std::string_view var);

}  // namespace fubini
