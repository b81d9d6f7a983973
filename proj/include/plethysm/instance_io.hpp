#pragma once

#include "plethysm/characters.hpp"
#include "plethysm/reductions.hpp"
#include "plethysm/tomography.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace plethysm {

/// 3D X-ray instance: axis marginals only.
struct XRayInstance3D {
    Composition x;
    Composition y;
    Composition z;
};

/// One of the four tomography problems. SymInstance covers sym2d (grid_r set) and sym3d.
using TomographyInstance = std::variant<XRayInstance2D, XRayInstance3D, SymInstance>;

/// Schema violation in an instance document.
class InstanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"kind": "2dxray"|"sym2d"|"3dxray"|"sym3d", "r": int?, "cone": "open"|"closed"?,
///  "marginals": {"x","y","z"} or {"sum"}}. Throws InstanceError.
TomographyInstance parse_instance(const nlohmann::json& doc);
TomographyInstance parse_instance(std::string_view text);

nlohmann::json to_json(const TomographyInstance& inst);
nlohmann::json to_json(const Composition& c);
nlohmann::json to_json(const PlethysmInstance& q);
nlohmann::json to_json(const KroneckerTriple& t);
nlohmann::json to_json(const PointSet& p);

std::string kind_name(const TomographyInstance& inst);

BigInt count(const TomographyInstance& inst, const CountOptions& opts = {});
/// Up to `limit` solutions.
std::vector<PointSet> enumerate(const TomographyInstance& inst, std::size_t limit);

}  // namespace plethysm
