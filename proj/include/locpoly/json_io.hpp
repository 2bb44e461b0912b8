#ifndef LOCPOLY_JSON_IO_HPP
#define LOCPOLY_JSON_IO_HPP

#include <json.hpp>

#include "locpoly/action.hpp"
#include "locpoly/func.hpp"
#include "locpoly/polynomial.hpp"

namespace locpoly {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Decoders throw SchemaError with the offending path.
Json rational_json(const Rational& r);
Rational rational_from(const Json& j, const std::string& path);
Json scalar_json(const Scalar& s);
Scalar scalar_from(const Json& j, const std::string& path);

Json space_json(const Space& s);
Space space_from(const Json& j, const std::string& path);
Json point_json(const Space& s, const Point& x);
Point point_from(const Space& s, const Json& j, const std::string& path);
Json cell_json(const Space& s, const Cell& c);
Cell cell_from(const Space& s, const Json& j, const std::string& path);
Json openset_json(const OpenSet& o);
OpenSet openset_from(const Space& s, const Json& j, const std::string& path);

Group group_from(const Json& j, const std::string& path);
Json subgroup_json(const Group& g, const Subgroup& h);
Subgroup subgroup_from(const Group& g, const Json& j, const std::string& path);
Action action_from(const Json& j, const std::string& path);

Json func_json(const Func& f);
Func func_from(const Space& s, const Json& j, const std::string& path);

Json certificate_json(const Action& a, const PolynomialCertificate& c);

}  // namespace locpoly

#endif
