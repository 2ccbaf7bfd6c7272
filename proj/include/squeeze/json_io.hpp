#pragma once

#include "squeeze/domain.hpp"
#include "squeeze/point.hpp"

#include <json.hpp>

#include <string>

namespace squeeze {

/// Parses and validates a domain spec from its JSON form:
///   {"type":"ball","dim":n,"radius":rho}
///   {"type":"polydisk","radii":[...]}
///   {"type":"gen_ellipsoid","p":[ints],"m":[numbers or "inf"]}
///   {"type":"weighted_power","c":[floats],"s":[floats]}
///   {"type":"product","factors":[<spec>,...]}
///   {"type":"sublevel","base":<spec>,"r":float,"d":[ints]}
DomainSpec domain_from_json(const nlohmann::json& j);
nlohmann::json domain_to_json(const DomainSpec& spec);

/// Point files: {"coords":[[re,im],...]} with an optional "block_sizes"
/// list. Complex numbers are two-element [re, im] arrays.
Point point_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& z);

DomainSpec load_domain_file(const std::string& path);
Point load_point_file(const std::string& path);

} // namespace squeeze
