#pragma once

#include <string>

#include <json.hpp>

#include "clawdeg/exact_geometry.hpp"

namespace clawdeg {

/// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);
BigInt parse_int(const std::string& s);

nlohmann::json to_json(const RatPoint& p);
nlohmann::json to_json(const VPolytope& v);
nlohmann::json to_json(const HPolytope& h);
VPolytope vpolytope_from_json(const nlohmann::json& j);
HPolytope hpolytope_from_json(const nlohmann::json& j);

/// cdd-style blocks. An H-row is "b -a_1 ... -a_d", meaning b - <a,x> >= 0.
std::string to_ext(const VPolytope& v);
std::string to_ine(const HPolytope& h);
VPolytope parse_ext(const std::string& text);
HPolytope parse_ine(const std::string& text);

}  // namespace clawdeg
