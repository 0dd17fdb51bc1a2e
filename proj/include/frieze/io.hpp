#pragma once

#include <string>
#include <vector>

#include "frieze/polygon.hpp"
#include "frieze/quiver.hpp"
#include "frieze/sltiling.hpp"
#include "json.hpp"

namespace frieze {

using Json = nlohmann::json;

// Rationals travel as canonical strings ("7/2", integers without the "/1").
Json to_json(const CoxeterFrieze& f);
Json to_json(const Triangulation& t);
Json to_json(const Dissection& d);
Json to_json(const QFrieze& f);
Json to_json(const SLFrieze& f);
Json to_json(const TilingBlock& b);
Json to_json(const Mat& m);

// All of these throw Error("ParseError") on a malformed document.
CoxeterFrieze coxeter_of_json(const Json& j);
Triangulation triangulation_of_json(const Json& j);
Dissection dissection_of_json(const Json& j);
QFrieze qfrieze_of_json(const Json& j);
SLFrieze sl_frieze_of_json(const Json& j);
TilingBlock block_of_json(const Json& j);

Rat rat_of_json(const Json& j);
FriezeRule rule_of_name(const std::string& s);  // throws Error("ParseError")
const char* rule_name(FriezeRule r);

// Staggered plane layout: entry e_{i,i+d} sits in text row d+1, text column
// 2i+d+1, so consecutive rows shift by half a cell. Border rows of 1s are
// included; cells off the band stay empty.
std::vector<std::vector<std::string>> band_grid(const std::vector<std::vector<Rat>>& band,
                                                int dmin, int dmax, int n);
std::vector<std::vector<std::string>> grid_of(const CoxeterFrieze& f);
std::vector<std::vector<std::string>> grid_of(const SLFrieze& f);
std::vector<std::vector<std::string>> grid_of(const Mat& m);
std::vector<std::vector<std::string>> grid_of(const TilingBlock& b);

std::string csv_of(const std::vector<std::vector<std::string>>& rows);
std::string pretty_of(const std::vector<std::vector<std::string>>& rows);

}  // namespace frieze
