#pragma once

#include <string>

#include "json.hpp"

#include "dgc/contextuality.hpp"
#include "dgc/coset_table.hpp"
#include "dgc/dessin.hpp"
#include "dgc/geometry.hpp"
#include "dgc/words.hpp"

namespace dgc {

using nlohmann::json;

/// Named presentations: F, G, G' (b2=a8=(bA)7), G'' (b2=a4=(ab)7=(a,b)6);
/// aliases Gp and Gpp accepted.
Presentation presentation_from_name(const std::string& name);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json coset_table_to_json(const CosetTable& t);
CosetTable coset_table_from_json(const json& j);

json dessin_to_json(const Dessin& d, bool with_labels = true);
Dessin dessin_from_json(const json& j);

json geometry_to_json(const IncidenceStructure& s);
IncidenceStructure geometry_from_json(const json& j);

json report_to_json(const ContextualityReport& r);

/// Bicolored-map rendering: filled circles for the cycles of g0, open
/// circles for g1, labelled edges.
std::string dessin_to_dot(const Dessin& d);
std::string incidence_to_dot(const IncidenceStructure& s);
std::string collinearity_to_dot(const IncidenceStructure& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dgc
