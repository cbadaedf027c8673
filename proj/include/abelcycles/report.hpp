#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "abelcycles/cayley.hpp"
#include "abelcycles/expectation.hpp"
#include "abelcycles/search.hpp"
#include "abelcycles/trail.hpp"

namespace abelcycles {

using Json = nlohmann::ordered_json;

Json element_to_json(const Element &e);
Element element_from_json(const Json &j);

Json group_to_json(const GroupSpec &g);

/// {"kind": "cyclic"|"open", "vertices": [[...], ...]}; cyclic trails are
/// written in canonical rotation.
Json trail_to_json(const Trail &t);
/// Inverse of trail_to_json; throws std::invalid_argument on bad input.
Trail trail_from_json(const GroupSpec &g, const Json &j);

Json extremal_to_json(const ExtremalReport &r);
std::string extremal_csv_header();
std::string extremal_csv_row(const ExtremalReport &r);

Json mc_to_json(const McEstimate &m);
Json expectation_to_json(const GroupSpec &g, LabelMode mode, const Residual &r,
                         const std::optional<McEstimate> &mc);

Json smin_to_json(const GroupSpec &g, const SminResult &r);

/// Basic invariants: order, rank, Sigma(G), 2-torsion, element orders.
Json group_info_json(const GroupSpec &g);

/// Quotes a CSV field when needed.
std::string csv_field(const std::string &s);

} // namespace abelcycles
