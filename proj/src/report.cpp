#include "abelcycles/report.hpp"

#include <sstream>
#include <stdexcept>

namespace abelcycles {

Json element_to_json(const Element &e) {
  Json j = Json::array();
  for (std::int64_t c : e.coords)
    j.push_back(c);
  return j;
}

Element element_from_json(const Json &j) {
  if (!j.is_array())
    throw std::invalid_argument("element must be a JSON array");
  Element e;
  for (const auto &c : j) {
    if (!c.is_number_integer())
      throw std::invalid_argument("element coordinates must be integers");
    e.coords.push_back(c.get<std::int64_t>());
  }
  return e;
}

Json group_to_json(const GroupSpec &g) {
  Json j;
  j["name"] = g.to_string();
  j["factors"] = g.factors();
  j["order"] = g.order();
  return j;
}

Json trail_to_json(const Trail &t) {
  const Trail &src = t;
  Json j;
  j["kind"] = t.is_cyclic() ? "cyclic" : "open";
  Json v = Json::array();
  if (t.is_cyclic()) {
    for (const Element &e : canonical_cycle_key(src))
      v.push_back(element_to_json(e));
  } else {
    for (const Element &e : t.vertices())
      v.push_back(element_to_json(e));
  }
  j["vertices"] = std::move(v);
  return j;
}

Trail trail_from_json(const GroupSpec &g, const Json &j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("vertices"))
    throw std::invalid_argument("trail JSON needs 'kind' and 'vertices'");
  const std::string kind = j.at("kind").get<std::string>();
  TrailKind k;
  if (kind == "cyclic")
    k = TrailKind::cyclic;
  else if (kind == "open")
    k = TrailKind::open;
  else
    throw std::invalid_argument("trail kind must be 'cyclic' or 'open'");
  std::vector<Element> vs;
  for (const auto &e : j.at("vertices"))
    vs.push_back(element_from_json(e));
  return Trail(g, std::move(vs), k);
}

Json extremal_to_json(const ExtremalReport &r) {
  Json j;
  j["group"] = group_to_json(r.group);
  j["cycle_count"] = r.cycle_count;
  j["dmin"] = r.dmin;
  j["dmax"] = r.dmax;
  j["smin"] = r.smin;
  j["smax"] = r.smax;
  j["avg_distinct_diffs"] = to_string(r.avg_distinct_diffs);
  j["avg_distinct_sums"] = to_string(r.avg_distinct_sums);
  Json w;
  for (const char *key : {"dmin", "dmax", "smin", "smax"})
    w[key] = trail_to_json(r.witnesses.at(key));
  j["witnesses"] = std::move(w);
  return j;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string extremal_csv_header() {
  return "group,order,rank,cycle_count,dmin,dmax,smin,smax,avg_distinct_diffs,avg_distinct_sums";
}

std::string extremal_csv_row(const ExtremalReport &r) {
  std::ostringstream os;
  os << csv_field(r.group.to_string()) << ',' << r.group.order() << ',' << r.group.rank() << ','
     << r.cycle_count << ',' << r.dmin << ',' << r.dmax << ',' << r.smin << ',' << r.smax << ','
     << to_string(r.avg_distinct_diffs) << ',' << to_string(r.avg_distinct_sums);
  return os.str();
}

Json mc_to_json(const McEstimate &m) {
  Json j;
  j["mean"] = to_decimal(m.mean_exact, 12);
  j["mean_exact"] = to_string(m.mean_exact);
  j["std_error"] = to_decimal(Rational(m.std_error), 12);
  j["var_of_mean"] = to_string(m.var_of_mean);
  j["trials"] = m.trials;
  j["seed"] = m.seed;
  return j;
}

Json expectation_to_json(const GroupSpec &g, LabelMode mode, const Residual &r,
                         const std::optional<McEstimate> &mc) {
  Json j;
  j["group"] = group_to_json(g);
  j["mode"] = to_string(mode);
  j["exact"] = to_string(r.exact);
  j["decimal"] = to_decimal(r.exact, 12);
  j["residual"] = r.decimal;
  j["residual_exact_approx"] = to_string(r.approx);
  if (mc)
    j["mc"] = mc_to_json(*mc);
  return j;
}

Json smin_to_json(const GroupSpec &g, const SminResult &r) {
  Json j;
  j["group"] = group_to_json(g);
  j["exact"] = r.exact;
  if (r.exact)
    j["value"] = r.value;
  else
    j["value"] = nullptr;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  Json s = Json::array();
  for (const Element &e : r.witness_set)
    s.push_back(element_to_json(e));
  j["witness_set"] = std::move(s);
  if (r.witness_cycle)
    j["witness_cycle"] = trail_to_json(*r.witness_cycle);
  j["nodes"] = r.nodes;
  j["sets_tested"] = r.sets_tested;
  return j;
}

Json group_info_json(const GroupSpec &g) {
  Json j = group_to_json(g);
  j["rank"] = g.rank();
  j["sigma"] = element_to_json(sigma(g));
  j["sigma_nonzero"] = sigma(g) != zero(g);
  j["two_torsion"] = two_torsion_count(g);
  j["elementary_2group"] = g.is_elementary_2group();
  Json orders;
  for (std::int64_t d = 1; d <= g.order(); ++d)
    if (g.order() % d == 0)
      orders[std::to_string(d)] = count_by_order(g, d);
  j["elements_by_order"] = std::move(orders);
  if (g.order() >= 2) {
    auto [lo, hi] = smin_bounds(g);
    j["smin_bounds"] = {lo, hi};
  }
  return j;
}

} // namespace abelcycles
