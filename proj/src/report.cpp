#include "cox/report.hpp"

namespace cox {

using nlohmann::json;

json q_json(const Q& q) {
  return json{{"decimal", q_decimal(q)},
              {"den", denominator(q).str()},
              {"num", numerator(q).str()}};
}

json to_json(const EndsEstimate& est) {
  json schedule = json::array();
  for (const AnnulusCount& c : est.schedule)
    schedule.push_back(json{{"R", c.R}, {"components", c.components}, {"r", c.r}});
  return json{{"saturated", est.saturated},
              {"schedule", schedule},
              {"verdict", to_string(est.verdict)},
              {"warnings", est.warnings}};
}

json to_json(const WallCertificate& cert) {
  return json{{"all_pass", cert.all_pass()},
              {"boundary_matches_wall", cert.boundary_matches_wall},
              {"deep_vertices_both_sides", cert.deep_vertices_both_sides},
              {"deepest_minus", cert.deepest_minus},
              {"deepest_plus", cert.deepest_plus},
              {"gen", cert.gen},
              {"radius", cert.radius},
              {"stabilizer_edges_checked", cert.stabilizer_edges_checked},
              {"stabilizer_elements_checked", cert.stabilizer_elements_checked},
              {"stabilizer_preserves_wall", cert.stabilizer_preserves_wall},
              {"wall_edge_count", cert.wall_edge_count}};
}

json to_json(const CrossingEntry& entry) {
  static const char* corner_names[4] = {"A&gA", "A&gA*", "A*&gA", "A*&gA*"};
  json corners = json::array();
  for (int k = 0; k < 4; ++k) {
    json c{{"corner", corner_names[k]}, {"nonempty", entry.corners[k].nonempty}};
    if (entry.corners[k].witness)
      c["witness"] = word_to_string(*entry.corners[k].witness);
    corners.push_back(std::move(c));
  }
  return json{{"corners", corners},
              {"exact", entry.exact},
              {"g", word_to_string(entry.g)},
              {"verdict", entry.crosses ? "CROSSES" : "NESTED-AT-THIS-RADIUS"}};
}

json to_json(const CrossingReport& report) {
  json entries = json::array();
  for (const CrossingEntry& e : report.entries) entries.push_back(to_json(e));
  return json{{"crosses_count", report.crosses_count},
              {"entries", entries},
              {"gen", report.gen},
              {"radius", report.radius},
              {"tested", static_cast<int>(report.entries.size())}};
}

json to_json(const BoundReport& report) {
  json j{{"centralizer_value", q_json(report.centralizer_value)},
         {"inequality_holds", report.inequality_holds},
         {"lower_bound_W", q_json(report.lower_bound_W)},
         {"n", report.n},
         {"note", "lower bound per family-validated formula"},
         {"p", report.t.p},
         {"q", report.t.q},
         {"r", report.t.r},
         {"sufficient_criterion_holds", report.sufficient_criterion_holds}};
  j["minimal_n"] = report.minimal_n ? json(*report.minimal_n) : json(nullptr);
  j["index_threshold"] = report.threshold ? q_json(*report.threshold) : json(nullptr);
  return j;
}

json to_json(const IntersectionProfile& profile) {
  json counts = json::array();
  for (auto [r, count] : profile.counts) counts.push_back(json{{"count", count}, {"r", r}});
  return json{{"counts", counts},
              {"g", word_to_string(profile.g)},
              {"verdict", profile.stabilized ? "STABILIZED" : "GROWING"}};
}

json to_json(const ReflectionReport& report) {
  json profiles = json::array();
  for (const IntersectionProfile& p : report.profiles) profiles.push_back(to_json(p));
  json j{{"finite_group", report.finite_group},
         {"gen", report.gen},
         {"general_lower_bound", q_json(report.general_lower_bound)},
         {"general_lower_bound_note", "lower bound per family-validated formula"},
         {"profiles", profiles},
         {"skipped", report.skipped}};
  j["family_bounds"] = report.family_bounds ? to_json(*report.family_bounds) : json(nullptr);
  j["relative_ends"] = report.relative_ends ? to_json(*report.relative_ends) : json(nullptr);
  j["wall_certificate"] = report.certificate ? to_json(*report.certificate) : json(nullptr);
  if (report.crossing)
    j["crossing"] = json{{"crosses_count", report.crossing->crosses_count},
                         {"radius", report.crossing->radius},
                         {"tested", report.crossing->tested}};
  else
    j["crossing"] = nullptr;
  return j;
}

json to_json(const PaperExamplesReport& report) {
  json items = json::array();
  for (const PaperExampleResult& item : report.items)
    items.push_back(json{{"actual", item.actual},
                         {"expected", item.expected},
                         {"name", item.name},
                         {"pass", item.pass}});
  return json{{"all_pass", report.all_pass}, {"items", items}};
}

json make_document(const std::string& command, const json& input, const json& parameters,
                   const json& results, const std::vector<std::string>& warnings,
                   const std::vector<std::string>& errors) {
  return json{{"command", command}, {"errors", errors},     {"input", input},
              {"parameters", parameters}, {"results", results}, {"version", kVersion},
              {"warnings", warnings}};
}

json paper_examples_document() {
  PaperExamplesReport report = verify_paper_examples();
  return make_document("paper-examples", nullptr, json::object(), to_json(report), {}, {});
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace cox
