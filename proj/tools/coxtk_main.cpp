#include "cox/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string in_path;
  std::string out_path = "-";
  std::size_t vertex_budget = cox::BallLimits{}.vertex_budget;
  std::size_t node_budget = cox::WordProblemLimits{}.closure_node_budget;
  std::string default_label; // "", or an integer, or "inf"
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input) {
  if (with_input)
    cmd->add_option("--in", opts.in_path, "Coxeter system file (.cox)")->required();
  cmd->add_option("--out", opts.out_path, "Report path, - for stdout");
  cmd->add_option("--vertex-budget", opts.vertex_budget, "Ball vertex budget");
  cmd->add_option("--node-budget", opts.node_budget, "Braid-closure node budget");
  cmd->add_option("--default-label", opts.default_label,
                  "Override the file's default label (integer or inf)");
}

std::optional<int> default_override(const CommonOpts& opts) {
  if (opts.default_label.empty()) return std::nullopt;
  if (opts.default_label == "inf") return cox::kInfinity;
  return std::stoi(opts.default_label);
}

cox::WordProblem load_word_problem(const CommonOpts& opts) {
  std::ifstream in(opts.in_path);
  if (!in) throw std::invalid_argument("cannot open input file: " + opts.in_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  cox::CoxeterSystem sys = cox::parse_system(buffer.str(), default_override(opts));
  return cox::WordProblem(std::move(sys), {opts.node_budget});
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.empty()) throw std::invalid_argument("empty radius list");
  return out;
}

std::vector<cox::SchedulePoint> schedule_from(const std::string& csv) {
  std::vector<cox::SchedulePoint> schedule;
  for (int r : parse_int_list(csv)) schedule.push_back({r, 2 * r});
  return schedule;
}

json schedule_json(const std::vector<cox::SchedulePoint>& schedule) {
  json j = json::array();
  for (const auto& p : schedule) j.push_back(json{{"R", p.R}, {"r", p.r}});
  return j;
}

int write_output(const std::string& out_path, const json& doc) {
  std::string text = cox::dump_document(doc);
  if (out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

void maybe_dump(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open dump file: " + path);
  out << text;
}

struct KV {
  std::map<std::string, int> values;
};

KV parse_kv(const std::vector<std::string>& tokens) {
  KV kv;
  for (const std::string& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got `" + tok + "`");
    kv.values[tok.substr(0, eq)] = std::stoi(tok.substr(eq + 1));
  }
  return kv;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter group toolkit: word problem, ends of group pairs, reflection "
               "walls, and exact first L2-Betti bounds"};
  app.require_subcommand(1);

  CommonOpts opts;
  int gen = 1;
  int radius = 6;
  std::string schedule_csv = "2,3,4,5";
  std::string profile_radii_csv = "2,3,4";
  std::string ends_radii_csv = "2,3";
  int cert_radius = 4;
  int crossing_radius = 3;
  std::string g_word;
  std::string dump_path;
  std::vector<std::string> family_tokens;

  CLI::App* c_ends = app.add_subcommand("ends", "Estimate the number of ends");
  add_common(c_ends, opts, true);
  c_ends->add_option("--schedule", schedule_csv, "Comma-separated r values; R = 2r");
  c_ends->add_option("--dump-ball", dump_path, "Write the largest ball as text");

  CLI::App* c_rel = app.add_subcommand("rel-ends", "Estimate ends of the coset graph");
  add_common(c_rel, opts, true);
  c_rel->add_option("--centralizer", gen, "Subgroup: centralizer of s_i")->required();
  c_rel->add_option("--schedule", schedule_csv, "Comma-separated r values; R = 2r");
  c_rel->add_option("--dump-ball", dump_path, "Write the largest coset ball as text");

  CLI::App* c_cert = app.add_subcommand("wall-cert", "Wall certificate for a generator");
  add_common(c_cert, opts, true);
  c_cert->add_option("--gen", gen, "Generator index")->required();
  c_cert->add_option("--radius", radius, "Ball radius");

  CLI::App* c_cross = app.add_subcommand("crossings", "Four-corner singularity scan");
  add_common(c_cross, opts, true);
  c_cross->add_option("--gen", gen, "Generator index")->required();
  c_cross->add_option("--radius", radius, "Ball radius");

  CLI::App* c_bound = app.add_subcommand("betti-bound", "Exact first L2-Betti lower bound");
  add_common(c_bound, opts, false);
  c_bound->add_option("--in", opts.in_path, "Coxeter system file (.cox)");
  c_bound->add_option("--family", family_tokens, "W_n family instance: n=8 p=2 q=3 r=7")
      ->expected(4);

  CLI::App* c_split = app.add_subcommand("check-splitting", "Per-reflection hypothesis report");
  add_common(c_split, opts, true);
  c_split->add_option("--gen", gen, "Generator index")->required();
  c_split->add_option("--ends-radii", ends_radii_csv, "Comma-separated r values; R = 2r");
  c_split->add_option("--cert-radius", cert_radius, "Wall certificate radius");
  c_split->add_option("--crossing-radius", crossing_radius, "Crossing scan radius");
  c_split->add_option("--profile-radii", profile_radii_csv, "Intersection profile radii");

  CLI::App* c_profile = app.add_subcommand("profile", "Conjugate intersection growth profile");
  add_common(c_profile, opts, true);
  c_profile->add_option("--centralizer", gen, "Subgroup: centralizer of s_i")->required();
  c_profile->add_option("--g", g_word, "Conjugating element, e.g. \"2.1.2\"")->required();
  c_profile->add_option("--radii", profile_radii_csv, "Comma-separated radii");

  CLI::App* c_paper = app.add_subcommand("paper-examples", "Run the stored example suite");
  add_common(c_paper, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  json input = opts.in_path.empty() ? json(nullptr) : json(opts.in_path);
  json parameters{{"node_budget", opts.node_budget}, {"vertex_budget", opts.vertex_budget}};
  if (!opts.default_label.empty()) parameters["default_label"] = opts.default_label;
  std::vector<std::string> warnings;

  try {
    if (opts.vertex_budget < 1 || opts.node_budget < 1)
      throw std::invalid_argument("budgets must be positive");
    cox::BallLimits ball_limits{opts.vertex_budget};
    json results;

    if (*c_ends) {
      cox::WordProblem wp = load_word_problem(opts);
      auto schedule = schedule_from(schedule_csv);
      parameters["schedule"] = schedule_json(schedule);
      cox::EndsEstimate est = cox::estimate_ends(wp, schedule, ball_limits);
      warnings = est.warnings;
      if (!dump_path.empty())
        maybe_dump(dump_path,
                   cox::dump_ball(cox::detail::build_ball_capped(wp, schedule.back().R,
                                                                 ball_limits)));
      results = cox::to_json(est);
    } else if (*c_rel) {
      cox::WordProblem wp = load_word_problem(opts);
      auto schedule = schedule_from(schedule_csv);
      parameters["schedule"] = schedule_json(schedule);
      parameters["centralizer"] = gen;
      cox::MembershipOracle H = cox::centralizer_oracle(wp, gen);
      cox::EndsEstimate est = cox::estimate_relative_ends(wp, H, schedule, ball_limits);
      warnings = est.warnings;
      if (!dump_path.empty())
        maybe_dump(dump_path, cox::dump_coset_ball(cox::detail::build_coset_ball_capped(
                                  wp, H, schedule.back().R, ball_limits)));
      results = cox::to_json(est);
      results["oracle"] = H.descriptor;
    } else if (*c_cert) {
      cox::WordProblem wp = load_word_problem(opts);
      parameters["gen"] = gen;
      parameters["radius"] = radius;
      results = cox::to_json(cox::wall_certificate(wp, gen, radius, ball_limits));
    } else if (*c_cross) {
      cox::WordProblem wp = load_word_problem(opts);
      parameters["gen"] = gen;
      parameters["radius"] = radius;
      results = cox::to_json(cox::crossing_obstruction(wp, gen, radius, ball_limits));
    } else if (*c_bound) {
      if (!family_tokens.empty()) {
        KV kv = parse_kv(family_tokens);
        for (const char* key : {"n", "p", "q", "r"})
          if (!kv.values.count(key))
            throw std::invalid_argument(std::string("--family needs ") + key + "=<int>");
        int n = kv.values["n"];
        cox::TriangleParams t{kv.values["p"], kv.values["q"], kv.values["r"]};
        input = json{{"family", {{"n", n}, {"p", t.p}, {"q", t.q}, {"r", t.r}}}};
        cox::BoundReport report = cox::splitting_criterion(n, t, true);
        results = json{{"family", cox::to_json(report)},
                       {"lower_bound", cox::q_json(report.lower_bound_W)}};
      } else if (!opts.in_path.empty()) {
        cox::WordProblem wp = load_word_problem(opts);
        results = json{{"lower_bound", cox::q_json(cox::coxeter_betti_lower_bound(wp.system()))},
                       {"note", "lower bound per family-validated formula"}};
        if (auto family = cox::match_family(wp.system())) {
          auto [n, p, q, r] = *family;
          results["family"] = cox::to_json(
              cox::splitting_criterion(n, cox::TriangleParams{p, q, r}, true));
        }
      } else {
        throw std::invalid_argument("betti-bound needs --in or --family");
      }
    } else if (*c_split) {
      cox::WordProblem wp = load_word_problem(opts);
      cox::AnalysisParams params;
      params.ends_radii = parse_int_list(ends_radii_csv);
      params.cert_radius = cert_radius;
      params.crossing_radius = crossing_radius;
      params.profile_radii = parse_int_list(profile_radii_csv);
      params.ball_limits = ball_limits;
      parameters["gen"] = gen;
      parameters["ends_radii"] = params.ends_radii;
      parameters["cert_radius"] = params.cert_radius;
      parameters["crossing_radius"] = params.crossing_radius;
      parameters["profile_radii"] = params.profile_radii;
      results = cox::to_json(cox::analyze_reflection(wp, gen, params));
    } else if (*c_profile) {
      cox::WordProblem wp = load_word_problem(opts);
      cox::MembershipOracle H = cox::centralizer_oracle(wp, gen);
      cox::Element g = wp.reduce(cox::word_from_string(g_word));
      auto radii = parse_int_list(profile_radii_csv);
      parameters["centralizer"] = gen;
      parameters["g"] = cox::word_to_string(g.nf);
      parameters["radii"] = radii;
      results =
          cox::to_json(cox::conjugate_intersection_profile(wp, H, g, radii, ball_limits));
      results["oracle"] = H.descriptor;
    } else if (*c_paper) {
      json doc = cox::paper_examples_document();
      return write_output(opts.out_path, doc);
    }

    json doc = cox::make_document(command, input, parameters, results, warnings, {});
    return write_output(opts.out_path, doc);
  } catch (const cox::BudgetError& e) {
    json doc = cox::make_document(command, input, parameters, json::object(), warnings,
                                  {e.what()});
    write_output(opts.out_path, doc);
    return 1;
  } catch (const std::exception& e) {
    json doc = cox::make_document(command, input, parameters, json::object(), warnings,
                                  {e.what()});
    write_output(opts.out_path, doc);
    return 2;
  }
}
