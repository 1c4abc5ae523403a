#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ubercontract/checkers.hpp"
#include "ubercontract/tame/portion.hpp"

namespace ubercontract::cli {

enum class Format { kJson, kText, kDot };

/// Exit codes: everything checked passed, violations found, usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::string output;
  Format format = Format::kText;
  int radius = 6;
  int wordlen = 2;
  std::size_t vertex_cap = tame::kDefaultVertexCap;
  std::size_t term_cap = 5000;
  std::int64_t A = 0, R = 0;
  int L = 0;
  std::optional<std::int64_t> C;
  int length_bound = -1;
  std::size_t max_violations = 1000;
  std::vector<std::string> labels;   // positional vertex labels
  std::vector<std::string> lambda;   // quasi-line labels
  std::vector<std::string> boundary;
  std::string system;                // checkpoint system JSON
  std::string reading = "some-geodesic";
  std::optional<std::string> link;
  bool literal_ball = false;
  std::string portion_out;
  unsigned seed = 1;
  int samples = 20;
};

namespace detail {

struct Result {
  Json json;
  std::string text;
  int code = kExitOk;
};

inline std::vector<VertexId> lookup_all(const PolygonalComplex& c, const std::vector<std::string>& labels) {
  std::vector<VertexId> out;
  for (const auto& l : labels) out.push_back(c.vertex(l));
  return out;
}

inline Json labels_json(const PolygonalComplex& c, const std::vector<VertexId>& vs) {
  Json j = Json::array();
  for (VertexId v : vs) j.push_back(c.label(v));
  return j;
}

inline std::string labels_text(const PolygonalComplex& c, const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + c.label(vs[i]);
  return out;
}

inline void add_violations(Result& r, const PolygonalComplex& c, const std::vector<Violation>& vs) {
  r.json["violations"] = Json::array();
  for (const auto& v : vs) {
    r.json["violations"].push_back(violation_to_json(c, v));
    r.text += "  " + violation_to_text(c, v) + "\n";
  }
  if (!vs.empty()) r.code = kExitViolations;
}

inline Result cmd_validate(const RunConfig& cfg) {
  auto c = load_complex(cfg.input);
  auto rep = validate(c);
  Result r;
  r.json = {{"valid", rep.valid()},
            {"vertices", c.num_vertices()},
            {"edges", c.num_edges()},
            {"polygons", c.num_polygons()},
            {"components", rep.components},
            {"issues", Json::array()}};
  r.text = std::string("valid: ") + (rep.valid() ? "yes" : "no") + "\nvertices " + std::to_string(c.num_vertices()) +
           ", edges " + std::to_string(c.num_edges()) + ", polygons " + std::to_string(c.num_polygons()) +
           ", components " + std::to_string(rep.components) + "\n";
  for (const auto& issue : rep.violations) {
    r.json["issues"].push_back({{"kind", issue.kind}, {"detail", issue.detail}});
    r.text += "  " + issue.kind + ": " + issue.detail + "\n";
  }
  r.code = rep.valid() ? kExitOk : kExitViolations;
  return r;
}

inline void need_labels(const RunConfig& cfg, std::size_t n, const std::string& what) {
  if (cfg.labels.size() != n) throw Error(ErrorCode::kInvalidArgument, what);
}

inline Result cmd_distance(const RunConfig& cfg) {
  need_labels(cfg, 2, "distance needs two vertex labels");
  auto c = load_complex(cfg.input);
  VertexId u = c.vertex(cfg.labels[0]), v = c.vertex(cfg.labels[1]);
  Result r;
  Extended d = distance(c, u, v);
  r.json = {{"from", c.label(u)}, {"to", c.label(v)}, {"distance", extended_to_json(d)}};
  r.text = "d(" + c.label(u) + ", " + c.label(v) + ") = " + d.to_string() + "\n";
  if (d.is_finite()) {
    auto dag = geodesic_dag(c, u, v);
    auto path = dag.some_path();
    std::string count = dag.count() == kCountSaturated ? "saturated" : std::to_string(dag.count());
    r.json["geodesics"] = count;
    r.json["example_geodesic"] = labels_json(c, path);
    r.text += "geodesics: " + count + "\nexample: " + labels_text(c, path) + "\n";
  }
  return r;
}

inline Result cmd_interval(const RunConfig& cfg) {
  need_labels(cfg, 2, "interval needs two vertex labels");
  auto c = load_complex(cfg.input);
  VertexId u = c.vertex(cfg.labels[0]), v = c.vertex(cfg.labels[1]);
  auto iv = interval(c, u, v);
  Result r;
  r.json = {{"from", c.label(u)}, {"to", c.label(v)}, {"size", iv.size()}, {"vertices", labels_json(c, iv)}};
  r.text = "interval(" + c.label(u) + ", " + c.label(v) + "): " + std::to_string(iv.size()) + " vertices\n  " +
           labels_text(c, iv) + "\n";
  return r;
}

inline Result cmd_angle(const RunConfig& cfg) {
  need_labels(cfg, 3, "angle needs a vertex and two neighbour labels");
  auto c = load_complex(cfg.input);
  auto ids = lookup_all(c, cfg.labels);
  Extended a = corner_angle(c, ids[0], ids[1], ids[2]);
  Result r;
  r.json = {{"vertex", c.label(ids[0])}, {"e1", c.label(ids[1])}, {"e2", c.label(ids[2])}, {"angle", extended_to_json(a)}};
  r.text = "angle at " + c.label(ids[0]) + " between " + c.label(ids[1]) + " and " + c.label(ids[2]) + " = " +
           a.to_string() + "\n";
  return r;
}

inline ScpOptions scp_options(const RunConfig& cfg) {
  ScpOptions o;
  o.length_bound = cfg.length_bound;
  o.max_violations = cfg.max_violations;
  return o;
}

inline Json scp_json(const ScpReport& s) {
  return {{"ok", s.ok()},
          {"condition1_violations", s.condition1_violations},
          {"condition2_violations", s.condition2_violations},
          {"segments", s.segments},
          {"length_bound", s.length_bound}};
}

inline Result cmd_check_scp(const RunConfig& cfg) {
  auto c = load_complex(cfg.input);
  auto rep = check_scp(c, {cfg.A, cfg.R}, scp_options(cfg));
  Result r;
  r.json = scp_json(rep);
  r.json["A"] = cfg.A;
  r.json["R"] = cfg.R;
  r.text = "SCP(A=" + std::to_string(cfg.A) + ", R=" + std::to_string(cfg.R) + "), pieces up to length " +
           std::to_string(rep.length_bound) + ": " + (rep.ok() ? "holds" : "fails") + " (" +
           std::to_string(rep.condition1_violations) + " concatenation, " + std::to_string(rep.condition2_violations) +
           " separation violations)\n";
  add_violations(r, c, rep.violations);
  r.code = rep.ok() ? kExitOk : kExitViolations;
  return r;
}

inline AovReading parse_reading(const std::string& s) {
  if (s == "some-geodesic") return AovReading::kAvoidsSomeGeodesic;
  if (s == "interval") return AovReading::kOutsideInterval;
  throw Error(ErrorCode::kInvalidArgument, "unknown reading '" + s + "' (some-geodesic | interval)");
}

inline Result cmd_check_aov(const RunConfig& cfg) {
  auto c = load_complex(cfg.input);
  auto rep = cross_check_aov_scp(c, parse_reading(cfg.reading), scp_options(cfg));
  Result r;
  r.json = {{"reading", cfg.reading},
            {"angle_of_view", extended_to_json(rep.aov.value)},
            {"qualifying_triples", rep.aov.qualifying_triples},
            {"ok", rep.ok}};
  r.text = "angle of view (" + cfg.reading + "): " + rep.aov.value.to_string() + " over " +
           std::to_string(rep.aov.qualifying_triples) + " triples\n";
  if (rep.aov.witness) {
    auto [x, y, z] = *rep.aov.witness;
    r.json["witness"] = {{"x", c.label(x)}, {"y", c.label(y)}, {"z", c.label(z)}};
    r.text += "  witness x=" + c.label(x) + " y=" + c.label(y) + " z=" + c.label(z) + "\n";
  }
  if (rep.constants) {
    r.json["scp"] = scp_json(*rep.scp);
    r.json["scp"]["A"] = rep.constants->A;
    r.json["scp"]["R"] = rep.constants->R;
    r.text += "SCP(" + std::to_string(rep.constants->A) + ", 0): " + (rep.ok ? "holds" : "fails") + "\n";
    add_violations(r, c, rep.scp->violations);
  } else {
    r.text += "angle of view infinite: nothing to cross-check\n";
  }
  r.code = rep.ok ? kExitOk : kExitViolations;
  return r;
}

inline Result cmd_check_lipschitz(const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw Error(ErrorCode::kInvalidArgument, "--lambda is required");
  auto c = load_complex(cfg.input);
  auto lambda = lookup_all(c, cfg.lambda);
  Result r;
  std::int64_t C = 0;
  if (cfg.C) {
    C = *cfg.C;
    r.json["C_source"] = "flag";
  } else {
    auto k = contraction_constant(c, lambda, cfg.radius);
    C = k.constant;
    r.json["C_source"] = "contraction_constant(radius " + std::to_string(cfg.radius) + ")";
  }
  auto vs = check_coarse_lipschitz(c, lambda, C, cfg.max_violations);
  r.json["C"] = C;
  r.json["ok"] = vs.empty();
  r.text = "coarse Lipschitz with C = " + std::to_string(C) + ": " + (vs.empty() ? "holds" : "fails") + "\n";
  add_violations(r, c, vs);
  return r;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// {"L": int, "checkpoints": [[label...]...], "indices": [int...] (optional),
///  "map": [[from, to]...]}
inline std::pair<CheckpointSystem, VertexMap> parse_system(const PolygonalComplex& c, const Json& j) {
  auto fail = [](const std::string& why) -> void { throw Error(ErrorCode::kParse, "checkpoint system: " + why); };
  if (!j.is_object() || !j.contains("checkpoints") || !j["checkpoints"].is_array()) fail("needs a \"checkpoints\" array");
  CheckpointSystem sys;
  sys.L = j.value("L", 0);
  for (const auto& s : j["checkpoints"]) {
    if (!s.is_array()) fail("each checkpoint is an array of labels");
    std::vector<VertexId> cp;
    for (const auto& l : s) cp.push_back(c.vertex(l.get<std::string>()));
    sys.checkpoints.push_back(cp);
  }
  if (j.contains("indices")) {
    sys.indices = j["indices"].get<std::vector<std::int64_t>>();
  } else {
    for (std::size_t i = 0; i < sys.checkpoints.size(); ++i) sys.indices.push_back(static_cast<std::int64_t>(i));
  }
  VertexMap h(c.num_vertices());
  if (j.contains("map")) {
    for (const auto& pair : j["map"]) {
      if (!pair.is_array() || pair.size() != 2) fail("map entries are [from, to] pairs");
      h[c.vertex(pair[0].get<std::string>())] = c.vertex(pair[1].get<std::string>());
    }
  }
  return {sys, h};
}

inline Result cmd_check_checkpoints(const RunConfig& cfg) {
  if (cfg.system.empty()) throw Error(ErrorCode::kInvalidArgument, "--system is required");
  auto c = load_complex(cfg.input);
  auto [sys, h] = parse_system(c, read_json_file(cfg.system));
  CheckpointOptions opts;
  opts.boundary = lookup_all(c, cfg.boundary);
  opts.max_violations = cfg.max_violations;
  auto rep = check_checkpoint_system(c, h, sys, opts);
  Result r;
  r.json = {{"ok", rep.ok()},
            {"L", sys.L},
            {"checkpoints", sys.checkpoints.size()},
            {"judged_pairs", rep.judged_pairs},
            {"checks", rep.checks},
            {"excluded_pairs", rep.excluded.size()}};
  r.text = "checkpoint system (" + std::to_string(sys.checkpoints.size()) + " checkpoints, L = " +
           std::to_string(sys.L) + "): " + (rep.ok() ? "holds" : "fails") + ", " + std::to_string(rep.judged_pairs) +
           " pairs judged, " + std::to_string(rep.excluded.size()) + " excluded\n";
  add_violations(r, c, rep.violations);
  return r;
}

inline Result cmd_export_dot(const RunConfig& cfg) {
  auto c = load_complex(cfg.input);
  Result r;
  r.text = cfg.link ? link_to_dot(c, c.vertex(*cfg.link)) : skeleton_to_dot(c);
  r.json = complex_to_json(c);
  return r;
}

inline Result cmd_export_json(const RunConfig& cfg) {
  auto c = load_complex(cfg.input);
  Result r;
  r.json = complex_to_json(c);
  r.text = r.json.dump(2) + "\n";
  return r;
}

inline Result cmd_tame_grid(const RunConfig& cfg) {
  tame::BallOptions opts;
  opts.vertex_cap = cfg.vertex_cap;
  opts.term_cap = cfg.term_cap;
  if (cfg.literal_ball) {
    opts.completion = tame::BallCompletion::kNone;
    opts.include_inverses = false;
  }
  auto g = tame::explicit_g();
  auto portion = tame::enumerate_ball({g}, cfg.wordlen, opts);
  if (!cfg.portion_out.empty()) {
    std::ofstream out(cfg.portion_out);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + cfg.portion_out);
    out << tame::portion_to_json(portion).dump(2) << "\n";
  }
  auto rep = tame::verify_grid(portion, tame::Type1Vertex::from(x1()), g);
  Result r;
  r.json = tame::grid_report_to_json(rep);
  r.json["wordlen"] = cfg.wordlen;
  r.text = "word length " + std::to_string(cfg.wordlen) + ", vertex cap " + std::to_string(cfg.vertex_cap) + "\n" +
           tame::grid_report_to_text(rep);
  r.code = rep.ok() ? kExitOk : kExitViolations;
  return r;
}

inline Result cmd_tame_stabilizer(const RunConfig&) {
  auto rep = tame::common_stabilizer_report();
  Result r;
  r.json = tame::stabilizer_report_to_json(rep);
  r.text = tame::stabilizer_report_to_text(rep);
  bool ok = rep.set.summary.finite && rep.identity_violations == 0 && !rep.a2_violations.empty();
  r.code = ok ? kExitOk : kExitViolations;
  return r;
}

/// Words of length 1..4 over the 32 signed permutations and elementary maps
/// with small integer coefficients.
inline tame::Word sample_word(std::mt19937& rng) {
  static const auto perms = tame::orthogonal_signed_permutations();
  std::uniform_int_distribution<int> len(1, 4), kind(0, 2), coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  tame::Word w;
  for (int i = len(rng); i > 0; --i) {
    if (kind(rng) == 0) {
      w.push_back({tame::Generator::orthogonal(perms[pick(rng)]), false});
    } else {
      GroundPoly p = x1().pow(static_cast<unsigned>(kind(rng) + 1)).scaled(BigRational(coef(rng))) +
                     (x1() * x3()).scaled(BigRational(coef(rng))) + constant_poly(coef(rng));
      w.push_back({tame::Generator::elementary(p), kind(rng) == 0});
    }
  }
  return w;
}

inline Result cmd_tame_qcheck(const RunConfig& cfg) {
  const GroundPoly q = quadratic_form();
  Result r;
  r.json = {{"form", q.to_string()}, {"seed", cfg.seed}, {"maps", Json::array()}};
  r.text = "pullback of q = " + q.to_string() + "\n";
  bool all = true;
  auto check = [&](const std::string& name, const GroundMap& m) {
    GroundPoly pb = quadratic_form_pullback(m);
    bool ok = pb == q;
    all = all && ok;
    r.json["maps"].push_back({{"name", name}, {"ok", ok}, {"pullback", pb.to_string()}});
    r.text += std::string(ok ? "  ok    " : "  FAIL  ") + name + (ok ? "" : ": " + pb.to_string()) + "\n";
  };
  check("g", tame::explicit_g_forward());
  check("g^-1", tame::explicit_g_inverse());
  bool inverse_ok = compose(tame::explicit_g_forward(), tame::explicit_g_inverse()) == GroundMap::identity();
  all = all && inverse_ok;
  r.json["g_after_inverse_is_identity"] = inverse_ok;
  r.text += std::string(inverse_ok ? "  ok    " : "  FAIL  ") + "g o g^-1 = id\n";
  std::mt19937 rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    auto w = sample_word(rng);
    GroundMap m = GroundMap::identity();
    for (const auto& l : w) m = compose(m, l.forward());
    std::string name;
    for (std::size_t k = 0; k < w.size(); ++k) name += (k ? " * " : "") + w[k].to_string();
    check(name, m);
  }
  r.json["ok"] = all;
  r.code = all ? kExitOk : kExitViolations;
  return r;
}

inline void emit(const Result& r, Format f, std::ostream& out) {
  if (f == Format::kJson) {
    out << r.json.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Checkers for combinatorial contraction in polygonal complexes and the tame group square complex",
               "ubercontract"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name;
  app.add_option("--format", format_name, "json | text | dot (default text; dot for export dot)")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");

  std::function<detail::Result(const RunConfig&)> action;
  bool dot_capable = false;
  auto with_input = [&](CLI::App* sub) { sub->add_option("complex", cfg.input, "complex JSON file")->required(); };
  auto bounded = [&](CLI::App* sub) {
    sub->add_option("--max-violations", cfg.max_violations, "witnesses to keep")->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the complex is well formed");
  with_input(validate_cmd);
  validate_cmd->callback([&] { action = detail::cmd_validate; });

  auto* dist = app.add_subcommand("distance", "distance and geodesic count between two vertices");
  with_input(dist);
  dist->add_option("vertices", cfg.labels, "two vertex labels")->expected(2);
  dist->callback([&] { action = detail::cmd_distance; });

  auto* inter = app.add_subcommand("interval", "combinatorial interval between two vertices");
  with_input(inter);
  inter->add_option("vertices", cfg.labels, "two vertex labels")->expected(2);
  inter->callback([&] { action = detail::cmd_interval; });

  auto* ang = app.add_subcommand("angle", "corner angle at a vertex between two incident edges");
  with_input(ang);
  ang->add_option("vertices", cfg.labels, "vertex, then the far ends of the two edges")->expected(3);
  ang->callback([&] { action = detail::cmd_angle; });

  auto* check = app.add_subcommand("check", "run a checker");
  check->require_subcommand(1);
  check->fallthrough();
  auto* scp = check->add_subcommand("scp", "Strong Concatenation Property with constants A, R");
  with_input(scp);
  bounded(scp);
  scp->add_option("--A", cfg.A, "angle constant")->check(CLI::NonNegativeNumber);
  scp->add_option("--R", cfg.R, "distance constant")->check(CLI::NonNegativeNumber);
  scp->add_option("--length", cfg.length_bound, "longest geodesic piece (default: diameter)");
  scp->callback([&] { action = detail::cmd_check_scp; });

  auto* aov = check->add_subcommand("aov", "angle of view, cross-checked against SCP(3A, 0)");
  with_input(aov);
  bounded(aov);
  aov->add_option("--reading", cfg.reading, "some-geodesic | interval");
  aov->callback([&] { action = detail::cmd_check_aov; });

  auto* lip = check->add_subcommand("lipschitz", "coarse Lipschitz projection onto a quasi-line");
  with_input(lip);
  bounded(lip);
  lip->add_option("--lambda", cfg.lambda, "quasi-line vertex (repeatable)")->take_all();
  lip->add_option("--C", cfg.C, "constant (default: measured contraction constant)");
  lip->add_option("--radius", cfg.radius, "ball radius bound for the contraction constant")->check(CLI::PositiveNumber);
  lip->callback([&] { action = detail::cmd_check_lipschitz; });

  auto* cps = check->add_subcommand("checkpoints", "system of checkpoints");
  with_input(cps);
  bounded(cps);
  cps->add_option("--system", cfg.system, "checkpoint system JSON")->required();
  cps->add_option("--boundary", cfg.boundary, "boundary vertex (repeatable)")->take_all();
  cps->callback([&] { action = detail::cmd_check_checkpoints; });

  auto* tame_cmd = app.add_subcommand("tame", "tame group square complex");
  tame_cmd->require_subcommand(1);
  tame_cmd->fallthrough();
  auto* grid = tame_cmd->add_subcommand("grid", "recover the 4x4 grid as interval(v, g^2 v)");
  grid->add_option("--wordlen", cfg.wordlen, "word length of the ball")->check(CLI::PositiveNumber);
  grid->add_option("--vertex-cap", cfg.vertex_cap, "vertex budget")->check(CLI::PositiveNumber);
  grid->add_option("--term-cap", cfg.term_cap, "term budget per ball element")->check(CLI::PositiveNumber);
  grid->add_flag("--literal-ball", cfg.literal_ball, "ball of forward words only, without star completion");
  grid->add_option("--portion-out", cfg.portion_out, "write the enumerated portion as JSON");
  grid->callback([&] { action = detail::cmd_tame_grid; });
  auto* stab = tame_cmd->add_subcommand("stabilizer", "Stab(C) ∩ g Stab(C) g^-1 constraint report");
  stab->callback([&] { action = detail::cmd_tame_stabilizer; });
  auto* qc = tame_cmd->add_subcommand("qcheck", "q-invariance of g, g^-1 and sampled words");
  qc->add_option("--seed", cfg.seed, "sampling seed");
  qc->add_option("--samples", cfg.samples, "number of sampled words")->check(CLI::NonNegativeNumber);
  qc->callback([&] { action = detail::cmd_tame_qcheck; });

  auto* exp = app.add_subcommand("export", "export a complex");
  exp->require_subcommand(1);
  exp->fallthrough();
  auto* dot = exp->add_subcommand("dot", "Graphviz of the 1-skeleton or of a link");
  with_input(dot);
  dot->add_option("--link", cfg.link, "vertex whose link to draw");
  dot->callback([&] {
    action = detail::cmd_export_dot;
    dot_capable = true;
  });
  auto* json = exp->add_subcommand("json", "normalised complex JSON");
  with_input(json);
  json->callback([&] { action = detail::cmd_export_json; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  if (format_name.empty()) format_name = dot_capable ? "dot" : "text";
  cfg.format = format_name == "json" ? Format::kJson : format_name == "dot" ? Format::kDot : Format::kText;
  try {
    if (cfg.format == Format::kDot && !dot_capable) {
      throw Error(ErrorCode::kInvalidArgument, "dot output is only available for export dot");
    }
    detail::Result r = action(cfg);
    if (cfg.output.empty()) {
      detail::emit(r, cfg.format, out);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + cfg.output);
      detail::emit(r, cfg.format, file);
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ubercontract::cli
