#include "noncomm/cli.hpp"

#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "noncomm/classify.hpp"
#include "noncomm/constructions.hpp"
#include "noncomm/ffield.hpp"
#include "noncomm/matgroups.hpp"
#include "noncomm/ncgraph.hpp"
#include "noncomm/report.hpp"

namespace noncomm {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string group_spec;
  std::vector<std::string> compare;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned n = 0;
  Index order = 0;
  std::string target;
  double budget_seconds = 300;
  std::string output;
  std::string format = "json";
  std::size_t iso_vertex_bound = kGraphIsoVertexLimit;
  Index lattice_bound = 200;

  // Group selection flags, folded into group_spec after parsing.
  std::uint64_t gl2 = 0, sl2 = 0, pgl2 = 0, psl2 = 0;

  std::chrono::milliseconds budget() const {
    return std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000));
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    if (!group_spec.empty()) j["group"] = group_spec;
    if (!compare.empty()) j["compare"] = compare;
    if (q) j["q"] = q;
    if (p) j["p"] = p;
    if (n) j["n"] = n;
    if (order) j["order"] = order;
    if (!target.empty()) j["target"] = target;
    j["budget_seconds"] = budget_seconds;
    j["format"] = format;
    j["iso_vertex_bound"] = iso_vertex_bound;
    j["lattice_bound"] = lattice_bound;
    if (!output.empty()) j["output"] = output;
    return j;
  }

  void resolve_group_flags() {
    std::vector<std::string> chosen;
    if (!group_spec.empty()) chosen.push_back(group_spec);
    if (gl2) chosen.push_back("GL2(" + std::to_string(gl2) + ")");
    if (sl2) chosen.push_back("SL2(" + std::to_string(sl2) + ")");
    if (pgl2) chosen.push_back("PGL2(" + std::to_string(pgl2) + ")");
    if (psl2) chosen.push_back("PSL2(" + std::to_string(psl2) + ")");
    if (chosen.size() > 1) throw UsageError("give exactly one of --group, --gl2, --sl2, --pgl2, --psl2");
    if (!chosen.empty()) group_spec = chosen.front();
  }
};

void add_group_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--group", cfg.group_spec, "group spec, e.g. S4, semidirect(C5,C4,x^2), SL2(5)");
  app->add_option("--gl2", cfg.gl2, "GL(2,q)");
  app->add_option("--sl2", cfg.sl2, "SL(2,q)");
  app->add_option("--pgl2", cfg.pgl2, "PGL(2,q)");
  app->add_option("--psl2", cfg.psl2, "PSL(2,q)");
}

void add_common_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "json | text | dimacs")->check(CLI::IsMember({"json", "text", "dimacs"}));
  app->add_option("--output,-o", cfg.output, "write the report to a file");
  app->add_option("--budget", cfg.budget_seconds, "clique search budget in seconds")->check(CLI::PositiveNumber);
  app->add_option("--iso-bound", cfg.iso_vertex_bound, "vertex bound for exact graph isomorphism")
      ->check(CLI::PositiveNumber);
  app->add_option("--lattice-bound", cfg.lattice_bound, "order bound for subgroup lattices")->check(CLI::PositiveNumber);
}

Json group_json(const Group& g, const std::string& spec) {
  Json j;
  j["label"] = g.label();
  j["spec"] = spec;
  j["order"] = g.order();
  j["center_order"] = center(g).size();
  j["abelian"] = is_abelian(g);
  j["keys"] = g.keys();
  Json gens = Json::array();
  for (auto x : g.generators()) gens.push_back(g.key(x));
  j["generators"] = gens;
  if (g.order() <= 64) {
    Json table = Json::array();
    for (Index a = 0; a < g.order(); ++a) {
      Json row = Json::array();
      for (Index b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
      table.push_back(row);
    }
    j["table"] = table;
  }
  return j;
}

std::string render_text(const Json& env) {
  std::ostringstream os;
  os << env["tool"].get<std::string>() << " " << env["version"].get<std::string>() << "\n";
  os << "verdict: " << env["verdict"].get<std::string>() << "\n";
  for (const auto& a : env["assertions"])
    os << (a["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << a["name"].get<std::string>()
       << "  expected=" << a["expected"].dump() << "  computed=" << a["computed"].dump() << "\n";
  os << "data:\n" << env["data"].dump(2) << "\n";
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

int finish(const RunConfig& cfg, const VerdictReport& report, std::ostream& out) {
  const Json env = envelope(cfg.to_json(), report);
  if (cfg.format == "dimacs") throw UsageError("dimacs format is only available for graph export");
  emit(cfg, cfg.format == "text" ? render_text(env) : env.dump(2) + "\n", out);
  return report.passed() ? 0 : 1;
}

Group require_group(const RunConfig& cfg) {
  if (cfg.group_spec.empty()) throw UsageError("a group is required (--group, --gl2, --sl2, --pgl2, --psl2)");
  return resolve_group(cfg.group_spec);
}

}  // namespace

Group resolve_group(const std::string& spec) {
  static const std::regex matrix(R"(\s*(P?)(GL|SL)2\((\d+)\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, matrix)) {
    const std::uint64_t q = std::stoull(m[3]);
    const bool projective = m[1] == "P";
    if (m[2] == "GL") return projective ? pgl2(q) : gl2(q);
    return projective ? psl2(q) : sl2(q);
  }
  return build(parse_descriptor(spec));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Non-commuting graphs of finite groups", "noncomm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* field = app.add_subcommand("field", "describe GF(p^n)");
  field->add_option("--p", cfg.p, "characteristic")->required();
  field->add_option("--n", cfg.n, "extension degree")->default_val(1);
  add_common_flags(field, cfg);

  auto* group = app.add_subcommand("group", "build groups");
  group->require_subcommand(1);
  auto* group_build = group->add_subcommand("build", "build a group and print its elements");
  auto* group_partition =
      group->add_subcommand("partition", "centralizer partition of an AC-group (PSL/PGL(2,q) via SL/GL(2,q))");
  for (auto* s : {group_build, group_partition}) {
    add_group_flags(s, cfg);
    add_common_flags(s, cfg);
  }

  auto* graph = app.add_subcommand("graph", "non-commuting graph tools");
  graph->require_subcommand(1);
  auto* graph_export = graph->add_subcommand("export", "export A_G as DIMACS or JSON");
  auto* graph_clique = graph->add_subcommand("clique", "exact clique number of A_G");
  auto* graph_profile = graph->add_subcommand("profile", "centralizer multisets and fingerprint");
  auto* graph_compare = graph->add_subcommand("compare", "compare the graphs of two groups");
  for (auto* s : {graph_export, graph_clique, graph_profile}) {
    add_group_flags(s, cfg);
    add_common_flags(s, cfg);
  }
  graph_compare->add_option("specs", cfg.compare, "two group specs")->expected(2)->required();
  add_common_flags(graph_compare, cfg);

  auto* classify_cmd = app.add_subcommand("classify", "AC test and Schmidt case");
  add_group_flags(classify_cmd, cfg);
  add_common_flags(classify_cmd, cfg);

  auto* verify = app.add_subcommand("verify", "theorem pipelines");
  verify->require_subcommand(1);
  auto* verify_sl = verify->add_subcommand("sl", "SL(2,q) pipeline");
  auto* verify_gl = verify->add_subcommand("gl", "GL(2,q) pipeline");
  for (auto* s : {verify_sl, verify_gl}) {
    s->add_option("--q", cfg.q, "field order")->required();
    add_common_flags(s, cfg);
  }

  auto* rivals = app.add_subcommand("rivals", "scan a rival catalog against a target graph");
  rivals->add_option("--order", cfg.order, "catalog order (6 or 24)")->required();
  rivals->add_option("--target", cfg.target, "target group spec")->required();
  add_common_flags(rivals, cfg);

  std::vector<const char*> argv{"noncomm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.resolve_group_flags();
    VerdictReport report;

    if (*field) {
      cfg.command = "field";
      const auto f = make_field(cfg.p, cfg.n);
      report.data["name"] = f->name();
      report.data["p"] = f->p;
      report.data["n"] = f->n;
      report.data["q"] = f->q;
      report.data["modulus"] = f->modulus;
      report.check_true("modulus_irreducible", is_irreducible(f->modulus, f->p));
      return finish(cfg, report, out);
    }
    if (*group_build) {
      cfg.command = "group build";
      report.data["group"] = group_json(require_group(cfg), cfg.group_spec);
      return finish(cfg, report, out);
    }
    if (*group_partition) {
      cfg.command = "group partition";
      const Group g = require_group(cfg);
      // PSL/PGL(2,q) are partitioned through their AC covers SL/GL(2,q).
      const auto pr = cfg.pgl2 ? projective_partition(cfg.pgl2, true)
                      : cfg.psl2 ? projective_partition(cfg.psl2, false)
                                 : maximal_abelian_partition(g);
      report.data["group"] = g.label();
      report.data["partition"] = pr.to_json();
      report.check_true("covers", pr.covers);
      return finish(cfg, report, out);
    }
    if (*graph_export) {
      cfg.command = "graph export";
      const Group g = require_group(cfg);
      const auto gr = NCGraph::build(g);
      if (cfg.format == "dimacs") {
        emit(cfg, to_dimacs(gr), out);
        return 0;
      }
      report.data["graph"] = to_json(gr, g);
      return finish(cfg, report, out);
    }
    if (*graph_clique) {
      cfg.command = "graph clique";
      const Group g = require_group(cfg);
      const auto gr = NCGraph::build(g);
      report.data["group"] = g.label();
      report.data["vertex_count"] = gr.vertex_count();
      try {
        const auto cr = clique_number(gr, cfg.budget());
        report.data["omega"] = cr.omega;
        Json w = Json::array();
        for (auto v : cr.witness) w.push_back(g.key(gr.element(v)));
        report.data["witness"] = w;
        report.check_true("witness_noncommuting", is_noncommuting_set(g, gr, cr.witness));
      } catch (const CliqueBudgetExceeded& e) {
        report.data["omega_lower_bound"] = e.best().omega;
        report.check("search_complete", true, false);
      }
      return finish(cfg, report, out);
    }
    if (*graph_profile) {
      cfg.command = "graph profile";
      const Group g = require_group(cfg);
      const auto gr = NCGraph::build(g);
      report.data["group"] = g.label();
      report.data["profile"] = centralizer_profile(g).to_json();
      report.data["fingerprint"] = fingerprint(gr).to_json();
      return finish(cfg, report, out);
    }
    if (*graph_compare) {
      cfg.command = "graph compare";
      const Group a = resolve_group(cfg.compare[0]);
      const Group b = resolve_group(cfg.compare[1]);
      const auto ga = NCGraph::build(a);
      const auto gb = NCGraph::build(b);
      const auto fa = fingerprint(ga);
      const auto fb = fingerprint(gb);
      report.data["groups"] = {a.label(), b.label()};
      report.data["fingerprints"] = {fa.to_json(), fb.to_json()};
      report.data["fingerprint_equal"] = same_fingerprint(fa, fb);
      if (ga.vertex_count() <= cfg.iso_vertex_bound && gb.vertex_count() <= cfg.iso_vertex_bound)
        report.data["isomorphic"] = graphs_isomorphic(ga, gb, cfg.iso_vertex_bound).has_value();
      else
        report.data["isomorphic"] = nullptr;
      return finish(cfg, report, out);
    }
    if (*classify_cmd) {
      cfg.command = "classify";
      const Group g = require_group(cfg);
      ClassifyOptions opt;
      opt.clique_budget = cfg.budget();
      opt.lattice_bound = cfg.lattice_bound;
      const auto c = classify(g, opt);
      report.data["classification"] = c.to_json();
      report.check_true("classified", !c.failed());
      report.check_true("witnesses_verified", c.witnesses_verified);
      return finish(cfg, report, out);
    }
    if (*verify_sl || *verify_gl) {
      cfg.command = *verify_sl ? "verify sl" : "verify gl";
      PipelineOptions opt;
      opt.clique_budget = cfg.budget();
      opt.iso_vertex_bound = cfg.iso_vertex_bound;
      report = *verify_sl ? verify_theorem_sl(cfg.q, opt) : verify_theorem_gl(cfg.q, opt);
      return finish(cfg, report, out);
    }
    if (*rivals) {
      cfg.command = "rivals";
      const Group t = resolve_group(cfg.target);
      if (t.order() != cfg.order) throw UsageError("target order differs from --order");
      const auto rs = rival_scan(cfg.order, NCGraph::build(t), catalog_for_order(cfg.order), cfg.iso_vertex_bound);
      report.data["rivals"] = rs.to_json();
      return finish(cfg, report, out);
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace noncomm
