#include "loopcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "loopcalc/error.hpp"
#include "loopcalc/freealg.hpp"
#include "loopcalc/rewrite.hpp"
#include "loopcalc/series.hpp"
#include "loopcalc/simplicial.hpp"
#include "loopcalc/theorems.hpp"

namespace loopcalc::cli {

using json = nlohmann::json;

namespace {

struct Options {
  std::string output = "text";
  int cap = 12;
  std::string field = "q";
  long long budget = kDefaultMatrixBudget;

  std::string expr;
  bool trace = false;
  bool reduced = false;

  std::string gens;
  std::string relators;
  std::string mode = "oracle";

  std::string complex_file;
  std::string spaces;
  bool missing = false;
  std::string add_faces_file;
  bool sigma_a = false;

  std::string theorem;
  bool all = false;
  std::string instance_file;
  std::string level = "quick";
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parameter, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Syntax, path + ": " + e.what());
  }
}

std::string face_text(Face f) {
  std::string s = "{";
  for (int v : vertices_of(f)) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "}";
}

std::vector<Face> read_faces(const std::string& path) {
  json j = read_json_file(path);
  std::vector<Face> out;
  try {
    for (const json& f : j) out.push_back(face_of(f.get<std::vector<int>>()));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidComplex, path + ": expected a list of faces (" + e.what() + ")");
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_normalize(const Options& o, std::ostream& out) {
  Expr e = parse(o.expr);
  WedgeNormalForm nf = normalize(e, o.cap);
  std::vector<TraceStep> steps;
  if (o.trace) steps = trace(e, o.cap);
  if (o.output == "json") {
    json summands = json::array();
    for (const Expr& s : nf.summands) summands.push_back(render(s));
    json j = {{"expr", render(e)},
              {"cap", nf.cap},
              {"normal_form", render(nf.to_expr())},
              {"summands", summands},
              {"complete", nf.complete}};
    if (o.trace) {
      json t = json::array();
      for (const TraceStep& s : steps) t.push_back({{"rule", s.rule}, {"before", render(s.before)}, {"after", render(s.after)}});
      j["trace"] = t;
    }
    emit(out, j);
    return kOk;
  }
  for (const TraceStep& s : steps) out << s.rule << "\t" << render(s.before) << "\t" << render(s.after) << "\n";
  out << render(nf.to_expr()) << "\n";
  if (!nf.complete) out << "(summands of connectivity >= " << nf.cap << " dropped)\n";
  return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  Expr e = parse(o.expr);
  GradedSeries s = series_of(e, FieldTag::parse(o.field), o.cap, o.reduced);
  if (o.output == "json") {
    json j = to_json(s);
    j["expr"] = render(e);
    emit(out, j);
  } else {
    out << to_text(s) << "\n";
  }
  return kOk;
}

int cmd_hilbert(const Options& o, std::ostream& out, std::ostream& err) {
  FieldTag field = FieldTag::parse(o.field);
  GeneratorSet gens = GeneratorSet::parse(o.gens);
  std::vector<ParsedRelator> parsed = parse_relators(o.relators, gens);
  const bool want_oracle = o.mode != "formula";
  const bool want_formula = o.mode != "oracle";

  std::optional<GradedSeries> oracle;
  std::optional<GradedSeries> formula;
  if (want_formula) {
    if (gens.size() != 2 || parsed.size() != 1 || !parsed[0].ad || parsed[0].ad->x == parsed[0].ad->y)
      throw Error(ErrorCode::Parameter, "the product formula needs two generators and a single relator ad(k;x,y)");
    const ParsedRelator::Ad& ad = *parsed[0].ad;
    formula = hilbert_product_formula(gens.degree(ad.x), gens.degree(ad.y), ad.k, field, o.cap);
  }
  if (want_oracle) {
    std::vector<NcPolynomial> rels;
    for (const ParsedRelator& r : parsed) rels.push_back(r.poly);
    oracle = hilbert_quotient_oracle(gens, rels, field, o.cap, o.budget);
  }
  const bool agree = !(oracle && formula) || *oracle == *formula;

  if (o.output == "json") {
    json j = {{"gens", o.gens}, {"relators", o.relators}, {"field", field.name()}, {"cap", o.cap}, {"mode", o.mode}};
    j["oracle"] = oracle ? to_json(*oracle) : json(nullptr);
    j["formula"] = formula ? to_json(*formula) : json(nullptr);
    if (oracle && formula) j["agree"] = agree;
    emit(out, j);
  } else if (oracle && formula) {
    out << "oracle:  " << to_text(*oracle) << "\n";
    out << "formula: " << to_text(*formula) << "\n";
    out << (agree ? "agree" : "DISAGREE") << "\n";
  } else {
    out << to_text(oracle ? *oracle : *formula) << "\n";
  }
  if (!agree) {
    err << "oracle and product formula disagree\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_polyprod(const Options& o, std::ostream& out) {
  FieldTag field = FieldTag::parse(o.field);
  SimplicialComplex k = SimplicialComplex::from_json(read_json_file(o.complex_file));
  std::vector<Expr> spaces = parse_list(o.spaces);
  GradedSeries base = polyprod_series(k, spaces, field, o.cap);
  json j = {{"complex", k.to_json()}, {"field", field.name()}, {"cap", o.cap}, {"series", to_json(base)}};
  std::vector<std::string> lines = {"series: " + to_text(base)};

  if (o.missing) {
    json faces = json::array();
    std::string text;
    for (Face f : missing_faces(k)) {
      faces.push_back(vertices_of(f));
      text += (text.empty() ? "" : " ") + face_text(f);
    }
    j["missing_faces"] = faces;
    lines.push_back("missing faces: " + (text.empty() ? std::string("none") : text));
  }
  std::vector<Face> s;
  if (!o.add_faces_file.empty()) {
    s = read_faces(o.add_faces_file);
    SimplicialComplex kbar = add_faces(k, s);
    GradedSeries grown = polyprod_series(kbar, spaces, field, o.cap);
    j["added"] = {{"complex", kbar.to_json()}, {"series", to_json(grown)}, {"difference", to_json(grown - base)}};
    lines.push_back("with added faces: " + to_text(grown));
    lines.push_back("difference: " + to_text(grown - base));
  }
  if (o.sigma_a) {
    if (o.add_faces_file.empty())
      for (Face f : missing_faces(k))
        if (face_size(f) >= 2) s.push_back(f);
    Expr a = Expr::suspend(missing_face_wedge(k, s, spaces));
    GradedSeries sa = series_of(a, field, o.cap, true);
    j["sigma_a"] = {{"expr", render(a)}, {"normal_form", render(normalize(a, o.cap).to_expr())}, {"series", to_json(sa)}};
    lines.push_back("ΣA = " + render(a));
    lines.push_back("ΣA series: " + to_text(sa));
  }
  if (o.output == "json") {
    emit(out, j);
  } else {
    for (const std::string& l : lines) out << l << "\n";
  }
  return kOk;
}

std::string fields_text(const std::vector<FieldTag>& fields) {
  std::string s;
  for (FieldTag f : fields) s += (s.empty() ? "" : ",") + f.name();
  return "[" + s + "]";
}

int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out) {
  if (o.all == !o.theorem.empty()) throw Error(ErrorCode::Parameter, "give a theorem id or --all");
  if (o.all && !o.instance_file.empty()) throw Error(ErrorCode::Parameter, "--instance needs a single theorem id");
  const Level level = o.level == "full" ? Level::Full : Level::Quick;
  const bool cap_given = sub.count("--cap") > 0;

  struct Job {
    TheoremId id;
    Instance instance;
  };
  std::vector<Job> jobs;
  if (o.all) {
    for (const TheoremInfo& info : list_theorems())
      for (Instance& inst : default_instances(info.id, level)) jobs.push_back({info.id, std::move(inst)});
  } else {
    auto id = theorem_from_string(o.theorem);
    if (!id) throw Error(ErrorCode::Parameter, "unknown theorem '" + o.theorem + "'");
    if (o.instance_file.empty()) {
      for (Instance& inst : default_instances(*id, level)) jobs.push_back({*id, std::move(inst)});
    } else {
      json file = read_json_file(o.instance_file);
      Instance inst{file, 12, {}};
      if (file.is_object() && file.contains("instance")) {
        inst.params = file.at("instance");
        if (file.contains("cap")) inst.cap = file.at("cap").get<int>();
        if (file.contains("fields"))
          for (const json& f : file.at("fields")) inst.fields.push_back(FieldTag::parse(f.get<std::string>()));
      }
      jobs.push_back({*id, std::move(inst)});
    }
  }

  json reports = json::array();
  bool all_pass = true;
  bool budget = false;
  for (Job& job : jobs) {
    const int cap = cap_given ? o.cap : job.instance.cap;
    Report r = verify(job.id, job.instance.params, cap, job.instance.fields, o.budget);
    all_pass = all_pass && r.pass;
    if (r.error_code == ErrorCode::MatrixBudgetExceeded) budget = true;
    if (o.output == "json") {
      reports.push_back(to_json(r));
      continue;
    }
    out << (r.pass ? "PASS " : "FAIL ") << to_string(r.theorem) << " " << r.instance.dump() << " cap " << r.cap << " "
        << fields_text(r.fields_checked) << "\n";
    if (r.error_code) {
      out << "  error: " << r.error << "\n";
    } else if (r.first_discrepancy) {
      const Discrepancy& d = *r.first_discrepancy;
      if (d.degree < 0)
        out << "  failed check: " << d.label << "\n";
      else
        out << "  first discrepancy over " << d.field.name() << " in degree " << d.degree << " (" << d.label << "): " << d.lhs
            << " vs " << d.rhs << "\n";
    }
  }
  if (o.output == "json") emit(out, {{"pass", all_pass}, {"reports", reports}});
  else out << (all_pass ? "all passed" : "some checks FAILED") << " (" << jobs.size() << " instances)\n";
  if (budget) return kBudget;
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_list(const Options& o, std::ostream& out) {
  json rows = json::array();
  for (const TheoremInfo& info : list_theorems()) {
    if (o.output == "json")
      rows.push_back({{"id", to_string(info.id)}, {"schema", info.schema}, {"anchor", info.anchor}});
    else
      out << to_string(info.id) << "\n  instance: " << info.schema << "\n  identity: " << info.anchor << "\n";
  }
  if (o.output == "json") emit(out, rows);
  return kOk;
}

int exit_code(ErrorCode code) { return code == ErrorCode::MatrixBudgetExceeded ? kBudget : kUsage; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homology series of loop spaces, rewriting to wedge normal form, and identity checks", "loopcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto add_cap = [&](CLI::App* s) { s->add_option("--cap", o.cap, "truncation degree")->check(CLI::NonNegativeNumber); };
  auto add_field = [&](CLI::App* s) { s->add_option("--field", o.field, "q or f<p>"); };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--budget", o.budget, "largest free-algebra dimension per degree")->check(CLI::PositiveNumber);
  };

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "rewrite an expression to wedge normal form");
  normalize_cmd->add_option("expr", o.expr)->required();
  add_cap(normalize_cmd);
  normalize_cmd->add_flag("--trace", o.trace, "print each rule application");

  CLI::App* series_cmd = app.add_subcommand("series", "homology series of an expression");
  series_cmd->add_option("expr", o.expr)->required();
  add_cap(series_cmd);
  add_field(series_cmd);
  series_cmd->add_flag("--reduced", o.reduced);

  CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of T(V)/(R)");
  hilbert_cmd->add_option("--gens", o.gens, "name:degree,...")->required();
  hilbert_cmd->add_option("--relators", o.relators)->required();
  add_cap(hilbert_cmd);
  add_field(hilbert_cmd);
  add_budget(hilbert_cmd);
  hilbert_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"oracle", "formula", "both"}));

  CLI::App* polyprod_cmd = app.add_subcommand("polyprod", "homology series of a polyhedral product");
  polyprod_cmd->add_option("--complex", o.complex_file, "complex JSON {m, facets}")->required()->check(CLI::ExistingFile);
  polyprod_cmd->add_option("--spaces", o.spaces, "one expression per vertex")->required();
  add_cap(polyprod_cmd);
  add_field(polyprod_cmd);
  polyprod_cmd->add_flag("--missing-faces", o.missing);
  polyprod_cmd->add_option("--add-faces", o.add_faces_file, "JSON list of missing faces to add")->check(CLI::ExistingFile);
  polyprod_cmd->add_flag("--sigma-a", o.sigma_a, "the suspended missing-face wedge");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a decomposition as a series identity");
  verify_cmd->add_option("theorem", o.theorem, "theorem id");
  verify_cmd->add_flag("--all", o.all);
  verify_cmd->add_option("--instance", o.instance_file)->check(CLI::ExistingFile);
  verify_cmd->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}));
  add_cap(verify_cmd);
  add_budget(verify_cmd);

  CLI::App* list_cmd = app.add_subcommand("list", "list the registered identities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (normalize_cmd->parsed()) return cmd_normalize(o, out);
    if (series_cmd->parsed()) return cmd_series(o, out);
    if (hilbert_cmd->parsed()) return cmd_hilbert(o, out, err);
    if (polyprod_cmd->parsed()) return cmd_polyprod(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, *verify_cmd, out);
    if (list_cmd->parsed()) return cmd_list(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (o.output == "json") emit(out, {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
    return exit_code(e.code());
  }
  return kUsage;
}

}  // namespace loopcalc::cli
