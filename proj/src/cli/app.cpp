#include "quadnet/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "quadnet/atlas/atlas.hpp"
#include "quadnet/cli/document.hpp"
#include "quadnet/cli/suite.hpp"
#include "quadnet/curves/plane_curves.hpp"
#include "quadnet/error.hpp"
#include "quadnet/gale/gale.hpp"
#include "quadnet/hm/hilbert_mumford.hpp"
#include "quadnet/nets/segre.hpp"

#ifndef QUADNET_VERSION
#define QUADNET_VERSION "0.0.0"
#endif

namespace quadnet {

using json = nlohmann::ordered_json;

const char* version_string() { return QUADNET_VERSION; }

namespace {

const VarNames kLmn{"l", "m", "n"};
const VarNames kXyz{"x", "y", "z"};
const VarNames kX4{"x0", "x1", "x2", "x3"};

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json certificates = json::array();
  json diagnostics = json::object();
  int exit_code = kExitOk;
};

std::string str(const Scalar& s) { return s.to_string(); }

json matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(str(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json doc_json(const std::string& path, const InputDocument& doc) {
  json j;
  j["file"] = path;
  json decls = json::object();
  for (const auto& d : doc.declarations()) decls[d.name] = d.text;
  j["declarations"] = decls;
  if (doc.field()) j["field"] = "sqrt:" + std::to_string(*doc.field());
  return j;
}

QuadricNet load_net(const InputDocument& doc) {
  auto amb = Ambient::projective3();
  return QuadricNet::from_forms(doc.form("Q1", amb, 2), doc.form("Q2", amb, 2), doc.form("Q3", amb, 2));
}

json singularity_json(const SingularityRecord& r) {
  json j;
  j["point"] = r.point.to_string();
  j["multiplicity"] = r.multiplicity;
  if (r.milnor)
    j["milnor"] = *r.milnor;
  else
    j["milnor"] = nullptr;
  j["type"] = r.type.to_string();
  return j;
}

json verdict_json(const QuarticVerdict& v) {
  json j;
  j["verdict"] = to_string(v.status);
  j["reasons"] = v.reasons;
  json s = json::array();
  for (const auto& r : v.singularities) s.push_back(singularity_json(r));
  j["singularities"] = s;
  return j;
}

json certificate_json(const Certificate& c, long value) {
  json j;
  j["g"] = matrix_json(c.g);
  j["lambda"] = c.lambda.weights();
  j["value"] = value;
  return j;
}

std::string field_echo(const std::string& field) {
  if (field.empty()) return "";
  parse_field_option(field);
  return field;
}

// --- commands --------------------------------------------------------------

Report cmd_discriminant(const std::string& file) {
  Report r{"discriminant"};
  auto doc = InputDocument::load(file);
  r.inputs["net"] = doc_json(file, doc);
  auto d = discriminant(load_net(doc));
  r.result["discriminant"] = d.poly().to_string(kLmn);
  r.result["degree"] = d.degree();
  r.result["identically_zero"] = d.is_zero();
  return r;
}

Report cmd_classify(const std::string& file, const std::string& field, int cap) {
  Report r{"classify"};
  auto doc = InputDocument::load(file);
  r.inputs["quartic"] = doc_json(file, doc);
  if (!field.empty()) r.inputs["field"] = field_echo(field);
  std::string name = doc.has("F") ? "F" : "";
  if (name.empty()) {
    if (doc.declarations().size() != 1) throw ParseError(ParseErrorKind::SyntaxError, 0, "expected a declaration F");
    name = doc.declarations()[0].name;
  }
  MultiPoly f = doc.form(name, Ambient::plane());
  TernaryForm form(f);
  r.result["form"] = f.to_string(kXyz);
  r.result["degree"] = form.degree();
  if (form.degree() == 4) {
    r.result.update(verdict_json(decide_quartic_stability(f, cap)));
    return r;
  }
  r.result["reduced"] = f.is_zero() ? false : is_reduced(f);
  auto locus = singular_points(f);
  json s = json::array();
  for (const auto& p : locus.points) s.push_back(singularity_json(classify_singularity(f, p, cap)));
  r.result["singularities"] = s;
  if (!locus.residual.empty()) {
    json res = json::array();
    for (const auto& u : locus.residual) res.push_back(u.to_string());
    r.result["residual"] = res;
    r.exit_code = kExitUndecided;
  }
  return r;
}

Report cmd_net_stability(const std::string& file, int cap) {
  Report r{"net-stability"};
  auto doc = InputDocument::load(file);
  r.inputs["net"] = doc_json(file, doc);
  auto net = load_net(doc);
  r.result["discriminant"] = discriminant(net).poly().to_string(kLmn);
  r.result.update(verdict_json(decide_net_stability(net, cap)));
  return r;
}

Report cmd_good(const std::string& file, int cap) {
  Report r{"good"};
  auto doc = InputDocument::load(file);
  r.inputs["net"] = doc_json(file, doc);
  auto net = load_net(doc);
  auto d = discriminant(net).poly();
  r.result["discriminant"] = d.to_string(kLmn);
  bool reduced = !d.is_zero() && is_reduced(d);
  r.result["reduced"] = reduced;
  if (reduced) {
    auto [ade, recs] = has_only_ade(d, cap);
    json s = json::array();
    for (const auto& rec : recs) s.push_back(singularity_json(rec));
    r.result["only_ade"] = ade;
    r.result["singularities"] = s;
  }
  r.result["good"] = is_good_net(net, cap);
  return r;
}

Report cmd_baselocus(const std::string& file, const std::string& field, int cap) {
  Report r{"baselocus"};
  auto doc = InputDocument::load(file);
  r.inputs["net"] = doc_json(file, doc);
  if (!field.empty()) r.inputs["field"] = field_echo(field);
  auto bl = base_locus(load_net(doc), cap);
  r.result["finite"] = bl.finite;
  if (!bl.finite) return r;
  json pts = json::array();
  for (const auto& p : bl.points) pts.push_back({{"point", p.point.to_string()}, {"multiplicity", p.multiplicity}});
  r.result["points"] = pts;
  r.result["accounted_length"] = bl.accounted_length;
  if (!bl.residual.empty()) {
    json res = json::array();
    for (const auto& u : bl.residual) res.push_back(u.to_string());
    r.result["residual"] = res;
    r.exit_code = kExitUndecided;
  }
  return r;
}

Report cmd_segre(const std::string& file) {
  Report r{"segre"};
  auto doc = InputDocument::load(file);
  r.inputs["pencil"] = doc_json(file, doc);
  auto amb = Ambient::projective3();
  PencilOfQuadrics p{Quadric4::from_form(doc.form("Q1", amb, 2)), Quadric4::from_form(doc.form("Q2", amb, 2))};
  Rational t = smooth_member_search(p);
  auto sym = segre_symbol(p);
  r.result["smooth_member"] = "Q1 + (" + Scalar(t).to_string() + ")*Q2";
  json inv = json::array();
  for (const auto& s : invariant_factors(p)) inv.push_back(s.to_string("t"));
  r.result["invariant_factors"] = inv;
  r.result["segre_symbol"] = sym.to_string();
  r.result["intersection"] = intersection_type_lookup(sym);
  return r;
}

Point3 parse_point(const std::string& text) {
  auto v = parse_rational_list(text);
  if (v.size() != 4) throw ParseError(ParseErrorKind::SyntaxError, 0, "a point needs four coordinates");
  if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0)
    throw MathError(ErrorKind::ZeroInput, "the zero vector is not a point");
  return Point3::make(v[0], v[1], v[2], v[3]);
}

Report cmd_gale(const std::string& file, const std::string& point, bool verify, int cap) {
  Report r{"gale"};
  auto doc = InputDocument::load(file);
  r.inputs["net"] = doc_json(file, doc);
  r.inputs["point"] = point;
  auto net = load_net(doc);
  Point3 p = parse_point(point);
  auto g = gale_transform(net, p);
  r.result["frame"] = matrix_json(g.frame);
  json parts = json::array();
  for (const auto& d : g.parts) parts.push_back({{"l", d.l.to_string(kXyz)}, {"q", d.q.to_string(kXyz)}});
  r.result["decomposition"] = parts;
  r.result["cubics"] = {{"C12", g.cubics[0].to_string(kXyz)},
                        {"C13", g.cubics[1].to_string(kXyz)},
                        {"C23", g.cubics[2].to_string(kXyz)}};
  r.result["syzygy"] = gale_syzygy_holds(g);
  std::optional<MultiPoly> provenance;
  if (is_good_net(net, cap)) provenance = discriminant(net).poly();
  auto st = cubic_net_stability(g.cubics, provenance, cap);
  r.result["stability"] = {{"verdict", to_string(st.status)}, {"route", st.route}};
  if (st.certificate) r.certificates.push_back(certificate_json(*st.certificate, st.value));
  if (verify) {
    auto v = verify_gale(net, p);
    json pts = json::array();
    for (const auto& pp : v.projected)
      pts.push_back({{"base_point", pp.source.point.to_string()},
                     {"multiplicity", pp.source.multiplicity},
                     {"image", pp.image.to_string()},
                     {"common_zero", pp.common_zero}});
    r.result["verification"] = {{"projected", pts},
                                {"all_common_zeros", v.all_common_zeros},
                                {"accounted", v.accounted},
                                {"expected", v.expected}};
  }
  return r;
}

Report cmd_hm(const std::string& file, const std::string& lambda_text, const std::string& g_file, bool strict) {
  Report r{"hm"};
  auto doc = InputDocument::load(file);
  r.inputs["system"] = doc_json(file, doc);
  r.inputs["lambda"] = lambda_text;
  std::vector<long> w;
  for (const auto& q : parse_rational_list(lambda_text)) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw ParseError(ParseErrorKind::SyntaxError, 0, "weights must be integers");
    w.push_back(q.get_num().get_si());
  }
  OneParamSubgroup lambda(w);
  Ambient amb;
  if (w.size() == 4)
    amb = Ambient::projective3();
  else if (w.size() == 3)
    amb = Ambient::plane();
  else if (w.size() >= 2 && w.size() <= kMaxVars) {
    for (std::size_t i = 0; i < w.size(); ++i) amb.names.push_back("x" + std::to_string(i));
  } else {
    throw MathError(ErrorKind::LengthMismatch, "weight vector must have between 2 and 6 entries");
  }
  std::vector<MultiPoly> forms;
  for (const auto& d : doc.declarations()) forms.push_back(doc.form(d.name, amb));
  LinearSystemOfForms sys(forms);
  ScalarMatrix g = identity_matrix(amb.nvars());
  if (!g_file.empty()) {
    auto gdoc = InputDocument::load(g_file);
    r.inputs["g"] = doc_json(g_file, gdoc);
    g = parse_rational_matrix(gdoc.get("g").text);
  }
  auto chk = verify_unstable_certificate(sys, Certificate{g, lambda}, strict);
  r.result["value"] = chk.value;
  r.result["strict"] = strict;
  r.result["destabilizing"] = chk.destabilizing;
  json mw = json::array();
  auto moved = act(g, sys);
  for (const auto& f : moved.basis()) mw.push_back(max_weight(f, lambda));
  r.result["max_weights"] = mw;
  r.certificates.push_back(certificate_json(Certificate{g, lambda}, chk.value));
  return r;
}

std::string source_text(const TripleSource& s) {
  return s.lambda_name + " (" + monomial_name(s.I) + ", " + monomial_name(s.J) + ")";
}

Report cmd_atlas_enumerate(bool dump) {
  Report r{"atlas enumerate"};
  r.inputs["dump"] = dump;
  auto e = enumerate_atlas();
  r.result["catalog_size"] = lambda_catalog().size();
  r.result["distinct_triples"] = e.entries.size();
  r.result["maximal_triples"] = e.maximal_count();
  r.result["rows_maximal"] = e.rows_maximal;
  json contained = json::array();
  for (const auto& [row, idx] : e.rows_contained)
    contained.push_back({{"row", row}, {"inside_row", e.entries[idx].named_row}, {"inside", key_to_string(e.entries[idx].key)}});
  r.result["rows_contained"] = contained;
  r.result["rows_missing"] = e.rows_missing;
  r.result["unmatched"] = e.unmatched.size();
  r.result["exactly_named"] = e.exactly_named();
  json maximal = json::array();
  for (const auto& entry : e.entries)
    if (entry.globally_maximal)
      maximal.push_back({{"row", entry.named_row}, {"triple", key_to_string(entry.key)}, {"source", source_text(entry.sources[0])}});
  r.result["maximal"] = maximal;
  if (dump) {
    json all = json::array();
    for (const auto& entry : e.entries) {
      json src = json::array();
      for (const auto& s : entry.sources) src.push_back(source_text(s));
      all.push_back({{"triple", key_to_string(entry.key)},
                     {"globally_maximal", entry.globally_maximal},
                     {"named_row", entry.named_row},
                     {"threshold_ties", entry.threshold_ties},
                     {"sources", src}});
    }
    r.result["entries"] = all;
  }
  return r;
}

Report cmd_atlas_verify(int row, int trials, std::uint64_t seed) {
  Report r{"atlas verify"};
  r.inputs["row"] = row == 0 ? json("all") : json(row);
  r.inputs["trials"] = trials;
  r.inputs["seed"] = seed;
  json rows = json::array();
  int total = 0, passed = 0;
  for (const auto& ar : atlas_rows()) {
    if (row != 0 && ar.index != row) continue;
    auto rep = verify_atlas_row(ar.index, trials, seed);
    json failures = json::array();
    for (const auto& t : rep.trials) {
      if (t.passed()) continue;
      json f{{"trial", t.trial},
             {"hm_value", t.hm_value},
             {"destabilized", t.destabilized},
             {"shape", t.shape_ok},
             {"unstable", t.unstable},
             {"segre", t.segre_found},
             {"forms", {t.forms[0].to_string(kX4), t.forms[1].to_string(kX4), t.forms[2].to_string(kX4)}},
             {"discriminant", t.delta.to_string(kLmn)}};
      if (!t.error.empty()) f["error"] = t.error;
      failures.push_back(f);
    }
    total += static_cast<int>(rep.trials.size());
    passed += rep.passed();
    rows.push_back({{"row", ar.index},
                    {"lambda", ar.lambda_name},
                    {"supporting", monomial_name(ar.I) + ", " + monomial_name(ar.J)},
                    {"delta_form", ar.delta_form},
                    {"singularity", ar.singularity},
                    {"trials", rep.trials.size()},
                    {"passed", rep.passed()},
                    {"failures", failures}});
    if (!rep.trials.empty())
      r.certificates.push_back({{"row", ar.index},
                                {"g", "identity"},
                                {"lambda", catalog_entry(ar.lambda_name).lambda.weights()},
                                {"values", [&] {
                                   json v = json::array();
                                   for (const auto& t : rep.trials) v.push_back(t.hm_value);
                                   return v;
                                 }()}});
  }
  r.result["rows"] = rows;
  r.result["instances"] = total;
  r.result["passed"] = passed;
  r.result["all_passed"] = passed == total;
  r.diagnostics["seed"] = seed;
  return r;
}

Report cmd_run_all(const SuiteOptions& opt) {
  Report r{"examples run-all"};
  r.inputs["seed"] = opt.seed;
  r.inputs["trials"] = opt.trials;
  json crit = json::array();
  bool all = true;
  for (const auto& c : run_acceptance_suite(opt)) {
    crit.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"details", c.details}});
    all = all && c.passed;
  }
  r.result["criteria"] = crit;
  r.result["all_passed"] = all;
  return r;
}

// --- output -----------------------------------------------------------------

void render_text(std::ostream& out, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -";
          bool first = true;
          for (auto f = e.begin(); f != e.end(); ++f) {
            out << (first ? " " : ", ") << f.key() << "=" << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
            first = false;
          }
          out << "\n";
        } else {
          out << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["certificates"] = r.certificates;
    j["diagnostics"] = r.diagnostics;
    j["version"] = version_string();
    out << j.dump(2) << "\n";
    return;
  }
  out << r.command << "\n";
  render_text(out, r.result, 2);
  if (!r.certificates.empty()) {
    out << "  certificates:\n";
    for (const auto& c : r.certificates) out << "    - " << c.dump() << "\n";
  }
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, bool as_json,
                std::ostream& out, std::ostream& err) {
  if (as_json) {
    json j;
    j["command"] = command;
    j["inputs"] = json::object();
    j["result"] = nullptr;
    j["certificates"] = json::array();
    j["diagnostics"] = {{"error", kind}, {"message", message}};
    j["version"] = version_string();
    out << j.dump(2) << "\n";
  }
  err << "error: " << message << "\n";
}

int math_exit(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnclassifiedExtensionPoint:
    case ErrorKind::Undecidable:
    case ErrorKind::NotStabilized:
      return kExitUndecided;
    default:
      return kExitMath;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GIT stability for nets of quadrics, plane quartics and nets of cubics", "quadnet"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int cap = -1;
  app.add_flag("--json", as_json, "Emit a single JSON object");
  app.add_option("--degree-cap", cap, "Degree cap for local algebra computations")->check(CLI::Range(1, 64));
  app.set_version_flag("--version", std::string(version_string()));

  std::string file, field, point, lambda, g_file;
  bool verify = false, strict = false, dump = false;
  int row = 0, trials = 20;
  std::uint64_t seed = 0;

  auto* disc = app.add_subcommand("discriminant", "Discriminant quartic of a net of quadrics");
  disc->add_option("--net", file, "Net document (Q1, Q2, Q3)")->required();
  auto* cls = app.add_subcommand("classify", "Singularities and stability of a plane quartic");
  cls->add_option("--quartic", file, "Document with the form F")->required();
  cls->add_option("--field", field, "Quadratic field sqrt:D");
  auto* ns = app.add_subcommand("net-stability", "Stability of a net of quadrics");
  ns->add_option("--net", file)->required();
  auto* good = app.add_subcommand("good", "Whether a net is good");
  good->add_option("--net", file)->required();
  auto* bl = app.add_subcommand("baselocus", "Base points of a net with multiplicities");
  bl->add_option("--net", file)->required();
  bl->add_option("--field", field, "Quadratic field sqrt:D");
  auto* seg = app.add_subcommand("segre", "Segre symbol of a pencil of quadrics");
  seg->add_option("--pencil", file, "Pencil document (Q1, Q2)")->required();
  auto* gale = app.add_subcommand("gale", "Net of cubics obtained by projecting from a base point");
  gale->add_option("--net", file)->required();
  gale->add_option("--point", point, "Base point a,b,c,d")->required();
  gale->add_flag("--verify", verify, "Check projected base points");
  auto* hm = app.add_subcommand("hm", "Hilbert-Mumford pivot weight of a linear system");
  hm->add_option("--system", file, "Document of forms")->required();
  hm->add_option("--lambda", lambda, "Weights r0,...,rn summing to zero")->required();
  hm->add_option("--g", g_file, "Document with g = row; row; ...");
  hm->add_flag("--strict", strict, "Require a negative value");
  auto* atlas = app.add_subcommand("atlas", "Unstable families of nets");
  atlas->require_subcommand(1);
  auto* aenum = atlas->add_subcommand("enumerate", "Enumerate maximal destabilizing triples");
  aenum->add_flag("--dump", dump, "List every distinct triple");
  auto* aver = atlas->add_subcommand("verify", "Verify rows on generic instances");
  aver->add_option("--row", row, "Row 1..12 (default all)")->check(CLI::Range(1, 12));
  aver->add_option("--trials", trials, "Instances per row")->check(CLI::Range(0, 100000));
  aver->add_option("--seed", seed, "Random seed");
  auto* ex = app.add_subcommand("examples", "Built-in example suite");
  ex->require_subcommand(1);
  auto* runall = ex->add_subcommand("run-all", "Run every acceptance check");
  runall->add_option("--trials", trials)->check(CLI::Range(0, 100000));
  runall->add_option("--seed", seed);

  std::string command = args.empty() ? "" : args[0];
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(command, "UsageError", e.what(), as_json, out, err);
    return kExitParse;
  }

  int local_cap = cap > 0 ? cap : kDefaultLocalCap;
  int base_cap = cap > 0 ? cap : kBaseLocusCap;
  try {
    Report r;
    if (*disc)
      r = cmd_discriminant(file);
    else if (*cls)
      r = cmd_classify(file, field, local_cap);
    else if (*ns)
      r = cmd_net_stability(file, local_cap);
    else if (*good)
      r = cmd_good(file, local_cap);
    else if (*bl)
      r = cmd_baselocus(file, field, base_cap);
    else if (*seg)
      r = cmd_segre(file);
    else if (*gale)
      r = cmd_gale(file, point, verify, local_cap);
    else if (*hm)
      r = cmd_hm(file, lambda, g_file, strict);
    else if (*aenum)
      r = cmd_atlas_enumerate(dump);
    else if (*aver)
      r = cmd_atlas_verify(row, trials, seed);
    else if (*runall)
      r = cmd_run_all(SuiteOptions{seed, trials, local_cap});
    if (cap > 0) r.diagnostics["degree_cap"] = cap;
    emit(r, as_json, out);
    return r.exit_code;
  } catch (const ParseError& e) {
    emit_error(command, "ParseError", e.what(), as_json, out, err);
    return kExitParse;
  } catch (const MathError& e) {
    emit_error(command, to_string(e.kind()), e.what(), as_json, out, err);
    return math_exit(e.kind());
  }
}

}  // namespace quadnet
