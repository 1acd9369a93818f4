#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conicnet/audit.hpp"
#include "conicnet/classify.hpp"
#include "conicnet/orbits.hpp"
#include "json.hpp"

namespace conicnet::cli {

namespace {

using json = nlohmann::json;

json read_document(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

FieldPtr field_for(const json& doc, std::optional<int> q_flag) {
  std::optional<int> q = q_flag;
  if (doc.contains("q")) {
    if (!doc["q"].is_number_integer()) throw Error(ErrorCode::MalformedInput, "\"q\" must be an integer");
    const int doc_q = doc["q"].get<int>();
    if (q && *q != doc_q)
      throw Error(ErrorCode::FieldMismatch,
                  "--q " + std::to_string(*q) + " disagrees with the document's q = " + std::to_string(doc_q));
    q = doc_q;
  }
  if (!q) throw Error(ErrorCode::MalformedInput, "q is missing (pass --q or a \"q\" field)");
  return Field::of_order(*q);
}

Elem parse_elem(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_array()) {
    std::vector<int> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw Error(ErrorCode::MalformedInput, "coordinate literals must be integers");
      c.push_back(x.get<int>());
    }
    return f.from_coords(c);
  }
  throw Error(ErrorCode::MalformedInput, "field element must be an integer or a coordinate list");
}

json elem_json(const Field& f, Elem a) {
  if (f.e() == 1) return a.v;
  return f.coords(a);
}

Sym3 parse_six(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != 6) throw Error(ErrorCode::MalformedInput, "expected a list of 6 field elements");
  Sym3 y{};
  for (int i = 0; i < 6; ++i) y[i] = parse_elem(f, j[i]);
  return y;
}

json six_json(const Field& f, const Coords& y) {
  json row = json::array();
  for (int i = 0; i < 6; ++i) row.push_back(elem_json(f, y[i]));
  return row;
}

json subspace_json(const Field& f, const Subspace& s) {
  json rows = json::array();
  for (int i = 0; i < s.rows(); ++i) rows.push_back(six_json(f, s.row(i)));
  return rows;
}

/// "basis": rows of 6 literals; rows == 0 accepts any count.
Subspace parse_subspace(const Field& f, const json& doc, int rows) {
  if (!doc.contains("basis") || !doc["basis"].is_array()) throw Error(ErrorCode::MalformedInput, "missing \"basis\" list");
  const json& b = doc["basis"];
  if (rows > 0 && static_cast<int>(b.size()) != rows)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows) + " basis vectors");
  if (b.empty() || b.size() > 6) throw Error(ErrorCode::MalformedInput, "basis must have 1 to 6 vectors");
  std::vector<Coords> v;
  for (const auto& r : b) v.push_back(parse_six(f, r));
  return Subspace::from_independent_rows(f, 6, v);
}

Net parse_net(const Field& f, const json& doc) {
  if (!doc.contains("forms") || !doc["forms"].is_array() || doc["forms"].size() != 3)
    throw Error(ErrorCode::MalformedInput, "\"forms\" must hold exactly three coefficient lists");
  Net n;
  for (int i = 0; i < 3; ++i) n.forms[i] = parse_six(f, doc["forms"][i]);
  return n;
}

json distribution_json(const OrbitDistribution& d) { return json::array({d.n[0], d.n[1], d.n[2], d.n[3]}); }

void print(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ------------------------------------------------------------ commands

int cmd_classify(const std::string& kind, std::optional<int> q, const std::string& input, std::istream& in,
                 std::ostream& out) {
  const json doc = read_document(input, in);
  const FieldPtr field = field_for(doc, q);
  const Field& f = *field;
  json res = {{"schema", 1}, {"kind", kind}, {"q", f.q()}, {"warnings", json::array()}};
  if (kind == "line") {
    const Subspace line = parse_subspace(f, doc, 2);
    const LineReport r = classify_line(field, line);
    res["label"] = to_string(r.label);
    res["distribution"] = distribution_json(r.distribution);
    res["trace"] = r.trace;
    res["representative"] = {{"basis", subspace_json(f, line)}};
  } else {
    Subspace plane;
    if (kind == "net") {
      const Net net = parse_net(f, doc);
      plane = net_to_plane(f, net);
      res["discriminant"] = to_string(f, net_discriminant(f, net));
    } else {
      plane = parse_subspace(f, doc, 3);
    }
    const PlaneReport r = classify_plane(field, plane);
    if (!r.label) {
      if (kind == "net") throw Error(ErrorCode::NotRankOne, "the net contains no repeated line");
      res["label"] = "NotMeetingVeronesean";
      res["warnings"].push_back("the plane contains no rank-1 point; no orbit label applies");
    } else {
      res["label"] = to_string(*r.label);
    }
    res["distribution"] = distribution_json(r.distribution);
    res["trace"] = r.trace;
    res["representative"] = {{"basis", subspace_json(f, plane)}};
  }
  print(out, res);
  return kExitOk;
}

int cmd_rep(const std::string& name, int q, std::ostream& out) {
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  Representative r;
  std::string kind;
  if (auto pl = parse_plane_label(name)) {
    r = plane_representative(field, *pl);
    kind = "plane";
  } else if (auto ll = parse_line_label(name)) {
    r = line_representative(field, *ll);
    kind = "line";
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown label " + name);
  }
  json basis = json::array();
  for (const Sym3& y : r.basis) basis.push_back(six_json(f, y));
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = elem_json(f, v);
  print(out, {{"schema", 1},
              {"kind", kind},
              {"q", q},
              {"label", name},
              {"basis", basis},
              {"subspace", subspace_json(f, r.subspace)},
              {"parameters", params}});
  return kExitOk;
}

int cmd_tables(int q, const std::string& kind, std::ostream& out, std::ostream& err) {
  const FieldPtr field = Field::of_order(q);
  out << "label,n1,n2,n3,n4,expected_n1,expected_n2,expected_n3,expected_n4,match\n";
  bool all = true;
  auto row = [&](const std::string& label, const OrbitDistribution& got, const OrbitDistribution& want) {
    const bool match = got == want;
    all = all && match;
    out << label;
    for (auto n : got.n) out << ',' << n;
    for (auto n : want.n) out << ',' << n;
    out << ',' << (match ? "true" : "false") << '\n';
  };
  if (kind == "plane-distributions") {
    for (PlaneLabel l : plane_labels_for(q))
      row(to_string(l), distribution(field, plane_representative(field, l).subspace), expected_plane_distribution(l, q));
  } else {
    for (LineLabel l : all_line_labels())
      row(to_string(l), distribution(field, line_representative(field, l).subspace), expected_line_distribution(l, q));
  }
  if (!all) {
    print(err, {{"schema", 1},
                {"error", {{"code", "ConsistencyViolation"}, {"message", "a representative's distribution differs from the table"}}}});
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_audit(int q, const std::string& scope_in, const AuditOptions& options, const std::string& out_path,
              const std::string& json_path, std::ostream& out, std::ostream& err) {
  const FieldPtr field = Field::of_order(q);
  const std::string scope = scope_in == "auto" ? (q <= 7 ? "planes" : "lines") : scope_in;
  AuditReport rep;
  if (scope == "planes") {
    if (q > 7) throw Error(ErrorCode::MalformedInput, "full plane audits are limited to q <= 7");
    rep = audit_planes(field, options);
  } else if (scope == "lines") {
    rep = audit_lines(field, options);
  } else if (scope == "points") {
    rep = audit_points(field, options);
  } else if (scope == "conic") {
    rep = audit_conic(field, options);
  } else {
    rep = audit_solids(field, options);
  }
  {
    std::ofstream csv(out_path);
    if (!csv) throw Error(ErrorCode::MalformedInput, "cannot write " + out_path);
    csv << rep.to_csv();
  }
  if (!json_path.empty()) {
    std::ofstream js(json_path);
    if (!js) throw Error(ErrorCode::MalformedInput, "cannot write " + json_path);
    js << rep.to_json();
  }
  std::size_t consistent = 0;
  for (const auto& r : rep.rows) consistent += r.consistent ? 1 : 0;
  out << "audit " << rep.kind << " q=" << q << ": scanned " << rep.scanned << ", " << consistent << "/" << rep.rows.size()
      << " rows consistent, " << (rep.ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
  for (const auto& [k, v] : rep.counters) out << "  " << k << " = " << v << "\n";
  for (const auto& v : rep.violations) out << "  violation: " << v << "\n";
  err << "elapsed " << rep.seconds << " s, " << rep.shards << " shards (" << rep.shards_resumed << " resumed), "
      << options.workers << " workers\n";
  if (!rep.ok()) {
    print(err, {{"schema", 1},
                {"error", {{"code", "ConsistencyViolation"}, {"message", std::to_string(rep.violations.size()) + " audit checks failed"}}}});
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_witness(std::optional<int> q, const std::string& left, const std::string& right, std::istream& in,
                std::ostream& out) {
  const json a = read_document(left, in);
  const json b = read_document(right, in);
  const FieldPtr field = field_for(a, q);
  if (field_for(b, q)->q() != field->q()) throw Error(ErrorCode::FieldMismatch, "left and right use different fields");
  const Field& f = *field;
  const Subspace sa = parse_subspace(f, a, 0);
  const Subspace sb = parse_subspace(f, b, 0);
  const auto w = find_witness(field, sa, sb);
  json res = {{"schema", 1}, {"q", f.q()}, {"found", w.has_value()}, {"matrix", nullptr}};
  if (w) {
    if (!(act(f, *w, sa) == sb)) throw Error(ErrorCode::InternalInconsistency, "witness does not map left onto right");
    json m = json::array();
    for (int i = 0; i < 3; ++i) m.push_back({elem_json(f, (*w)(i, 0)), elem_json(f, (*w)(i, 1)), elem_json(f, (*w)(i, 2))});
    res["matrix"] = m;
  }
  print(out, res);
  return kExitOk;
}

void print_error(std::ostream& err, const std::string& code, std::string message) {
  const std::string prefix = code + ": ";
  if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
  err << json{{"schema", 1}, {"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify nets of conics of rank one over odd F_q and audit the plane and line orbits."};
  app.require_subcommand(1);

  std::string kind, input, label, table_kind, out_path, json_path, checkpoint, scope = "auto", left, right;
  std::optional<int> q_opt;
  int q = 0;
  int workers = 1;
  std::uint64_t shard_size = 1 << 16;

  auto* classify = app.add_subcommand("classify", "Classify a net, plane or line given as JSON");
  classify->add_option("--kind", kind, "net, plane or line")->required()->check(CLI::IsMember({"net", "plane", "line"}));
  classify->add_option("--q", q_opt, "Field order (optional if the document has \"q\")");
  classify->add_option("--input", input, "Input JSON file, or - for standard input")->required();

  auto* rep = app.add_subcommand("rep", "Print the representative of an orbit label");
  rep->add_option("--label", label, "Sigma1..Sigma15, Sigma14prime, o5..o17 (e.g. o8_1)")->required();
  rep->add_option("--q", q, "Field order")->required();

  auto* tables = app.add_subcommand("tables", "Distributions of all representatives against the closed forms (CSV)");
  tables->add_option("--q", q, "Field order")->required();
  tables->add_option("--kind", table_kind, "plane-distributions or line-distributions")
      ->required()
      ->check(CLI::IsMember({"plane-distributions", "line-distributions"}));

  auto* audit = app.add_subcommand("audit", "Exhaustive audit; writes a CSV report");
  audit->add_option("--q", q, "Field order")->required();
  audit->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 1024));
  audit->add_option("--out", out_path, "CSV report path")->required();
  audit->add_option("--json", json_path, "Also write the JSON report here");
  audit->add_option("--scope", scope, "auto, planes, lines, points, conic or solids")
      ->check(CLI::IsMember({"auto", "planes", "lines", "points", "conic", "solids"}));
  audit->add_option("--checkpoint", checkpoint, "Shard checkpoint file; completed shards are skipped on rerun");
  audit->add_option("--shard-size", shard_size, "Subspaces per shard")->check(CLI::PositiveNumber);
  audit->footer("CSV columns: label,tally,expected_orbit_size,stabilizer_order,consistent");

  auto* witness = app.add_subcommand("witness", "Find A in PGL(3,q) mapping one subspace onto another");
  witness->add_option("--q", q_opt, "Field order (optional if the documents have \"q\")");
  witness->add_option("--left", left, "JSON document with a \"basis\"")->required();
  witness->add_option("--right", right, "JSON document with a \"basis\"")->required();

  std::vector<const char*> argv = {"conicnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "MalformedInput", e.what());
    return kExitUser;
  }

  try {
    if (classify->parsed()) return cmd_classify(kind, q_opt, input, in, out);
    if (rep->parsed()) return cmd_rep(label, q, out);
    if (tables->parsed()) return cmd_tables(q, table_kind, out, err);
    if (audit->parsed()) {
      AuditOptions options;
      options.workers = workers;
      options.checkpoint_path = checkpoint;
      options.shard_size = shard_size;
      return cmd_audit(q, scope, options, out_path, json_path, out, err);
    }
    if (witness->parsed()) return cmd_witness(q_opt, left, right, in, out);
  } catch (const Error& e) {
    print_error(err, std::string(error_code_name(e.code())), e.what());
    return e.is_internal() ? kExitInternal : kExitUser;
  } catch (const json::exception& e) {
    print_error(err, "MalformedInput", e.what());
    return kExitUser;
  } catch (const std::exception& e) {
    print_error(err, "InternalInconsistency", e.what());
    return kExitInternal;
  }
  return kExitUser;
}

}  // namespace conicnet::cli
