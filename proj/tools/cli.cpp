#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "gonlab/bounds.hpp"
#include "gonlab/error.hpp"
#include "gonlab/gonality.hpp"
#include "gonlab/randgraph.hpp"
#include "gonlab/reduction.hpp"

namespace gonlab::cli {

namespace {

using json = nlohmann::json;

struct Outcome {
  json data;
  int code = kExitOk;
};

std::string hex64(std::uint64_t x) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string grid_u(int j, int n) { return std::to_string(j) + "/" + std::to_string(n); }

json rat(const Rational& r) { return r.to_string(); }

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_rat(const std::optional<Rational>& v) { return v ? rat(*v) : json(nullptr); }

json graph_info(const Multigraph& g, const std::string& source) {
  return {{"source", source},
          {"n", g.vertex_count()},
          {"m", g.edge_count()},
          {"regular_degree", opt(g.regular_degree())},
          {"simple", g.is_simple()},
          {"connected", g.is_connected()},
          {"hash", hex64(g.hash())}};
}

Budget make_budget(const CommandConfig& c) {
  Budget b;
  if (c.budget_steps) b.max_steps = *c.budget_steps;
  if (c.budget_seconds) b.with_seconds(*c.budget_seconds);
  return b;
}

// Scalar text shared by the human and TSV renderers, so both show exactly the
// numbers the JSON carries.
std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += scalar_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

bool scalar_array(const json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

void flatten(const json& v, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (v.is_array() && !scalar_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

void render_flat(const json& data, Format f, std::ostream& os) {
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(data, "", lines);
  std::size_t width = 0;
  for (const auto& [k, _] : lines) width = std::max(width, k.size());
  for (const auto& [k, v] : lines) {
    if (f == Format::tsv) {
      os << k << '\t' << v << '\n';
    } else {
      os << std::left << std::setw(static_cast<int>(width) + 2) << (k + ":") << v << '\n';
    }
  }
}

void render_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows, Format f, std::ostream& os) {
  if (f == Format::tsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i + 1 < cells.size()) {
        os << std::left << std::setw(static_cast<int>(w[i]) + 2) << cells[i];
      } else {
        os << cells[i];
      }
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

json bound_entry(const std::optional<LowerBound>& b, const std::string& status, int n) {
  json e = {{"status", status}};
  if (b) {
    e["value"] = rat(b->value);
    e["ceiling"] = b->value.ceil();
    e["u"] = grid_u(b->j, n);
  }
  return e;
}

json separator_json(const SeparatorCertificate& c) {
  return {{"j", c.j},
          {"u", grid_u(c.j, c.n)},
          {"B_u", c.optimal ? json(c.size()) : json(nullptr)},
          {"separator", c.separator},
          {"component_sizes", c.component_sizes},
          {"optimal", c.optimal},
          {"lower_bound", c.lower_bound},
          {"upper_bound", c.size()}};
}

// ---- subcommands ----------------------------------------------------------

Outcome cmd_bounds(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  ReportOptions opts;
  opts.cheeger.exact_max_n = c.exact_max_n;
  opts.cheeger.threads = c.threads;
  opts.cheeger.budget = make_budget(c);
  opts.separators.exact_max_n = c.exact_max_n;
  opts.separators.budget = make_budget(c);
  opts.tol = c.tol;
  const BoundReport r = full_report(g, opts);

  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"j", row.j},
               {"u", grid_u(row.j, r.n)},
               {"h_u", rat(row.h_u)},
               {"h_u_n", rat(row.expansion)},
               {"B_u", nullptr},
               {"row_min", opt_rat(row.separator_min)},
               {"separator_floor", opt_rat(row.separator_floor)},
               {"floor_min", opt_rat(row.floor_min)}};
    if (row.separator) {
      if (row.separator->optimal) jr["B_u"] = row.separator->size();
      jr["separator"] = row.separator->separator;
    }
    rows.push_back(std::move(jr));
  }

  json spectral = {{"status", r.spectral_status}};
  if (r.spectral && r.spectral_value) {
    spectral["lambda2"] = r.spectral->lambda2;
    spectral["lambda2_error"] = r.spectral->error_bound;
    spectral["d"] = r.spectral->d_max;
    spectral["value"] = r.spectral_value->value;
    spectral["lower"] = r.spectral_value->lower;
    spectral["upper"] = r.spectral_value->upper;
    spectral["ceiling"] = r.spectral_value->applicable ? json(r.spectral_value->ceiling) : json(nullptr);
  }

  json upper = {{"genus", {{"value", r.genus.value}, {"loose", r.genus.loose}}},
                {"value", r.upper}};
  if (r.independence) {
    upper["independence"] = {{"value", r.independence->value},
                             {"exact", r.independence->exact},
                             {"independent_set", r.independence->independent_set},
                             {"witness", r.independence->witness.to_string()}};
  }

  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"cheeger_exact", r.profile ? json(r.profile->exact) : json(nullptr)},
            {"rows", rows},
            {"separator_bound", bound_entry(r.separator, r.separator_status, r.n)},
            {"cheeger_bound", bound_entry(r.cheeger, r.cheeger_status, r.n)},
            {"spectral_bound", spectral},
            {"upper", upper},
            {"bracket", {r.lower, r.upper}},
            {"budget_exhausted", r.budget_exhausted}};
  o.code = r.budget_exhausted ? kExitBudget : kExitOk;
  return o;
}

void render_bounds(const json& d, Format f, std::ostream& os) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : d["rows"]) {
    rows.push_back({scalar_text(r["u"]), scalar_text(r["B_u"]), scalar_text(r["h_u"]),
                    scalar_text(r["h_u_n"]), scalar_text(r["row_min"]),
                    scalar_text(r["separator_floor"]), scalar_text(r["floor_min"])});
  }
  if (f == Format::human) {
    const auto& g = d["graph"];
    os << "graph " << scalar_text(g["source"]) << ": n=" << g["n"].dump() << " m=" << g["m"].dump()
       << " regular_degree=" << scalar_text(g["regular_degree"]) << "\n\n";
  }
  render_table({"u", "B_u", "h_u", "h_u_n", "row_min", "separator_floor", "floor_min"}, rows, f, os);
  if (f == Format::human) os << '\n';

  std::vector<std::vector<std::string>> footer;
  for (const char* key : {"separator_bound", "cheeger_bound"}) {
    const auto& b = d[key];
    footer.push_back({key, b.contains("value") ? scalar_text(b["value"]) : "-",
                      b.contains("ceiling") ? scalar_text(b["ceiling"]) : "-",
                      b.contains("u") ? scalar_text(b["u"]) : "-", scalar_text(b["status"])});
  }
  const auto& s = d["spectral_bound"];
  footer.push_back({"spectral_bound", s.contains("value") ? scalar_text(s["value"]) : "-",
                    s.contains("ceiling") ? scalar_text(s["ceiling"]) : "-", "-",
                    s.contains("lambda2") && s["status"] == "ok"
                        ? "lambda2=" + scalar_text(s["lambda2"]) + " error<=" +
                              scalar_text(s["lambda2_error"])
                        : scalar_text(s["status"])});
  const auto& up = d["upper"];
  std::string detail = "genus=" + scalar_text(up["genus"]["value"]) +
                       (up["genus"]["loose"].get<bool>() ? " (loose)" : "");
  if (up.contains("independence")) {
    detail += " independence=" + scalar_text(up["independence"]["value"]) +
              (up["independence"]["exact"].get<bool>() ? "" : " (greedy)");
  }
  footer.push_back({"upper", scalar_text(up["value"]), "-", "-", detail});
  footer.push_back({"bracket", scalar_text(d["bracket"][0]), scalar_text(d["bracket"][1]), "-",
                    d["budget_exhausted"].get<bool>() ? "budget exhausted" : "ok"});
  render_table({"row", "value", "ceiling", "u", "detail"}, footer, f, os);
}

Outcome cmd_gonality(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  GonalityOptions opts;
  opts.max_degree = c.max_degree;
  opts.budget = make_budget(c);
  opts.threads = c.threads;
  const GonalityResult r = exact_gonality(g, opts);
  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"certified", r.certified()},
            {"gonality", r.certified() ? json(r.certificate->value) : json(nullptr)},
            {"witness", r.certified() ? json(r.certificate->witness.to_string()) : json(nullptr)},
            {"exhaustive", r.certified() && r.certificate->exhaustive},
            {"cleared_degree", r.cleared_degree},
            {"lower", r.lower},
            {"upper", r.upper},
            {"candidates_checked", r.candidates_checked},
            {"budget_exhausted", r.budget_exhausted}};
  o.code = r.budget_exhausted ? kExitBudget : kExitOk;
  return o;
}

Outcome cmd_cheeger(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  CheegerOptions opts;
  opts.exact_max_n = c.exact_max_n;
  opts.enumeration = c.all_subsets ? SubsetEnumeration::all : SubsetEnumeration::connected;
  opts.budget = make_budget(c);
  opts.threads = c.threads;
  const CheegerProfile p = cheeger_profile(g, opts);
  json rows = json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"j", r.j}, {"u", grid_u(r.j, p.n)}, {"h_u", rat(r.h)}, {"witness", r.witness}});
  }
  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"exact", p.exact},
            {"enumeration", c.all_subsets ? "all" : "connected"},
            {"rows", rows},
            {"cheeger_constant", rat(p.cheeger_constant())}};
  return o;
}

void render_cheeger(const json& d, Format f, std::ostream& os) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : d["rows"]) {
    rows.push_back({scalar_text(r["u"]), scalar_text(r["h_u"]), scalar_text(r["witness"])});
  }
  render_table({"u", "h_u", "witness"}, rows, f, os);
  if (f == Format::tsv) {
    os << "cheeger_constant\t" << scalar_text(d["cheeger_constant"]) << "\nexact\t"
       << scalar_text(d["exact"]) << '\n';
  } else {
    os << "\ncheeger_constant: " << scalar_text(d["cheeger_constant"])
       << "\nexact: " << scalar_text(d["exact"]) << '\n';
  }
}

Outcome cmd_bu(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  const int n = g.vertex_count();
  const Rational u = Rational::parse(c.u);
  if (u <= Rational(0) || u > Rational(1, 2)) {
    throw PreconditionError("--u must lie in (0, 1/2]");
  }
  const int j = static_cast<int>((u * n).floor());
  if (j < 1) throw PreconditionError("u * n < 1: every vertex would have to be removed");
  SeparatorOptions opts;
  opts.exact_max_n = c.exact_max_n;
  opts.budget = make_budget(c);
  const SeparatorCertificate cert = min_separator(g, j, opts);
  Outcome o;
  o.data = separator_json(cert);
  o.data["graph"] = graph_info(g, c.graph);
  o.data["u_requested"] = rat(u);
  o.code = cert.optimal ? kExitOk : kExitBudget;
  return o;
}

Outcome cmd_spectral(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  const SpectralSummary s = algebraic_connectivity(g, c.tol);
  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"n", s.n},
            {"d", s.d_max},
            {"connected", s.connected},
            {"lambda2", s.lambda2},
            {"lambda2_error", s.error_bound},
            {"bound", nullptr},
            {"applicable", false},
            {"ceiling", nullptr}};
  if (s.connected && s.n >= 2) {
    const SpectralBound b = spectral_gonality_bound(s);
    o.data["bound"] = {{"value", b.value}, {"lower", b.lower}, {"upper", b.upper}};
    o.data["ceiling"] = b.applicable ? json(b.ceiling) : json(nullptr);
    o.data["applicable"] = b.applicable;
  }
  return o;
}

Outcome cmd_reduce(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  if (c.at < 0 || c.at >= g.vertex_count()) throw PreconditionError("--at is out of range");
  const Divisor d = parse_divisor(g, c.divisor);
  const Divisor r = v_reduce(d, c.at);
  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"input", d.to_string()},
            {"at", c.at},
            {"degree", d.degree()},
            {"reduced", r.to_string()},
            {"chips_at_base", r[c.at]},
            {"equivalent_to_effective", r[c.at] >= 0}};
  return o;
}

Outcome cmd_rank(const CommandConfig& c) {
  const Multigraph g = resolve_graph(c.graph);
  if (c.at_least < 0) throw PreconditionError("--at-least must be non-negative");
  const Divisor d = parse_divisor(g, c.divisor);
  Outcome o;
  o.data = {{"graph", graph_info(g, c.graph)},
            {"divisor", d.to_string()},
            {"r", c.at_least},
            {"failing_vertex", nullptr},
            {"failing_subtrahend", nullptr}};
  if (c.at_least == 1) {
    const auto fail = positive_rank_failure(d);
    o.data["holds"] = !fail.has_value();
    o.data["checked"] = g.vertex_count();
    if (fail) {
      o.data["failing_vertex"] = *fail;
      o.data["failing_subtrahend"] = Divisor::point(g, *fail).to_string();
    }
    return o;
  }
  RankOptions opts;
  opts.max_subtrahends = c.max_subtrahends;
  const RankQuery q = rank_at_least(d, c.at_least, opts);
  o.data["holds"] = q.holds;
  o.data["checked"] = q.checked;
  if (q.failing_subtrahend) o.data["failing_subtrahend"] = q.failing_subtrahend->to_string();
  return o;
}

json quantiles_json(const std::optional<Quantiles>& q) {
  if (!q) return nullptr;
  return {{"mean", q->mean}, {"min", q->min},     {"q25", q->q25},
          {"median", q->median}, {"q75", q->q75}, {"max", q->max}};
}

Outcome cmd_random(const CommandConfig& c) {
  ConfigModelParams p;
  p.k = c.k;
  p.n = c.n;
  p.seed = c.seed;
  if (c.mode == "simple") {
    p.mode = ConfigMode::simple;
  } else if (c.mode == "multigraph") {
    p.mode = ConfigMode::multigraph;
  } else {
    throw PreconditionError("--mode must be simple or multigraph");
  }
  ExperimentCaps caps;
  caps.gonality_cap = c.gonality_cap;
  caps.cheeger_cap = c.cheeger_cap;
  caps.threads = c.threads;
  if (c.budget_steps) caps.gonality_budget = *c.budget_steps;
  const ExperimentResult res = run_experiment(p, c.samples, caps);

  if (!c.emit_graphs.empty()) {
    std::filesystem::create_directories(c.emit_graphs);
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "sample_%04llu.txt", static_cast<unsigned long long>(i));
      std::ofstream f(std::filesystem::path(c.emit_graphs) / name);
      if (!f) throw Error("cannot write to " + c.emit_graphs);
      f << to_edge_list(experiment_sample(p, i));
    }
  }

  json records = json::array();
  bool exhausted = false;
  for (const auto& r : res.records) {
    json profile = nullptr;
    if (r.cheeger_profile) {
      profile = json::array();
      for (const auto& h : *r.cheeger_profile) profile.push_back(rat(h));
    }
    records.push_back({{"index", r.index},
                       {"seed", hex64(r.seed)},
                       {"hash", hex64(r.graph_hash)},
                       {"connected", r.connected},
                       {"simple", r.simple},
                       {"lambda2", r.lambda2},
                       {"lambda2_error", r.lambda2_error},
                       {"spectral_bound", opt(r.spectral_bound)},
                       {"spectral_per_vertex", opt(r.spectral_per_vertex)},
                       {"cheeger_profile", profile},
                       {"separator_bound", opt_rat(r.separator_bound)},
                       {"cheeger_bound", opt_rat(r.cheeger_bound)},
                       {"gonality", opt(r.gonality)},
                       {"upper_bound", opt(r.upper_bound)},
                       {"sandwich_ok", r.sandwich_ok},
                       {"status", r.status}});
    if (r.status == "gonality budget exhausted") exhausted = true;
  }
  const auto& s = res.summary;
  Outcome o;
  o.data = {{"params",
             {{"k", c.k},
              {"n", c.n},
              {"seed", c.seed},
              {"mode", c.mode},
              {"samples", c.samples},
              {"gonality_cap", c.gonality_cap},
              {"cheeger_cap", c.cheeger_cap},
              {"rng", "mt19937_64, per-sample seed splitmix64(seed ^ splitmix64(index))"}}},
            {"records", records},
            {"summary",
             {{"samples", s.samples},
              {"connected", s.connected},
              {"lambda2", quantiles_json(s.lambda2)},
              {"spectral_per_vertex", quantiles_json(s.spectral_per_vertex)},
              {"spectral_threshold", s.spectral_threshold},
              {"fraction_above_threshold", s.fraction_above_threshold},
              {"sandwich_violations", s.sandwich_violations},
              {"note", s.note}}}};
  o.code = exhausted ? kExitBudget : kExitOk;
  return o;
}

void render_random(const json& d, Format f, std::ostream& os) {
  const std::vector<std::string> cols = {"index",          "hash",          "connected",
                                         "lambda2",        "spectral_bound", "spectral_per_vertex",
                                         "separator_bound", "cheeger_bound", "gonality",
                                         "upper_bound",    "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : d["records"]) {
    std::vector<std::string> cells;
    for (const auto& col : cols) cells.push_back(scalar_text(r[col]));
    rows.push_back(std::move(cells));
  }
  render_table(cols, rows, f, os);
  os << (f == Format::tsv ? "# summary\n" : "\nsummary\n");
  render_flat(d["summary"], f, os);
}

Outcome cmd_pappus_demo(const CommandConfig& c) {
  const Multigraph g = pappus_graph();
  const int n = g.vertex_count();
  Outcome o;
  json& d = o.data;
  d["graph"] = graph_info(g, "pappus");
  d["bipartite"] = is_bipartite(g);
  d["genus"] = genus(g);

  CheegerOptions copt;
  copt.threads = c.threads;
  copt.allow_heuristic = false;
  const CheegerProfile profile = cheeger_profile(g, copt);
  json table = json::array();
  for (const auto& r : profile.rows) table.push_back({{"u", grid_u(r.j, n)}, {"h_u", rat(r.h)}});
  d["table"] = table;
  d["cheeger_constant"] = rat(profile.cheeger_constant());

  const LowerBound rc = regular_cheeger_bound(g, profile);
  d["regular_cheeger_bound"] = {
      {"value", rat(rc.value)}, {"u", grid_u(rc.j, n)}, {"ceiling", rc.value.ceil()}};
  const auto seps = separator_profile(g);
  const LowerBound sb = separator_bound(g, profile, seps);
  d["separator_bound"] = {
      {"value", rat(sb.value)}, {"u", grid_u(sb.j, n)}, {"ceiling", sb.value.ceil()}};

  const SpectralSummary s = algebraic_connectivity(g, c.tol);
  const SpectralBound b = spectral_gonality_bound(s);
  d["spectral"] = {{"lambda2", s.lambda2},
                   {"lambda2_error", s.error_bound},
                   {"lambda2_closed_form", "3-sqrt(3)"},
                   {"lambda2_deviation", std::abs(s.lambda2 - (3.0 - std::sqrt(3.0)))},
                   {"bound", b.value},
                   {"bound_lower", b.lower},
                   {"ceiling", b.ceiling}};

  const Divisor middle = Divisor::indicator(g, pappus_middle_ring());
  d["middle_ring_divisor"] = {{"divisor", middle.to_string()},
                              {"degree", middle.degree()},
                              {"positive_rank", has_positive_rank(middle)}};

  GonalityOptions gopt;
  gopt.threads = c.threads;
  gopt.budget = make_budget(c);
  const GonalityResult gr = exact_gonality(g, gopt);
  d["gonality"] = {{"certified", gr.certified()},
                   {"value", gr.certified() ? json(gr.certificate->value) : json(nullptr)},
                   {"witness", gr.certified() ? json(gr.certificate->witness.to_string()) : json(nullptr)},
                   {"cleared_degree", gr.cleared_degree},
                   {"exhaustive", gr.certified() && gr.certificate->exhaustive},
                   {"candidates_checked", gr.candidates_checked}};

  const IndependenceBound ib = independence_upper_bound(g);
  const GenusBound gb = genus_upper_bound(g);
  const std::int64_t lower =
      std::max({std::int64_t{1}, rc.value.ceil(), sb.value.ceil(), b.ceiling});
  std::int64_t upper = ib.value;
  if (!gb.loose) upper = std::min(upper, gb.value);
  d["upper"] = {{"genus", gb.value}, {"independence", ib.value}, {"value", upper}};
  d["bracket"] = {lower, upper};
  o.code = gr.budget_exhausted ? kExitBudget : kExitOk;
  return o;
}

void render(const std::string& sub, const json& data, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << data.dump(2) << '\n';
  } else if (sub == "bounds") {
    render_bounds(data, f, os);
  } else if (sub == "cheeger") {
    render_cheeger(data, f, os);
  } else if (sub == "random") {
    render_random(data, f, os);
  } else {
    render_flat(data, f, os);
  }
}

template <class T>
bool env_number(const EnvLookup& env, const std::string& name, std::optional<T>& slot,
                std::ostream& err) {
  const auto v = env(name);
  if (!v || v->empty()) return true;
  std::istringstream is(*v);
  T x{};
  if (!(is >> x) || !is.eof() || !(x > T{0})) {
    err << "error: " << name << " must be a positive number, got '" << *v << "'\n";
    return false;
  }
  slot = x;
  return true;
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (!v) return std::nullopt;
  return std::string(v);
}

ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                std::ostream& err, const EnvLookup& env) {
  CommandConfig c;
  c.threads = std::max(1u, std::thread::hardware_concurrency());

  std::optional<int> env_threads;
  if (!env_number(env, "GONLAB_THREADS", env_threads, err) ||
      !env_number(env, "GONLAB_BUDGET_SECONDS", c.budget_seconds, err) ||
      !env_number(env, "GONLAB_BUDGET_STEPS", c.budget_steps, err)) {
    return {std::nullopt, kExitInputError};
  }
  if (env_threads) c.threads = *env_threads;

  CLI::App app{"gonlab: gonality bounds for graphs"};
  app.name("gonlab");
  app.require_subcommand(1);

  std::string format = "human";
  bool as_json = false;
  bool as_tsv = false;
  const std::map<std::string, Format> formats = {
      {"human", Format::human}, {"json", Format::json}, {"tsv", Format::tsv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "tsv"}));
    sub->add_flag("--json", as_json, "Same as --format json");
    sub->add_flag("--tsv", as_tsv, "Same as --format tsv");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", c.budget_seconds, "Wall-clock budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget_steps, "Enumeration step budget")
        ->check(CLI::PositiveNumber);
  };
  auto with_graph = [&](CLI::App* sub) {
    sub->add_option("graph", c.graph, "Edge-list file or builtin graph id")->required();
    common(sub);
  };

  auto* bounds = app.add_subcommand("bounds", "All lower and upper gonality bounds");
  with_graph(bounds);
  bounds->add_option("--exact-max-n", c.exact_max_n, "Largest n for exact enumeration");
  bounds->add_option("--tol", c.tol, "Eigenvalue error tolerance")->check(CLI::PositiveNumber);

  auto* gon = app.add_subcommand("gonality", "Exact gonality with certificate");
  with_graph(gon);
  gon->add_option("--max-degree", c.max_degree, "Highest degree to search")
      ->check(CLI::NonNegativeNumber);

  auto* cheeger = app.add_subcommand("cheeger", "u-Cheeger profile");
  with_graph(cheeger);
  cheeger->add_option("--exact-max-n", c.exact_max_n, "Largest n for exact enumeration");
  cheeger->add_flag("--all-subsets", c.all_subsets, "Enumerate every subset, not just connected ones");

  auto* bu = app.add_subcommand("bu", "Minimum separator B_u");
  with_graph(bu);
  bu->add_option("--u", c.u, "Grid point j/n")->required();
  bu->add_option("--exact-max-n", c.exact_max_n, "Largest n for exact search");

  auto* spectral = app.add_subcommand("spectral", "Algebraic connectivity and spectral bound");
  with_graph(spectral);
  spectral->add_option("--tol", c.tol, "Eigenvalue error tolerance")->check(CLI::PositiveNumber);

  auto* reduce = app.add_subcommand("reduce", "v-reduced form of a divisor");
  with_graph(reduce);
  reduce->add_option("divisor", c.divisor, "Divisor such as 0:1,4:2")->required();
  reduce->add_option("--at", c.at, "Base vertex")->required();

  auto* rank = app.add_subcommand("rank", "Rank test for a divisor");
  with_graph(rank);
  rank->add_option("divisor", c.divisor, "Divisor such as 0:1,4:2")->required();
  rank->add_option("--at-least", c.at_least, "Rank to test");
  rank->add_option("--max-subtrahends", c.max_subtrahends, "Cap on subtracted divisors")
      ->check(CLI::PositiveNumber);

  auto* random = app.add_subcommand("random", "Random regular graph experiment");
  common(random);
  random->add_option("--k", c.k, "Regularity");
  random->add_option("--n", c.n, "Vertex count");
  random->add_option("--samples", c.samples, "Number of samples");
  random->add_option("--seed", c.seed, "64-bit seed");
  random->add_option("--mode", c.mode, "simple or multigraph")
      ->check(CLI::IsMember({"simple", "multigraph"}));
  random->add_option("--gonality-cap", c.gonality_cap, "Exact gonality when n <= cap");
  random->add_option("--cheeger-cap", c.cheeger_cap, "Exact Cheeger rows when n <= cap");
  random->add_option("--emit-graphs", c.emit_graphs, "Directory for sampled edge lists");

  auto* demo = app.add_subcommand("pappus-demo", "Worked example on the Pappus graph");
  common(demo);
  demo->add_option("--tol", c.tol, "Eigenvalue error tolerance")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, kExitInputError};
  }
  if (c.threads < 1) {
    err << "error: thread count must be positive\n";
    return {std::nullopt, kExitInputError};
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = as_json ? Format::json : as_tsv ? Format::tsv : formats.at(format);
  return {c, kExitOk};
}

int dispatch(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Outcome o;
    if (c.subcommand == "bounds") {
      o = cmd_bounds(c);
    } else if (c.subcommand == "gonality") {
      o = cmd_gonality(c);
    } else if (c.subcommand == "cheeger") {
      o = cmd_cheeger(c);
    } else if (c.subcommand == "bu") {
      o = cmd_bu(c);
    } else if (c.subcommand == "spectral") {
      o = cmd_spectral(c);
    } else if (c.subcommand == "reduce") {
      o = cmd_reduce(c);
    } else if (c.subcommand == "rank") {
      o = cmd_rank(c);
    } else if (c.subcommand == "random") {
      o = cmd_random(c);
    } else if (c.subcommand == "pappus-demo") {
      o = cmd_pappus_demo(c);
    } else {
      err << "error: unknown subcommand '" << c.subcommand << "'\n";
      return kExitInputError;
    }
    render(c.subcommand, o.data, c.format, out);
    if (o.code == kExitBudget) err << "warning: budget exhausted; output is partial\n";
    return o.code;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << (c.graph.empty() ? "" : c.graph + ": ") << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  const ParseOutcome p = parse_command_line(args, out, err, env);
  if (!p.config) return p.exit_code;
  return dispatch(*p.config, out, err);
}

}  // namespace gonlab::cli
