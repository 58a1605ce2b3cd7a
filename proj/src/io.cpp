#include "eikonal/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "eikonal/error.hpp"

namespace eikonal::io {

// ---------------------------------------------------------------------------
// Located parsing. The SAX handler forwards to nlohmann's DOM builder, keeps
// the JSON pointer of the value being read and asks the input iterator how
// far the lexer has got.

namespace {

class CountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, const char* base, std::size_t* furthest)
      : p_(p), base_(base), furthest_(furthest) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    *furthest_ = std::max(*furthest_, static_cast<std::size_t>(p_ - base_));
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* furthest_ = nullptr;
};

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

class LocatingSax {
 public:
  LocatingSax(LocatedJson& out, const std::string& text, const std::size_t* consumed)
      : out_(out), dom_(out.doc, true), consumed_(consumed) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') newlines_.push_back(i);
    }
  }

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
  bool number_integer(Json::number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
  bool number_unsigned(Json::number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
  bool number_float(Json::number_float_t v, const Json::string_t& s) {
    return scalar([&] { return dom_.number_float(v, s); });
  }
  bool string(Json::string_t& v) { return scalar([&] { return dom_.string(v); }); }
  bool binary(Json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

  bool start_object(std::size_t n) {
    open();
    frames_.push_back({false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(Json::string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    const bool ok = dom_.end_object();
    close();
    return ok;
  }
  bool start_array(std::size_t n) {
    open();
    frames_.push_back({true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    const bool ok = dom_.end_array();
    close();
    return ok;
  }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    std::string what = ex.what();
    // drop the "[json.exception.parse_error.101] " tag
    if (const auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
    throw Error(Errc::parse, out_.source + ":" + std::to_string(line_at(position > 0 ? position - 1 : 0)) +
                                 ": " + what);
  }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
  };

  template <class F>
  bool scalar(F&& f) {
    open();
    const bool ok = f();
    close();
    return ok;
  }

  std::size_t line_at(std::size_t offset) const {
    return 1 + static_cast<std::size_t>(std::lower_bound(newlines_.begin(), newlines_.end(), offset) -
                                        newlines_.begin());
  }

  void open() {
    std::string pointer;
    for (const Frame& f : frames_) pointer += "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
    const std::size_t at = *consumed_ > 0 ? *consumed_ - 1 : 0;
    out_.lines.emplace(std::move(pointer), line_at(at));
  }

  void close() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  LocatedJson& out_;
  nlohmann::detail::json_sax_dom_parser<Json> dom_;
  const std::size_t* consumed_;
  std::vector<std::size_t> newlines_;
  std::vector<Frame> frames_;
};

}  // namespace

std::size_t LocatedJson::line_of(const std::string& pointer) const {
  std::string p = pointer;
  for (;;) {
    if (const auto it = lines.find(p); it != lines.end()) return it->second;
    if (p.empty()) return 1;
    p.erase(p.rfind('/'));
  }
}

void LocatedJson::fail(const std::string& pointer, const std::string& message) const {
  throw Error(Errc::parse, source + ":" + std::to_string(line_of(pointer)) + ": " + message);
}

LocatedJson parse_located(const std::string& text, const std::string& source) {
  LocatedJson out;
  out.source = source;
  std::size_t consumed = 0;
  LocatingSax sax(out, text, &consumed);
  const char* base = text.data();
  Json::sax_parse(CountingIterator(base, base, &consumed), CountingIterator(base + text.size(), base, &consumed),
                  &sax);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Schema helpers

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + escape_token(key); }
std::string child(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

const Json& member(const LocatedJson& doc, const Json& obj, const std::string& pointer, const std::string& key) {
  if (!obj.is_object()) doc.fail(pointer, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) doc.fail(pointer, "missing key '" + key + "'");
  return *it;
}

const Json& array_member(const LocatedJson& doc, const Json& obj, const std::string& pointer,
                         const std::string& key) {
  const Json& v = member(doc, obj, pointer, key);
  if (!v.is_array()) doc.fail(child(pointer, key), "'" + key + "' must be an array");
  return v;
}

double number(const LocatedJson& doc, const Json& v, const std::string& pointer, const std::string& what) {
  if (!v.is_number()) doc.fail(pointer, what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) doc.fail(pointer, what + " must be finite");
  return d;
}

std::string text(const LocatedJson& doc, const Json& v, const std::string& pointer, const std::string& what) {
  if (!v.is_string()) doc.fail(pointer, what + " must be a string");
  return v.get<std::string>();
}

EdgeProfile parse_profile(const LocatedJson& doc, const Json& f, const std::string& pointer, double length,
                          const std::string& edge) {
  const std::string kind = text(doc, member(doc, f, pointer, "kind"), child(pointer, "kind"), "f.kind");
  const std::string pp = child(pointer, "params");
  const Json& params = member(doc, f, pointer, "params");
  auto positive = [&](double v, const std::string& where) {
    if (!(v >= kDefaultFmin)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "edge '" << edge << "': f = " << v << " at " << where << " is below fmin = " << kDefaultFmin;
      doc.fail(pp, msg.str());
    }
  };
  if (kind == "const") {
    const double c = number(doc, params, pp, "const params");
    positive(c, "every point");
    return ConstantProfile{c};
  }
  if (kind == "linear") {
    const double a = number(doc, member(doc, params, pp, "a"), child(pp, "a"), "a");
    const double b = number(doc, member(doc, params, pp, "b"), child(pp, "b"), "b");
    positive(a, "s = 0");
    positive(a + b * length, "s = length");
    return LinearProfile{a, b};
  }
  if (kind == "samples") {
    if (!params.is_array() || params.size() < 2) doc.fail(pp, "samples params must be an array of >= 2 [s, f] pairs");
    SampledProfile p;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const std::string ip = child(pp, i);
      const Json& pair = params[i];
      if (!pair.is_array() || pair.size() != 2) doc.fail(ip, "sample must be an [s, f] pair");
      const double s = number(doc, pair[0], child(ip, 0), "sample offset");
      const double v = number(doc, pair[1], child(ip, 1), "sample value");
      if (!p.knots.empty() && !(s > p.knots.back())) doc.fail(ip, "sample offsets must strictly increase");
      positive(v, "s = " + csv_number(s));
      p.knots.push_back(s);
      p.values.push_back(v);
    }
    if (p.knots.front() != 0.0) doc.fail(child(pp, 0), "samples must start at s = 0");
    if (std::abs(p.knots.back() - length) > 1e-12 * std::max(1.0, length)) {
      doc.fail(child(pp, params.size() - 1), "samples must end at s = length");
    }
    p.knots.back() = length;
    return p;
  }
  doc.fail(child(pointer, "kind"), "unknown f.kind '" + kind + "' (const, linear, samples)");
}

}  // namespace

Problem parse_problem(const LocatedJson& doc) {
  const Json& root = doc.doc;
  if (!root.is_object()) doc.fail("", "graph document must be an object");
  const Json& vs = array_member(doc, root, "", "vertices");
  const Json& es = array_member(doc, root, "", "edges");

  std::vector<Vertex> vertices;
  std::map<std::string, VertexId> ids;
  std::vector<std::pair<VertexId, double>> g;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = child("/vertices", i);
    const Json& v = vs[i];
    const std::string id = text(doc, member(doc, v, p, "id"), child(p, "id"), "vertex id");
    if (!ids.emplace(id, i).second) doc.fail(child(p, "id"), "duplicate vertex id '" + id + "'");
    const Json& b = member(doc, v, p, "boundary");
    if (!b.is_boolean()) doc.fail(child(p, "boundary"), "boundary must be true or false");
    const bool boundary = b.get<bool>();
    const bool has_g = v.contains("g");
    if (boundary && !has_g) doc.fail(p, "boundary vertex '" + id + "' needs g");
    if (!boundary && has_g) doc.fail(child(p, "g"), "g given on interior vertex '" + id + "'");
    if (has_g) g.emplace_back(i, number(doc, v["g"], child(p, "g"), "g"));
    vertices.push_back({id, boundary});
  }

  std::vector<Edge> edges;
  std::vector<EdgeProfile> profiles;
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = child("/edges", i);
    const Json& e = es[i];
    const std::string id = text(doc, member(doc, e, p, "id"), child(p, "id"), "edge id");
    if (!edge_ids.insert(id).second) doc.fail(child(p, "id"), "duplicate edge id '" + id + "'");
    VertexId ends[2];
    const char* keys[2] = {"from", "to"};
    for (int k = 0; k < 2; ++k) {
      const std::string name = text(doc, member(doc, e, p, keys[k]), child(p, keys[k]), keys[k]);
      const auto it = ids.find(name);
      if (it == ids.end()) doc.fail(child(p, keys[k]), "edge '" + id + "' refers to unknown vertex '" + name + "'");
      ends[k] = it->second;
    }
    const double length = number(doc, member(doc, e, p, "length"), child(p, "length"), "length");
    if (!(length > 0.0)) doc.fail(child(p, "length"), "edge '" + id + "' needs a positive length");
    edges.push_back({id, ends[0], ends[1], length});
    profiles.push_back(parse_profile(doc, member(doc, e, p, "f"), child(p, "f"), length, id));
  }

  Problem out;
  try {
    out.graph = std::make_shared<const MetricGraph>(std::move(vertices), std::move(edges));
    out.cost = std::make_shared<const CostField>(*out.graph, std::move(profiles));
    for (const auto& [v, value] : g) out.boundary[v] = value;
    validate_boundary(*out.graph, out.boundary);
  } catch (const Error& err) {
    doc.fail("", err.what());
  }
  return out;
}

Problem load_problem(const std::string& path) { return parse_problem(parse_located(read_file(path), path)); }

// ---------------------------------------------------------------------------
// Output

namespace {

void dump_into(std::string& out, const Json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        dump_into(out, value, depth + 1);
      }
      out += "\n" + std::string(2 * depth, ' ') + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(out, v[i], depth + 1);
      }
      out += "\n" + std::string(2 * depth, ' ') + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump(const Json& value) {
  std::string out;
  dump_into(out, value, 0);
  out += '\n';
  return out;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json profile_json(const EdgeProfile& profile) {
  Json out;
  if (const auto* c = std::get_if<ConstantProfile>(&profile)) {
    out["kind"] = "const";
    out["params"] = c->value;
  } else if (const auto* l = std::get_if<LinearProfile>(&profile)) {
    out["kind"] = "linear";
    out["params"] = {{"a", l->intercept}, {"b", l->slope}};
  } else {
    const auto& s = std::get<SampledProfile>(profile);
    out["kind"] = "samples";
    Json params = Json::array();
    for (std::size_t i = 0; i < s.knots.size(); ++i) params.push_back({s.knots[i], s.values[i]});
    out["params"] = std::move(params);
  }
  return out;
}

Json point_json(const MetricGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return {{"vertex", g.vertex(p.vertex()).name}};
  return {{"edge", g.edge(p.edge()).name}, {"offset", p.offset()}};
}

GraphPoint parse_point(const LocatedJson& doc, const std::string& pointer, const MetricGraph& g) {
  const Json& v = doc.doc.at(Json::json_pointer(pointer));
  if (!v.is_object()) doc.fail(pointer, "point must be an object");
  if (v.contains("vertex")) {
    const std::string name = text(doc, v["vertex"], child(pointer, "vertex"), "vertex");
    const auto id = g.find_vertex(name);
    if (!id) doc.fail(child(pointer, "vertex"), "unknown vertex '" + name + "'");
    return GraphPoint::at_vertex(*id);
  }
  const std::string name = text(doc, member(doc, v, pointer, "edge"), child(pointer, "edge"), "edge");
  const auto id = g.find_edge(name);
  if (!id) doc.fail(child(pointer, "edge"), "unknown edge '" + name + "'");
  const double s = number(doc, member(doc, v, pointer, "offset"), child(pointer, "offset"), "offset");
  if (s < 0.0 || s > g.edge(*id).length) {
    doc.fail(child(pointer, "offset"), "offset " + csv_number(s) + " leaves edge '" + name + "'");
  }
  return GraphPoint::on_edge(g, *id, s);
}

Json value_function_json(const ValueFunction& u) {
  const MetricGraph& g = u.graph();
  const CostField& f = u.cost();
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json row{{"id", g.vertex(v).name}, {"u", u.vertex_values()[v]}, {"boundary", g.is_boundary(v)}};
    if (const auto it = u.boundary().find(v); it != u.boundary().end()) row["g"] = it->second;
    vertices.push_back(std::move(row));
  }
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back({{"id", ed.name},
                     {"from", g.vertex(ed.from).name},
                     {"to", g.vertex(ed.to).name},
                     {"length", ed.length},
                     {"u_from", u.vertex_values()[ed.from]},
                     {"u_to", u.vertex_values()[ed.to]},
                     {"total_cost", f.total(e)},
                     {"f", profile_json(f.profile(e))}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

ValueFunction parse_value_function(const LocatedJson& doc, const Problem& problem) {
  const MetricGraph& g = *problem.graph;
  const Json& root = doc.doc;
  if (!root.is_object()) doc.fail("", "u document must be an object");
  const Json& vs = array_member(doc, root, "", "vertices");
  auto mismatch = [&](const std::string& pointer, const std::string& msg) {
    throw Error(Errc::validation, doc.source + ":" + std::to_string(doc.line_of(pointer)) + ": " + msg);
  };
  if (vs.size() != g.vertex_count()) {
    mismatch("/vertices", "u lists " + std::to_string(vs.size()) + " vertices, the graph has " +
                              std::to_string(g.vertex_count()));
  }
  std::vector<double> values(g.vertex_count(), std::nan(""));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = child("/vertices", i);
    const std::string name = text(doc, member(doc, vs[i], p, "id"), child(p, "id"), "vertex id");
    const auto id = g.find_vertex(name);
    if (!id) mismatch(child(p, "id"), "vertex '" + name + "' is not in the graph");
    if (!std::isnan(values[*id])) mismatch(child(p, "id"), "vertex '" + name + "' listed twice");
    values[*id] = number(doc, member(doc, vs[i], p, "u"), child(p, "u"), "u");
  }
  if (root.contains("edges")) {
    const Json& es = array_member(doc, root, "", "edges");
    if (es.size() != g.edge_count()) {
      mismatch("/edges", "u lists " + std::to_string(es.size()) + " edges, the graph has " +
                             std::to_string(g.edge_count()));
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = child("/edges", i);
      const std::string name = text(doc, member(doc, es[i], p, "id"), child(p, "id"), "edge id");
      const auto id = g.find_edge(name);
      if (!id) mismatch(child(p, "id"), "edge '" + name + "' is not in the graph");
      if (es[i].contains("length") &&
          std::abs(number(doc, es[i]["length"], child(p, "length"), "length") - g.edge(*id).length) >
              1e-12 * g.edge(*id).length) {
        mismatch(child(p, "length"), "edge '" + name + "' has a different length in the graph");
      }
    }
  }
  return ValueFunction::from_vertex_values(problem.graph, problem.cost, std::move(values), problem.boundary);
}

Json compatibility_json(const MetricGraph& g, const CompatibilityReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"x", g.vertex(v.x).name}, {"y", g.vertex(v.y).name}, {"excess", v.excess}});
  }
  return {{"pass", report.pass}, {"violations", std::move(violations)}};
}

Json monge_json(const MetricGraph& g, const MongeReport& report) {
  Json samples = Json::array();
  for (const MongeSample& s : report.samples) {
    samples.push_back({{"point", point_json(g, s.point)},
                       {"method", to_string(s.estimate.method)},
                       {"sub_slope", s.estimate.sub_slope},
                       {"super_slope", s.estimate.super_slope},
                       {"slope", s.estimate.slope},
                       {"f_low", s.f_low},
                       {"f_high", s.f_high},
                       {"residual", s.residual},
                       {"kink", s.kink},
                       {"sub_ok", s.sub_ok},
                       {"super_ok", s.super_ok}});
  }
  Json skipped = Json::array();
  for (const GraphPoint& p : report.skipped) skipped.push_back(point_json(g, p));
  return {{"mode", "monge"},
          {"pass", report.solution},
          {"subsolution", report.subsolution},
          {"supersolution", report.supersolution},
          {"tol", report.tol},
          {"worst_violation", report.worst_violation},
          {"worst_point", report.worst_point ? point_json(g, *report.worst_point) : Json()},
          {"samples", std::move(samples)},
          {"skipped", std::move(skipped)}};
}

Json dpp_json(const MetricGraph& g, const DppReport& report) {
  Json samples = Json::array();
  for (const DppSample& s : report.samples) {
    Json row{{"point", point_json(g, s.point)}, {"tau", s.tau}};
    if (s.skipped) {
      row["skipped"] = s.skip_reason;
    } else {
      row["residual"] = s.residual;
      row["walks"] = s.walks;
    }
    samples.push_back(std::move(row));
  }
  return {{"mode", "dpp"},
          {"pass", report.pass},
          {"tol", report.tol},
          {"worst_residual", report.worst_residual},
          {"worst_point", report.worst_point ? point_json(g, *report.worst_point) : Json()},
          {"skipped", report.skipped},
          {"samples", std::move(samples)}};
}

Json subopt_json(const SuboptReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"curve", v.curve}, {"t1", v.t1}, {"t2", v.t2}, {"rise", v.rise}, {"cost", v.cost}});
  }
  return {{"mode", "subopt"},
          {"pass", report.pass},
          {"pairs_checked", report.pairs_checked},
          {"worst_excess", report.worst_excess},
          {"violations", std::move(violations)}};
}

Json modulus_json(const MetricGraph& g, const ModulusReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"x", point_json(g, v.x)},
                          {"y", g.vertex(v.y).name},
                          {"distance", v.distance},
                          {"gap", v.gap},
                          {"bound", v.bound},
                          {"two_sided", v.two_sided}});
  }
  return {{"mode", "modulus"},
          {"pass", report.pass},
          {"lipschitz", report.lipschitz},
          {"sup_f", report.sup_f},
          {"compatible", report.compatible},
          {"pairs", report.pairs},
          {"violations", std::move(violations)}};
}

std::vector<Curve> parse_curves(const LocatedJson& doc, const MetricGraph& g) {
  const Json& cs = array_member(doc, doc.doc, "", "curves");
  std::vector<Curve> curves;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = child("/curves", i);
    const Json& pts = array_member(doc, cs[i], p, "points");
    if (pts.empty()) doc.fail(child(p, "points"), "curve needs at least one point");
    std::vector<GraphPoint> points;
    for (std::size_t k = 0; k < pts.size(); ++k) points.push_back(parse_point(doc, child(child(p, "points"), k), g));
    try {
      curves.push_back(Curve::through(g, points));
    } catch (const Error& err) {
      doc.fail(p, err.what());
    }
  }
  return curves;
}

void write_edge_csv(std::ostream& os, const GraphFunction& u, EdgeId e, std::size_t samples) {
  const MetricGraph& g = u.graph();
  os << "offset,u\n";
  for (double s : uniform_knots(g.edge(e).length, samples)) {
    os << csv_number(s) << ',' << csv_number(u.value(GraphPoint::on_edge(g, e, s))) << '\n';
  }
}

void write_monge_csv(std::ostream& os, const MetricGraph& g, const MongeReport& report) {
  os << "point,sub_slope,f_low,f_high,residual\n";
  for (const MongeSample& s : report.samples) {
    os << describe(g, s.point) << ',' << csv_number(s.estimate.sub_slope) << ',' << csv_number(s.f_low) << ','
       << csv_number(s.f_high) << ',' << csv_number(s.residual) << '\n';
  }
}

std::vector<std::vector<double>> parse_csv_numbers(const std::string& content, const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::string t = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      char* end = nullptr;
      const double v = std::strtod(t.c_str(), &end);
      if (t.empty() || *end != '\0' || std::isnan(v)) {
        throw Error(Errc::parse, source + ":" + std::to_string(lineno) + ": not a number: '" + t + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eikonal::io
