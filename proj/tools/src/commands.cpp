#include "tamejumps_cli/commands.hpp"

#include "tamejumps/dvrlin.hpp"
#include "tamejumps/error.hpp"
#include "tamejumps/polyparse.hpp"
#include "tamejumps/regularity.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tamejumps::cli {

namespace {

Json point_json(const LatticePoint& p) { return Json::array({p.i, p.j}); }

Json points_json(const std::vector<LatticePoint>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(point_json(p));
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string equation_text(const Request& req) {
  if (!req.poly.empty()) return req.poly;
  if (!req.input) throw Error(Errc::kParseError, "no polynomial given (use --poly or --input)");
  std::ifstream in(*req.input);
  if (!in) throw Error(Errc::kParseError, "cannot read " + *req.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return trim(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

const RegularityItem* find_item(const RegularityVerdict& v, const std::string& id) {
  for (const auto& item : v.items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

int exit_for(const JumpsReport& r) { return r.conditional ? kExitConditional : kExitOk; }

template <typename F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {kExitError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitError, "", std::string("error: ") + e.what() + "\n"};
  }
}

std::string summary(const JumpsReport& r) {
  std::string out = "genus " + std::to_string(r.genus) + ", jumps {";
  bool first = true;
  for (const auto& e : r.jumps) {
    for (std::int64_t k = 0; k < e.multiplicity; ++k) {
      out += (first ? "" : ", ") + to_string(e.value);
      first = false;
    }
  }
  out += "}, stabilisation index " + std::to_string(r.stabilisation_index) + ", regularity " +
         to_string(r.regularity.overall) + "\n";
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

// Writes JSON to the requested file (printing a summary) or to stdout.
Outcome emit(const Request& req, const Json& doc, const JumpsReport& r) {
  Outcome o;
  o.exit_code = exit_for(r);
  std::string text = doc.dump(2) + "\n";
  if (req.json_path) {
    write_file(*req.json_path, text);
    if (!req.quiet) o.out = summary(r);
  } else {
    o.out = text;
  }
  if (req.svg_path) write_file(*req.svg_path, render_svg(r.subdivision));
  return o;
}

}  // namespace

Json report_json(const std::string& input, const BivariatePoly& f, std::uint32_t p, const JumpsReport& r) {
  const auto& sd = r.subdivision;
  Json doc;
  doc["input"] = input;
  doc["prime"] = p;
  doc["genus"] = r.genus;
  doc["polygon"] = {{"vertices", points_json(sd.polygon.vertices())}};

  Json faces = Json::array();
  for (const auto& face : sd.faces) {
    const RegularityItem* item = find_item(r.regularity, face.id());
    faces.push_back({{"vertices", points_json(face.polygon.vertices())},
                     {"affine", {{"a", to_string(face.affine.a)}, {"b", to_string(face.affine.b)}, {"c", to_string(face.affine.c)}}},
                     {"delta", face.delta},
                     {"residue_poly", residue_face_poly(f, sd, face).to_string()},
                     {"regular", item && item->status == Status::kPass}});
  }
  doc["faces"] = faces;

  Json edges = Json::array();
  for (const auto& e : sd.vedges) {
    const RegularityItem* item = find_item(r.regularity, e.id());
    edges.push_back({{"endpoints", points_json(e.polygon.vertices())},
                     {"residue_poly", residue_edge_poly(f, sd, e).to_string("t")},
                     {"regular", item && item->status == Status::kPass}});
  }
  doc["vedges"] = edges;

  Json pts = Json::array();
  for (const auto& pv : r.per_point) {
    pts.push_back({{"point", point_json(pv.point)}, {"v", to_string(pv.v)}, {"vcan", to_string(pv.vcan)}});
  }
  doc["interior_points"] = pts;

  Json js = Json::array();
  for (const auto& e : r.jumps) js.push_back(Json::array({to_string(e.value), e.multiplicity}));
  doc["jumps"] = js;
  doc["stabilisation_index"] = r.stabilisation_index;
  doc["regular"] = to_string(r.regularity.overall);
  doc["conditional"] = r.conditional;
  doc["warnings"] = r.warnings;
  doc["assumptions"] = r.assumptions;

  Json checks = Json::array();
  for (const auto& item : r.regularity.items) {
    Json c = {{"id", item.id}, {"check", item.check}, {"status", to_string(item.status)}};
    if (item.witness) {
      c["witness"] = {{"x", item.witness->x.to_string()},
                      {"y", item.witness->y.to_string()},
                      {"field", item.witness->x.field().name()},
                      {"degree", item.witness->degree}};
    }
    checks.push_back(c);
  }
  doc["checks"] = checks;
  return doc;
}

Outcome cmd_analyze(const Request& req) {
  return guarded([&] {
    require_prime(req.prime);
    const std::string text = equation_text(req);
    const BivariatePoly f = parse_poly(text);
    const JumpsReport r = jumps(f, req.prime);
    return emit(req, report_json(text, f, req.prime, r), r);
  });
}

Outcome cmd_vcan(const Request& req) {
  return guarded([&] {
    require_prime(req.prime);
    const BivariatePoly f = parse_poly(equation_text(req));
    const CanonicalForm form = parse_form(req.form.empty() ? "0" : req.form);
    const JumpsReport r = jumps(f, req.prime);
    Outcome o;
    o.out = to_string(vcan_form(r.subdivision, form)) + "\n";
    o.exit_code = exit_for(r);
    if (!req.quiet) {
      for (const auto& w : r.warnings) o.err += "warning: " + w + "\n";
    }
    return o;
  });
}

Outcome cmd_basechange(const Request& req) {
  return guarded([&] {
    require_prime(req.prime);
    if (!req.degree) throw Error(Errc::kInvalidDegree, "--degree is required");
    const std::int64_t d = *req.degree;
    if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive, got " + std::to_string(d));
    const std::string text = equation_text(req);
    const BivariatePoly f = parse_poly(text);
    JumpsReport r = jumps(f, req.prime);
    if (std::gcd(d, r.stabilisation_index) != 1) {
      r.warnings.push_back("degree " + std::to_string(d) + " is not coprime to the stabilisation index");
    }
    if (d % static_cast<std::int64_t>(req.prime) == 0) {
      r.warnings.push_back("degree " + std::to_string(d) + " is divisible by p: the extension is not tame");
    }
    Json doc = report_json(text, f, req.prime, r);
    doc["degree"] = d;
    Json rel = Json::array();
    for (const auto& x : relative_jumps(r, d)) rel.push_back(to_string(x));
    doc["relative_jumps"] = rel;
    // basis forms rescaled by powers of p so that v_can lies in (-1, 0]
    std::vector<Rat> normalised;
    for (const auto& pv : r.per_point) normalised.push_back(-frac_part(pv.v));
    doc["lattice_exponents"] = lattice_exponents(normalised, d);
    const SubdividedPolygon scaled = base_change(f, req.prime, d);
    Json sv = Json::array();
    for (const auto& pv : r.per_point) {
      sv.push_back({{"point", point_json(pv.point)}, {"v", to_string(v_eval(scaled, pv.point))}});
    }
    doc["scaled_v"] = sv;
    return emit(req, doc, r);
  });
}

Outcome cmd_svg(const Request& req) {
  return guarded([&] {
    require_prime(req.prime);
    const BivariatePoly f = parse_poly(equation_text(req));
    const SubdividedPolygon sd = subdivide(f, req.prime);
    std::string svg = render_svg(sd);
    Outcome o;
    if (req.svg_path) {
      write_file(*req.svg_path, svg);
      if (!req.quiet) o.out = "wrote " + *req.svg_path + "\n";
    } else {
      o.out = svg;
    }
    return o;
  });
}

std::string render_svg(const SubdividedPolygon& sd) {
  constexpr std::int64_t kUnit = 40;
  constexpr std::int64_t kMargin = 20;
  const auto pts = sd.polygon.lattice_points();
  std::int64_t min_i = pts.front().i, max_i = min_i, min_j = pts.front().j, max_j = min_j;
  for (const auto& p : pts) {
    min_i = std::min(min_i, p.i);
    max_i = std::max(max_i, p.i);
    min_j = std::min(min_j, p.j);
    max_j = std::max(max_j, p.j);
  }
  auto px = [&](std::int64_t i) { return kMargin + kUnit * (i - min_i); };
  auto py = [&](std::int64_t j) { return kMargin + kUnit * (max_j - j); };
  const std::int64_t width = 2 * kMargin + kUnit * (max_i - min_i) + kUnit;  // room for labels
  const std::int64_t height = 2 * kMargin + kUnit * (max_j - min_j);

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<polygon class=\"outline\" points=\"";
  bool first = true;
  for (const auto& v : sd.polygon.vertices()) {
    s << (first ? "" : " ") << px(v.i) << "," << py(v.j);
    first = false;
  }
  s << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& e : sd.vedges) {
    if (e.boundary) continue;
    const auto& a = e.polygon.vertices().front();
    const auto& b = e.polygon.vertices().back();
    s << "<line class=\"subdivision\" x1=\"" << px(a.i) << "\" y1=\"" << py(a.j) << "\" x2=\"" << px(b.i) << "\" y2=\""
      << py(b.j) << "\" stroke=\"black\" stroke-dasharray=\"4,3\"/>\n";
  }
  for (const auto& p : pts) {
    const bool inside = sd.polygon.strictly_inside(p);
    s << "<circle class=\"" << (inside ? "interior" : "point") << "\" cx=\"" << px(p.i) << "\" cy=\"" << py(p.j)
      << "\" r=\"" << (inside ? 4 : 3) << "\" fill=\"" << (inside ? "white" : "black")
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << px(p.i) + 5 << "\" y=\"" << py(p.j) - 5 << "\" font-size=\"11\">" << to_string(v_eval(sd, p))
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tamejumps::cli
