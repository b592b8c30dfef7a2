#include "scherk/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scherk/analysis.hpp"

namespace scherk {

using nlohmann::json;

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::InvalidInput, std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, std::string("non-finite value for ") + what);
  return v;
}

json cjson(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }
json vjson(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

void write_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  out += buf;
}

void write(std::string& out, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        write(out, it.value(), indent, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(out, j[i], indent, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float:
      write_double(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

Input parse_input_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "input must be a JSON object");
  Input in;
  if (j.contains("vertices")) {
    const json& v = j["vertices"];
    if (!v.is_array() || v.size() != 4) throw Error(ErrorCode::InvalidInput, "\"vertices\" must hold four [x, y] pairs");
    std::array<cplx, 4> b;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!v[i].is_array() || v[i].size() != 2) throw Error(ErrorCode::InvalidInput, "each vertex must be [x, y]");
      b[i] = {number(v[i][0], "vertex x"), number(v[i][1], "vertex y")};
    }
    in.vertices = b;
  } else if (j.contains("m") && j.contains("s") && j.contains("t")) {
    in.params = std::array<double, 3>{number(j["m"], "m"), number(j["s"], "s"), number(j["t"], "t")};
  } else {
    throw Error(ErrorCode::InvalidInput, "input needs \"vertices\" or all of \"m\", \"s\", \"t\"");
  }
  return in;
}

Input parse_params_flag(const std::string& text) {
  std::array<double, 3> p{};
  std::istringstream ss(text);
  std::string field;
  int n = 0;
  while (std::getline(ss, field, ',')) {
    if (n == 3) throw Error(ErrorCode::InvalidInput, "--params takes exactly three numbers m,s,t");
    std::size_t used = 0;
    try {
      p[n] = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size() || !std::isfinite(p[n]))
      throw Error(ErrorCode::InvalidInput, "cannot parse '" + field + "' in --params");
    ++n;
  }
  if (n != 3) throw Error(ErrorCode::InvalidInput, "--params takes exactly three numbers m,s,t");
  Input in;
  in.params = p;
  return in;
}

Input read_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input_json(ss.str());
}

ScherkSurface build_surface(const Input& input, double tol_pitot) {
  if (input.vertices) return ScherkSurface::from_vertices(*input.vertices, tol_pitot);
  if (input.params) {
    const auto [m, s, t] = *input.params;
    return ScherkSurface::from_params(m, s, t);
  }
  throw Error(ErrorCode::InvalidInput, "no input given");
}

json input_echo(const Input& input) {
  if (input.vertices) {
    json v = json::array();
    for (const cplx& b : *input.vertices) v.push_back(json::array({b.real(), b.imag()}));
    return json{{"vertices", v}};
  }
  if (input.params) return json{{"m", (*input.params)[0]}, {"s", (*input.params)[1]}, {"t", (*input.params)[2]}};
  return nullptr;
}

json analysis_report(const ScherkSurface& s, const Input& input, const std::vector<Check>& checks) {
  const auto& c = s.coords;
  const auto& d = s.data;
  json r;
  r["input"] = input_echo(input);

  json quad = json::array();
  for (const cplx& b : s.quad.b) quad.push_back(cjson(b));
  r["quadrilateral"] = {{"vertices", quad},
                        {"pitot_residual", s.quad.pitot_residual},
                        {"perimeter", s.quad.perimeter},
                        {"reversed", s.quad.reversed}};
  r["normalization"] = {{"scale", cjson(s.frame.to_normalized.scale)},
                        {"shift", cjson(s.frame.to_normalized.shift)},
                        {"label_shift", s.frame.label_shift},
                        {"z", cjson(s.frame.z)},
                        {"w", cjson(s.frame.w)}};
  r["coordinates"] = {{"m", c.m}, {"s", c.s}, {"t", c.t}, {"j", c.j}, {"k", c.k}};
  r["p"] = d.p;
  r["z0"] = cjson(d.z0);
  r["X"] = cjson(d.X);
  r["sqrtX"] = cjson(d.sqrtX);

  json logc = json::array();
  for (double v : s.kernel.log_constants) logc.push_back(v);
  json res = json::array();
  for (const cplx& v : s.kernel.residues) res.push_back(cjson(v));
  r["constants"] = {{"B", cjson(d.B)}, {"Z", cjson(d.Z)},       {"A", cjson(d.A)},
                    {"C", cjson(d.C)}, {"Lambda", s.kernel.lambda}, {"C_k", logc},
                    {"residues", res}};
  r["c0"] = cjson(harmonic_center(d, s.frame));
  r["c0_normalized"] = cjson(harmonic_center_normalized(d));

  const double L = std::abs(s.frame.from_normalized.scale);
  json center;
  center["curvature_normalized"] = gauss_curvature(0.0, d);
  center["curvature"] = gauss_curvature(0.0, d) / (L * L);
  center["curvature_bound"] = curvature_bound(s.quad);
  center["normal_normalized"] = vjson(center_normal(c));
  center["normal"] = vjson(denormalize_normal(center_normal(c), s.frame));
  center["gauss_sphere_point"] = vjson(center_gauss_sphere_point(c));
  center["mixed_derivative_normalized"] = center_mixed_derivative(c);
  try {
    center["alignment_angle"] = aligning_rotation(c);
  } catch (const Error&) {
    center["alignment_angle"] = nullptr;
  }
  r["center"] = center;

  json table = json::array();
  for (const auto& ch : checks)
    table.push_back({{"name", ch.name}, {"residual", ch.residual}, {"tol", ch.tol}, {"passed", ch.passed}});
  r["verification"] = {{"checks", table}, {"all_passed", all_passed(checks)}};
  return r;
}

std::string dump_deterministic(const json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  out += '\n';
  return out;
}

}  // namespace scherk
