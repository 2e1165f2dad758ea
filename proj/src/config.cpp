#include "config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace critscale {

namespace {

using nlohmann::json;

Mat parse_matrix(const json& j, const std::string& name) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorCode::ParseError, name + ": expected an array of rows");
  const size_t rows = j.size();
  const size_t cols = j[0].size();
  Mat M(static_cast<int>(rows), static_cast<int>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorCode::ParseError, name + ": ragged rows");
    for (size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw Error(ErrorCode::ParseError, name + ": non-numeric entry");
      M(static_cast<int>(r), static_cast<int>(c)) = j[r][c].get<double>();
    }
  }
  return M;
}

Vec parse_vector(const json& j, const std::string& name) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, name + ": expected an array");
  Vec v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(ErrorCode::ParseError, name + ": non-numeric entry");
    v(static_cast<int>(i)) = j[i].get<double>();
  }
  return v;
}

ConvexSet parse_set(const json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("type"))
    throw Error(ErrorCode::ParseError, name + ": expected a set descriptor with a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "box") {
    return ConvexSet::box(parse_vector(j.at("lower"), name + ".lower"),
                          parse_vector(j.at("upper"), name + ".upper"));
  }
  if (type == "vpoly") {
    const json& vj = j.at("vertices");
    if (!vj.is_array() || vj.empty())
      throw Error(ErrorCode::ParseError, name + ".vertices: expected a nonempty array");
    std::vector<Vec> verts;
    for (size_t i = 0; i < vj.size(); ++i)
      verts.push_back(parse_vector(vj[i], name + ".vertices[" + std::to_string(i) + "]"));
    return ConvexSet::vpolytope(std::move(verts));
  }
  if (type == "hpoly") {
    return ConvexSet::hpolytope(parse_matrix(j.at("F"), name + ".F"),
                                parse_vector(j.at("g"), name + ".g"));
  }
  throw Error(ErrorCode::ParseError, name + ": unknown set type '" + type + "'");
}

json matrix_to_json(const Mat& M) {
  json rows = json::array();
  for (int r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json set_to_json(const ConvexSet& s) {
  json out;
  switch (s.kind()) {
    case SetKind::Box:
      out["type"] = "box";
      out["lower"] = vector_to_json(s.lower());
      out["upper"] = vector_to_json(s.upper());
      break;
    case SetKind::VPolytope: {
      out["type"] = "vpoly";
      json vs = json::array();
      for (const Vec& v : s.vertex_list()) vs.push_back(vector_to_json(v));
      out["vertices"] = vs;
      break;
    }
    case SetKind::HPolytope:
      out["type"] = "hpoly";
      out["F"] = matrix_to_json(s.F());
      out["g"] = vector_to_json(s.g());
      break;
  }
  return out;
}

}  // namespace

AnalysisConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("system"))
    throw Error(ErrorCode::ParseError, "config: missing 'system'");
  const json& sys = j.at("system");
  for (const char* key : {"A", "B", "X", "U", "Wbar"})
    if (!sys.contains(key))
      throw Error(ErrorCode::ParseError, std::string("config: system missing '") + key + "'");
  try {
    LinearSystem system(parse_matrix(sys.at("A"), "A"), parse_matrix(sys.at("B"), "B"),
                        parse_set(sys.at("X"), "X"), parse_set(sys.at("U"), "U"),
                        parse_set(sys.at("Wbar"), "Wbar"));
    AnalysisConfig cfg{std::move(system), std::nullopt, 15, 1e-4, 10.0};
    if (j.contains("jordan")) {
      std::vector<DeclaredBlock> decl;
      for (const json& d : j.at("jordan")) {
        if (!d.is_object() || !d.contains("eig") || !d.contains("size"))
          throw Error(ErrorCode::ParseError, "config: jordan entries need 'eig' and 'size'");
        decl.push_back({d.at("eig").get<double>(), d.at("size").get<int>()});
      }
      cfg.jordan = std::move(decl);
    }
    if (j.contains("k_max")) cfg.k_max = j.at("k_max").get<std::int64_t>();
    if (j.contains("alpha_tol")) cfg.alpha_tol = j.at("alpha_tol").get<double>();
    if (j.contains("alpha_hi")) cfg.alpha_hi = j.at("alpha_hi").get<double>();
    if (cfg.k_max < 1) throw Error(ErrorCode::ParseError, "config: k_max must be >= 1");
    if (cfg.alpha_tol <= 0) throw Error(ErrorCode::ParseError, "config: alpha_tol must be > 0");
    if (cfg.alpha_hi <= 0) throw Error(ErrorCode::ParseError, "config: alpha_hi must be > 0");
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const AnalysisConfig& config) {
  json j;
  j["system"]["A"] = matrix_to_json(config.system.A());
  j["system"]["B"] = matrix_to_json(config.system.B());
  j["system"]["X"] = set_to_json(config.system.X());
  j["system"]["U"] = set_to_json(config.system.U());
  j["system"]["Wbar"] = set_to_json(config.system.Wbar());
  if (config.jordan) {
    json decl = json::array();
    for (const DeclaredBlock& d : *config.jordan) decl.push_back({{"eig", d.eig}, {"size", d.size}});
    j["jordan"] = decl;
  }
  j["k_max"] = config.k_max;
  j["alpha_tol"] = config.alpha_tol;
  j["alpha_hi"] = config.alpha_hi;
  return j.dump(2);
}

}  // namespace critscale
