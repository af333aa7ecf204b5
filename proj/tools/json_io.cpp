#include "json_io.hpp"

#include <cmath>
#include <sstream>

namespace lorcal::io {

namespace {

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw InputError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(field, "expected a finite number");
  return v;
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(field + "." + key, "missing");
  return *it;
}

}  // namespace

json parse_text(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field, std::string("invalid JSON (") + e.what() + ")");
  }
}

Vec3 parse_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw InputError(field, "expected an array of 3 numbers");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]"), number(j[2], field + "[2]")};
}

Vec3 parse_vec3_csv(const std::string& text, const std::string& field) {
  std::stringstream ss(text);
  std::string item;
  Vec3 v;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 3) throw InputError(field, "expected x,y,z");
    try {
      std::size_t used = 0;
      v(n) = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v(n))) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(field, "component '" + item + "' is not a number");
    }
    ++n;
  }
  if (n != 3) throw InputError(field, "expected x,y,z");
  return v;
}

SkewOp parse_skew(const json& j, const std::string& field) {
  return {parse_vec3(member(j, "E", field), field + ".E"), parse_vec3(member(j, "B", field), field + ".B")};
}

ChiralOp parse_chiral(const json& j, const std::string& field) {
  const Vec3 re = parse_vec3(member(j, "A_re", field), field + ".A_re");
  const Vec3 im = parse_vec3(member(j, "A_im", field), field + ".A_im");
  const json& ch = member(j, "chirality", field);
  if (!ch.is_string() || (ch != "c" && ch != "cbar"))
    throw InputError(field + ".chirality", "expected \"c\" or \"cbar\"");
  return {re.cast<cplx>() + kI * im.cast<cplx>(), ch == "c" ? Chirality::C : Chirality::CBar};
}

std::variant<SkewOp, ChiralOp> parse_operator(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("A_re")) return parse_chiral(j, field);
  return parse_skew(j, field);
}

Mat4 parse_mat4(const json& j, const std::string& field) {
  if (j.is_object()) return parse_mat4(member(j, "matrix", field), field + ".matrix");
  if (!j.is_array() || j.size() != 4) throw InputError(field, "expected a 4x4 array");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const std::string row = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != 4) throw InputError(row, "expected 4 numbers");
    for (int c = 0; c < 4; ++c) m(r, c) = number(j[r][c], row + "[" + std::to_string(c) + "]");
  }
  return m;
}

json to_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

json to_json(const Vec4& v) { return json::array({v(0), v(1), v(2), v(3)}); }

json to_json(const SkewOp& f) { return {{"E", to_json(f.E)}, {"B", to_json(f.B)}}; }

json to_json(const ChiralOp& x) {
  return {{"A_re", to_json(Vec3(x.A.real()))},
          {"A_im", to_json(Vec3(x.A.imag()))},
          {"chirality", x.chirality == Chirality::C ? "c" : "cbar"}};
}

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Vec4C& v) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < 4; ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

json to_json(const Mat4& m) { return to_json(Eigen::MatrixXd(m)); }

json to_json(const Mat4C& m) { return {{"re", to_json(Mat4(m.real()))}, {"im", to_json(Mat4(m.imag()))}}; }

}  // namespace lorcal::io
