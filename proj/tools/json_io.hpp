#pragma once

// JSON encodings of operators and matrices for the command-line tool.
//   SkewOp:   {"E":[x,y,z],"B":[x,y,z]}
//   ChiralOp: {"A_re":[..],"A_im":[..],"chirality":"c"|"cbar"}
//   Vec4C:    {"re":[t,x,y,z],"im":[t,x,y,z]}
//   complex:  {"re":x,"im":y}
//   Mat4:     [[..],[..],[..],[..]] row-major; Mat4C as {"re":Mat4,"im":Mat4}

#include "lorcal/skew.hpp"
#include "lorcal/types.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace lorcal::io {

using json = nlohmann::json;

/// Malformed input; `field` names the offending JSON path or flag.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Parses text as JSON, reporting syntax errors against `field`.
json parse_text(const std::string& text, const std::string& field);

Vec3 parse_vec3(const json& j, const std::string& field);
/// "x,y,z" as used by em-field flags.
Vec3 parse_vec3_csv(const std::string& text, const std::string& field);
SkewOp parse_skew(const json& j, const std::string& field);
ChiralOp parse_chiral(const json& j, const std::string& field);
/// SkewOp or ChiralOp, decided by the presence of "A_re".
std::variant<SkewOp, ChiralOp> parse_operator(const json& j, const std::string& field);
/// A 4x4 array, or an object carrying one under "matrix".
Mat4 parse_mat4(const json& j, const std::string& field);

json to_json(const Vec3& v);
json to_json(const Vec4& v);
json to_json(const SkewOp& f);
json to_json(const ChiralOp& x);
json to_json(cplx z);
json to_json(const Vec4C& v);
json to_json(const Mat4& m);
json to_json(const Mat4C& m);
json to_json(const Eigen::MatrixXd& m);

}  // namespace lorcal::io
