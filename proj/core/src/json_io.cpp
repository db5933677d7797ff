#include "apv/json_io.hpp"

#include <string>

#include "apv/error.hpp"

namespace apv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("JSON object is missing \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw DomainError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

Route route_from_name(const std::string& s) {
  if (s == "average") return Route::average;
  if (s == "upper") return Route::upper;
  if (s == "lower") return Route::lower;
  throw DomainError("unknown route \"" + s + "\"");
}

json optional_complex(const std::optional<complex>& z) {
  return z ? complex_to_json(*z) : json(nullptr);
}

std::optional<complex> optional_complex_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return complex_from_json(j);
}

}  // namespace

json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw DomainError("complex value must be [re, im], got " + j.dump());
}

json path_to_json(const ComplexPath& path) {
  json segs = json::array();
  for (const auto& seg : path.segments()) {
    segs.push_back(std::visit(
        overloaded{[](const Line& l) {
                     return json{{"type", "line"},
                                 {"from", complex_to_json(l.from)},
                                 {"to", complex_to_json(l.to)}};
                   },
                   [](const Arc& a) {
                     return json{{"type", "arc"},
                                 {"center", complex_to_json(a.center)},
                                 {"radius", a.radius},
                                 {"theta_start", a.theta_start},
                                 {"theta_end", a.theta_end}};
                   }},
        seg));
  }
  return json{{"side", std::string(side_name(path.side()))}, {"segments", segs}};
}

ComplexPath path_from_json(const json& j) {
  const json& side = field(j, "side");
  if (!side.is_string()) throw DomainError("\"side\" must be a string");
  const json& segs = field(j, "segments");
  if (!segs.is_array()) throw DomainError("\"segments\" must be an array");
  std::vector<Segment> out;
  for (const auto& s : segs) {
    const json& type = field(s, "type");
    if (type == "line") {
      out.emplace_back(Line{complex_from_json(field(s, "from")), complex_from_json(field(s, "to"))});
    } else if (type == "arc") {
      out.emplace_back(Arc{complex_from_json(field(s, "center")), number(s, "radius"),
                           number(s, "theta_start"), number(s, "theta_end")});
    } else {
      throw DomainError("unknown segment type " + type.dump());
    }
  }
  return ComplexPath(std::move(out), side_from_name(side.get<std::string>()));
}

json report_to_json(const ApvReport& r) {
  return json{{"value", r.value},
              {"imag_residual", r.imag_residual},
              {"int_plus", optional_complex(r.int_plus)},
              {"int_minus", optional_complex(r.int_minus)},
              {"residue_term", complex_to_json(r.residue_term)},
              {"route", std::string(route_name(r.route))},
              {"err_estimate", r.err_estimate},
              {"evals", r.evals}};
}

ApvReport report_from_json(const json& j) {
  ApvReport r;
  r.value = number(j, "value");
  r.imag_residual = number(j, "imag_residual");
  r.int_plus = optional_complex_from(field(j, "int_plus"));
  r.int_minus = optional_complex_from(field(j, "int_minus"));
  r.residue_term = complex_from_json(field(j, "residue_term"));
  const json& route = field(j, "route");
  if (!route.is_string()) throw DomainError("\"route\" must be a string");
  r.route = route_from_name(route.get<std::string>());
  r.err_estimate = number(j, "err_estimate");
  r.evals = field(j, "evals").get<long>();
  return r;
}

json boundary_to_json(const BoundaryReport& r) {
  json samples = json::array();
  for (const auto& s : r.y_samples) {
    samples.push_back(json{{"y", s.y}, {"plus", complex_to_json(s.plus)},
                           {"minus", complex_to_json(s.minus)}});
  }
  return json{{"phi_plus", complex_to_json(r.phi_plus)},
              {"phi_minus", complex_to_json(r.phi_minus)},
              {"extrapolation_err", r.extrapolation_err},
              {"diverged", r.diverged},
              {"evals", r.evals},
              {"y_samples", samples}};
}

BoundaryReport boundary_from_json(const json& j) {
  BoundaryReport r;
  r.phi_plus = complex_from_json(field(j, "phi_plus"));
  r.phi_minus = complex_from_json(field(j, "phi_minus"));
  r.extrapolation_err = number(j, "extrapolation_err");
  r.diverged = field(j, "diverged").get<bool>();
  r.evals = field(j, "evals").get<long>();
  for (const auto& s : field(j, "y_samples")) {
    r.y_samples.push_back(
        {number(s, "y"), complex_from_json(field(s, "plus")), complex_from_json(field(s, "minus"))});
  }
  return r;
}

}  // namespace apv
