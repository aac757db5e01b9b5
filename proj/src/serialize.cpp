#include "helixforge/serialize.hpp"

namespace helixforge {

namespace {

std::int64_t int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    raise(Errc::config_error, std::string("expected integer field '") + key + "'");
  return j[key].get<std::int64_t>();
}

}  // namespace

Json to_json(const GroupDescriptor& d) {
  Json j;
  if (d.backend() == Backend::cyclic) {
    j["backend"] = "cyclic";
    j["n"] = d.modulus();
  } else {
    j["backend"] = "weierstrass";
    j["p"] = d.prime();
    j["a"] = d.curve_a();
    j["b"] = d.curve_b();
  }
  return j;
}

GroupDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("backend") || !j["backend"].is_string())
    raise(Errc::config_error, "group descriptor must be an object with a 'backend' string");
  std::string backend = j["backend"].get<std::string>();
  if (backend == "cyclic") return GroupDescriptor::cyclic(int_field(j, "n"));
  if (backend == "weierstrass")
    return GroupDescriptor::weierstrass(int_field(j, "p"), int_field(j, "a"), int_field(j, "b"));
  raise(Errc::config_error, "unknown backend '" + backend + "'");
}

Json to_json(const GroupElement& g) {
  if (g.descriptor().backend() == Backend::cyclic) return g.residue_value();
  if (g.is_infinity()) return "inf";
  return Json::array({g.x(), g.y()});
}

GroupElement element_from_json(const Json& j, const GroupDescriptor& d) {
  if (d.backend() == Backend::cyclic) {
    if (!j.is_number_integer())
      raise(Errc::config_error, "cyclic element must be an integer, got " + j.dump());
    return GroupElement::residue(d, j.get<std::int64_t>());
  }
  if (j.is_string() && j.get<std::string>() == "inf") return GroupElement::infinity(d);
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return GroupElement::affine(d, j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  raise(Errc::config_error, "curve element must be \"inf\" or [x, y], got " + j.dump());
}

Json to_json(const DivisorClass& c) {
  Json j;
  j["degree"] = c.degree;
  j["sum"] = to_json(c.sum);
  return j;
}

DivisorClass class_from_json(const Json& j, const GroupDescriptor& d) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("sum"))
    raise(Errc::config_error, "divisor class must be an object with 'degree' and 'sum'");
  return {int_field(j, "degree"), element_from_json(j["sum"], d)};
}

Json to_json(const QuadraticHelixSpec& spec) {
  Json j;
  j["kind"] = "quadratic";
  j["L"] = to_json(spec.ell);
  j["psi"] = to_json(spec.psi.t);
  return j;
}

Json to_json(const CubicHelixSpec& spec) {
  Json j;
  j["kind"] = "cubic";
  j["L0"] = to_json(spec.ell0);
  j["L1"] = to_json(spec.ell1);
  j["alpha"] = to_json(spec.alpha.t);
  return j;
}

Json to_json(const GeometrySpec& g) {
  return std::visit([](const auto& s) { return to_json(s); }, g);
}

GeometrySpec geometry_from_json(const Json& j, const GroupDescriptor& d) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    raise(Errc::config_error, "geometry must be an object with a 'kind' string");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "quadratic") {
    if (!j.contains("L") || !j.contains("psi"))
      raise(Errc::config_error, "quadratic geometry needs fields 'L' and 'psi'");
    return QuadraticHelixSpec{class_from_json(j["L"], d),
                              Translation{element_from_json(j["psi"], d)}};
  }
  if (kind == "cubic") {
    if (!j.contains("L0") || !j.contains("L1") || !j.contains("alpha"))
      raise(Errc::config_error, "cubic geometry needs fields 'L0', 'L1' and 'alpha'");
    return CubicHelixSpec{class_from_json(j["L0"], d), class_from_json(j["L1"], d),
                          Translation{element_from_json(j["alpha"], d)}};
  }
  raise(Errc::config_error, "unknown geometry kind '" + kind + "'");
}

}  // namespace helixforge
