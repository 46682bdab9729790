#include "specscale/report.hpp"

namespace specscale {
namespace {

Json vec3(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json point(const Point2& p) { return Json::array({p.x, p.y}); }

Json tan_json(const TanTheta& t) {
  if (t.infinite) return "inf";
  return t.value;
}

}  // namespace

Json to_json(const PencilSpectrum& spec) {
  Json finite = Json::array();
  for (const auto& z : spec.finite) finite.push_back(Json::array({z.real(), z.imag()}));
  Json reals = Json::array();
  for (std::size_t i = 0; i < spec.real_subset.size(); ++i) {
    reals.push_back({{"value", spec.real_subset[i]}, {"multiplicity", spec.real_multiplicity[i]}});
  }
  return {{"method", to_string(spec.method)},
          {"regular", spec.regular},
          {"has_infinity", spec.has_infinity},
          {"finite", std::move(finite)},
          {"real_subset", std::move(reals)}};
}

Json to_json(const FaceDescriptor& face) {
  Json j{{"u", vec3(face.u)},
         {"base", vec3(face.base)},
         {"x_extent", face.x_extent},
         {"dimension", face.dimension}};
  j["t"] = face.t ? Json::array({face.t->t1(), face.t->t2()}) : Json(nullptr);
  j["tan_theta"] = face.tan_theta ? tan_json(*face.tan_theta) : Json(nullptr);
  return j;
}

Json to_json(const HorizontalFaceReport& rep) {
  Json faces = Json::array();
  for (const auto& f : rep.faces) faces.push_back(to_json(f));
  Json matched = Json::array();
  for (const auto& m : rep.matched) {
    matched.push_back({{"tan_theta", tan_json(*m.face.tan_theta)},
                       {"root", tan_json(m.root)},
                       {"x_extent", m.face.x_extent},
                       {"dimension", m.face.dimension}});
  }
  Json uf = Json::array();
  for (const auto& f : rep.unmatched_faces) uf.push_back(to_json(f));
  Json ur = Json::array();
  for (const auto& r : rep.unmatched_roots) ur.push_back(tan_json(r));
  return {{"pencil_reals", rep.pencil_reals},
          {"pencil_infinity", rep.pencil_infinity},
          {"faces", std::move(faces)},
          {"matched", std::move(matched)},
          {"unmatched_faces", std::move(uf)},
          {"unmatched_roots", std::move(ur)}};
}

Json to_json(const ScalePolygon2D& poly) {
  Json lower = Json::array();
  for (const auto& p : poly.lower_vertices) lower.push_back(point(p));
  Json upper = Json::array();
  for (const auto& p : poly.upper_vertices) upper.push_back(point(p));
  return {{"lower_vertices", std::move(lower)},
          {"upper_vertices", std::move(upper)},
          {"segment_slopes", poly.segment_slopes},
          {"upper_slopes", poly.upper_slopes}};
}

Json to_json(const std::vector<Segment2D>& segments) {
  Json out = Json::array();
  for (const auto& s : segments) {
    out.push_back({{"chain", s.chain == Chain::lower ? "lower" : "upper"},
                   {"from", point(s.from)},
                   {"to", point(s.to)},
                   {"slope", s.slope}});
  }
  return out;
}

Json to_json(const ScaleBody3D& body) {
  Json verts = Json::array();
  for (const auto& v : body.hull_vertices) verts.push_back(vec3(v));
  Json tris = Json::array();
  for (const auto& t : body.hull_triangles) tris.push_back(Json::array({t[0], t[1], t[2]}));
  return {{"directions", body.samples.size()},
          {"affine_dimension", body.affine_dimension},
          {"hull_vertices", std::move(verts)},
          {"hull_triangles", std::move(tris)}};
}

Json to_json(const VerificationReport& rep) {
  Json details = Json::array();
  for (const auto& d : rep.details) {
    details.push_back({{"name", d.name},
                       {"applicable", d.applicable},
                       {"passed", d.passed},
                       {"residual", d.residual},
                       {"tolerance", d.tolerance},
                       {"note", d.note}});
  }
  Json j{{"subject", to_string(rep.subject)},
         {"passed", rep.passed},
         {"applicable", rep.applicable},
         {"max_residual", rep.max_residual}};
  j["seed"] = rep.seed ? Json(*rep.seed) : Json(nullptr);
  j["details"] = std::move(details);
  return j;
}

Json make_report(std::string_view command, std::string_view input_digest, Json tolerances,
                 Json payload) {
  return {{"tool", "specscale"},
          {"version", std::string(kToolVersion)},
          {"command", std::string(command)},
          {"input_digest", input_digest.empty() ? Json(nullptr) : Json(std::string(input_digest))},
          {"tolerances", std::move(tolerances)},
          {"payload", std::move(payload)}};
}

}  // namespace specscale
