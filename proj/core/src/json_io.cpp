#include "twistrim/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace twistrim {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("json schema: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing '") + key + "'");
  return j.at(key);
}

Pi1Kind pi1_kind_from(const std::string& s) {
  if (s == "cyclic") return Pi1Kind::CyclicOfOrder;
  if (s == "finite") return Pi1Kind::FiniteOfOrder;
  if (s == "undetermined") return Pi1Kind::Undetermined;
  schema_error("pi1 kind '" + s + "'");
}

Pi1Certificate certificate_from(const std::string& s) {
  if (s == "theorem") return Pi1Certificate::Theorem;
  if (s == "coset-enumeration") return Pi1Certificate::CosetEnumeration;
  if (s == "none") return Pi1Certificate::None;
  schema_error("certificate '" + s + "'");
}

TopologicalKind topological_from(const std::string& s) {
  if (s == "yes") return TopologicalKind::Yes;
  if (s == "no") return TopologicalKind::No;
  if (s == "unknown") return TopologicalKind::Unknown;
  schema_error("topological verdict '" + s + "'");
}

}  // namespace

Json integer_to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t()) && sizeof(long) == sizeof(std::int64_t))
    return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) schema_error("bad integer string");
    return out;
  }
  schema_error("expected an integer");
}

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return Json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly poly_from_json(const Json& j) {
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) schema_error("coeffs must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : cs) coeffs.push_back(integer_from_json(c));
  return LaurentPoly(field(j, "min_exp").get<std::int64_t>(), std::move(coeffs));
}

Json to_json(const GroupPresentation& p) {
  return Json{{"generators", p.generators}, {"relators", p.relators}, {"meridian", p.meridian}};
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation p;
  try {
    p.generators = field(j, "generators").get<std::vector<std::string>>();
    p.relators = field(j, "relators").get<std::vector<Word>>();
    p.meridian = field(j, "meridian").get<int>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  p.validate();
  return p;
}

Json to_json(const AbelianInvariants& a) {
  Json torsion = Json::array();
  for (const auto& t : a.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}, {"text", a.to_string()}};
}

AbelianInvariants abelian_from_json(const Json& j) {
  AbelianInvariants a;
  a.free_rank = field(j, "free_rank").get<int>();
  for (const auto& t : field(j, "torsion")) a.torsion.push_back(integer_from_json(t));
  return a;
}

Json to_json(const CoverOrder& o) {
  if (o.infinite) return Json{{"infinite", true}};
  return Json{{"order", integer_to_json(o.order)}};
}

CoverOrder cover_order_from_json(const Json& j) {
  if (j.is_object() && j.contains("infinite") && j.at("infinite").get<bool>())
    return CoverOrder::unbounded();
  return CoverOrder::finite(integer_from_json(field(j, "order")));
}

Json to_json(const Pi1Verdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  if (v.kind != Pi1Kind::Undetermined) j["order"] = v.order;
  j["certificate"] = to_string(v.certificate);
  return j;
}

Pi1Verdict pi1_from_json(const Json& j) {
  Pi1Verdict v;
  v.kind = pi1_kind_from(field(j, "kind").get<std::string>());
  if (v.kind != Pi1Kind::Undetermined) v.order = field(j, "order").get<std::size_t>();
  v.certificate = certificate_from(field(j, "certificate").get<std::string>());
  return v;
}

Json to_json(const SurgeryReport& r) {
  Json j;
  j["knot"] = render(r.knot);
  j["d"] = r.params.d;
  j["m"] = r.params.m;
  j["sw_nontrivial"] = r.params.sw_nontrivial;
  j["alexander"] = to_json(r.alexander);
  j["alexander"]["text"] = r.alexander.to_string();
  j["pi1"] = to_json(r.pi1);
  j["pi1_obstruction"] = r.pi1_obstruction;
  j["smoothly_knotted"] = {{"verdict", r.smoothly_knotted.knotted ? "yes" : "no-evidence"},
                           {"reason", r.smoothly_knotted.reason}};
  Json top{{"verdict", to_string(r.topologically_standard.kind)},
           {"reason", r.topologically_standard.reason}};
  if (!r.topologically_standard.failed.empty()) top["failed"] = r.topologically_standard.failed;
  j["topologically_standard"] = std::move(top);
  j["branched_cover"] = to_json(r.branched_cover);
  j["ribbon"] = r.ribbon == RibbonCertificate::Certified ? "certified" : "unknown";
  if (r.params.cp2_degree) {
    Json cp2{{"degree", *r.params.cp2_degree}};
    if (r.cp2_genus) cp2["genus"] = *r.cp2_genus;
    j["cp2"] = std::move(cp2);
  }
  return j;
}

SurgeryReport report_from_json(const Json& j) {
  SurgeryReport r;
  try {
    r.knot = parse_knot(field(j, "knot").get<std::string>());
    r.params.d = field(j, "d").get<int>();
    r.params.m = field(j, "m").get<long>();
    if (j.contains("sw_nontrivial")) r.params.sw_nontrivial = j.at("sw_nontrivial").get<bool>();
    if (j.contains("cp2")) {
      const Json& cp2 = j.at("cp2");
      r.params.cp2_degree = field(cp2, "degree").get<int>();
      if (cp2.contains("genus")) r.cp2_genus = cp2.at("genus").get<long>();
    }
    r.alexander = poly_from_json(field(j, "alexander"));
    r.pi1 = pi1_from_json(field(j, "pi1"));
    r.pi1_obstruction = field(j, "pi1_obstruction").get<bool>();
    const Json& smooth = field(j, "smoothly_knotted");
    const std::string sv = field(smooth, "verdict").get<std::string>();
    if (sv != "yes" && sv != "no-evidence") schema_error("smoothly_knotted verdict '" + sv + "'");
    r.smoothly_knotted.knotted = sv == "yes";
    r.smoothly_knotted.reason = field(smooth, "reason").get<std::string>();
    const Json& top = field(j, "topologically_standard");
    r.topologically_standard.kind = topological_from(field(top, "verdict").get<std::string>());
    r.topologically_standard.reason = field(top, "reason").get<std::string>();
    if (top.contains("failed"))
      r.topologically_standard.failed = top.at("failed").get<std::vector<std::string>>();
    r.branched_cover = cover_order_from_json(field(j, "branched_cover"));
    r.ribbon = field(j, "ribbon").get<std::string>() == "certified" ? RibbonCertificate::Certified
                                                                    : RibbonCertificate::Unknown;
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  return r;
}

}  // namespace twistrim
