#include "ktorbit_cli/report_record.hpp"

namespace ktorbit::cli {

namespace {

json point_json(const Point2<Rational>& p) { return json::array({to_json(p.u), to_json(p.v)}); }

json poly_json(const UnivariatePoly& p) {
  // Coefficients of s^0, s^1, s^2.
  return json::array({to_json(p.coefficient({0})), to_json(p.coefficient({1})), to_json(p.coefficient({2}))});
}

std::vector<std::string> surface_names(const SurfaceFlags& f) {
  std::vector<std::string> out;
  auto add = [&](bool flag, const char* name) {
    if (flag) out.emplace_back(name);
  };
  add(f.in_s1, "S1");
  add(f.in_s2, "S2");
  add(f.in_b1, "B1");
  add(f.in_b2, "B2");
  add(f.in_s3, "S3");
  add(f.in_s4_c1, "C1");
  add(f.in_s4_c2, "C2");
  add(f.in_s5, "S5");
  return out;
}

template <class T>
T field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("report is missing '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("report field '") + name + "': " + e.what());
  }
}

}  // namespace

json singular_set_to_json(const SingularSetDescription& d) {
  json out;
  out["kind"] = std::string(to_string(d.kind));
  if (d.signature == Signature::Euclidean) {
    if (d.center) {
      out["center"] = point_json(*d.center);
      out["hyperbola_p"] = to_json(d.hyperbola_p);
      out["hyperbola_q"] = to_json(d.hyperbola_q);
    }
    json exact = json::array();
    for (const auto& p : d.exact_points) exact.push_back(point_json(p));
    json approx = json::array();
    for (const auto& p : d.approx_points) approx.push_back(json::array({p.u, p.v}));
    out["points"] = exact;
    out["approx_points"] = approx;
  } else {
    out["factor_plus"] = poly_json(d.factor_plus);
    out["factor_minus"] = poly_json(d.factor_minus);
    out["plus_roots"] = d.plus_roots;
    out["minus_roots"] = d.minus_roots;
  }
  return out;
}

ReportRecord make_report(const KTParams& k, const std::optional<std::string>& id) {
  const ClassificationReport c = classify(k);
  ReportRecord r;
  r.id = id;
  r.metric = std::string(to_string(k.signature));
  const json params = params_to_json(k);
  for (const char* name : {"A", "B", "C", "alpha", "beta", "gamma"}) r.tensor[name] = params[name].get<std::string>();
  r.label = std::string(to_string(c.label()));
  r.web_name = std::string(c.orbit->web_name);
  for (auto sc : c.orbit->sc_labels) r.sc_labels.emplace_back(sc);
  if (const auto* e = std::get_if<EuclideanInvariants>(&c.invariants)) {
    r.invariants = {{"gamma", e->gamma.to_string()}, {"delta", e->delta.to_string()}};
  } else {
    const auto& m = std::get<MinkowskiInvariants>(c.invariants);
    r.invariants = {{"gamma", m.gamma.to_string()},
                    {"z_plus", m.z_plus.to_string()},
                    {"z_minus", m.z_minus.to_string()},
                    {"p_cart", m.p_cart.to_string()}};
  }
  r.surfaces = surface_names(c.surfaces);
  r.rank = c.rank;
  r.expected_rank = c.orbit->expected_rank;
  r.characteristic = c.orbit->characteristic;
  r.is_zero = c.is_zero;
  r.singular_set = singular_set_to_json(c.singular_set);
  return r;
}

json to_json(const ReportRecord& r) {
  json out;
  if (r.id) out["id"] = *r.id;
  out["metric"] = r.metric;
  out["tensor"] = r.tensor;
  out["class"] = r.label;
  out["web_name"] = r.web_name;
  out["sc_labels"] = r.sc_labels;
  out["invariants"] = r.invariants;
  out["surfaces"] = r.surfaces;
  out["rank"] = r.rank;
  out["expected_rank"] = r.expected_rank;
  out["characteristic"] = r.characteristic;
  out["is_zero"] = r.is_zero;
  out["singular_set"] = r.singular_set;
  return out;
}

ReportRecord report_from_json(const json& j) {
  if (!j.is_object()) throw InputError("report must be a JSON object");
  ReportRecord r;
  if (const auto it = j.find("id"); it != j.end()) r.id = field<std::string>(j, "id");
  r.metric = field<std::string>(j, "metric");
  r.tensor = field<std::map<std::string, std::string>>(j, "tensor");
  r.label = field<std::string>(j, "class");
  r.web_name = field<std::string>(j, "web_name");
  r.sc_labels = field<std::vector<std::string>>(j, "sc_labels");
  r.invariants = field<std::map<std::string, std::string>>(j, "invariants");
  r.surfaces = field<std::vector<std::string>>(j, "surfaces");
  r.rank = field<std::size_t>(j, "rank");
  r.expected_rank = field<std::size_t>(j, "expected_rank");
  r.characteristic = field<bool>(j, "characteristic");
  r.is_zero = field<bool>(j, "is_zero");
  r.singular_set = field<json>(j, "singular_set");
  return r;
}

}  // namespace ktorbit::cli
