#include "ktorbit_cli/json_io.hpp"

#include <array>

namespace ktorbit::cli {

namespace {

// DOM builder that stores floating-point literals as strings.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(number_float_t /*value*/, const string_t& text) {
    string_t copy = text;
    return Base::string(copy);
  }
};

constexpr std::array<std::string_view, 6> kFields{"A", "B", "C", "alpha", "beta", "gamma"};

}  // namespace

json parse_json_exact(std::string_view text) {
  json result;
  ExactSax sax(result, false);
  const bool ok = json::sax_parse(text.begin(), text.end(), &sax, nlohmann::detail::input_format_t::json, false);
  if (!ok || sax.is_errored()) throw InputError("invalid JSON");
  return result;
}

Rational rational_from_json(const json& value, std::string_view field) {
  try {
    if (value.is_number_integer()) {
      return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
    }
    if (value.is_number_float()) return Rational::from_double(value.get<double>());
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError("field '" + std::string(field) + "': " + e.what());
  }
  throw InputError("field '" + std::string(field) + "' must be a number or a \"p/q\" string");
}

TensorInput tensor_from_json(const json& record) {
  if (!record.is_object()) throw InputError("tensor record must be a JSON object");
  TensorInput input;
  const auto metric = record.find("metric");
  if (metric == record.end() || !metric->is_string()) throw InputError("missing string field 'metric'");
  const auto sig = parse_signature(metric->get<std::string>());
  if (!sig) throw InputError("unknown metric '" + metric->get<std::string>() + "'");
  ParamVector v;
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    const auto it = record.find(std::string(kFields[i]));
    if (it == record.end()) throw InputError("missing field '" + std::string(kFields[i]) + "'");
    v[i] = rational_from_json(*it, kFields[i]);
  }
  input.params = KTParams::from_vector(*sig, v);
  if (const auto id = record.find("id"); id != record.end()) {
    if (id->is_string()) {
      input.id = id->get<std::string>();
    } else if (id->is_number_integer()) {
      input.id = id->dump();
    } else {
      throw InputError("field 'id' must be a string or an integer");
    }
  }
  return input;
}

json to_json(const Rational& r) { return r.to_string(); }

json params_to_json(const KTParams& k) {
  json out;
  out["metric"] = std::string(to_string(k.signature));
  const ParamVector v = k.to_vector();
  for (std::size_t i = 0; i < kFields.size(); ++i) out[std::string(kFields[i])] = to_json(v[i]);
  return out;
}

}  // namespace ktorbit::cli
