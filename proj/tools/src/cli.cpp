#include "ktorbit_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ktorbit/group_actions.hpp"
#include "ktorbit/testkit.hpp"
#include "ktorbit/webs.hpp"
#include "ktorbit_cli/json_io.hpp"
#include "ktorbit_cli/report_record.hpp"

namespace ktorbit::cli {

namespace {

struct TensorOptions {
  std::string tensor;
  std::string metric;
  std::vector<std::string> values;
};

void add_tensor_options(CLI::App* cmd, TensorOptions& opts) {
  cmd->add_option("--tensor", opts.tensor, "Tensor record: inline JSON or a file path (default: stdin)");
  cmd->add_option("--metric", opts.metric, "euclidean or minkowski, with the six values given positionally");
  cmd->add_option("values", opts.values, "A B C alpha beta gamma")->expected(0, 6);
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return read_stream(file);
}

// The JSON document named by the options: inline, file, or stdin.
json tensor_document(const TensorOptions& opts, std::istream& in) {
  if (!opts.tensor.empty()) {
    const auto first = opts.tensor.find_first_not_of(" \t\r\n");
    const bool inline_json = first != std::string::npos && (opts.tensor[first] == '{' || opts.tensor[first] == '[');
    return parse_json_exact(inline_json ? opts.tensor : read_file(opts.tensor));
  }
  if (!opts.metric.empty() || !opts.values.empty()) {
    if (opts.metric.empty()) throw InputError("positional values need --metric");
    if (opts.values.size() != 6) throw InputError("--metric needs exactly six values: A B C alpha beta gamma");
    json record;
    record["metric"] = opts.metric;
    const char* names[] = {"A", "B", "C", "alpha", "beta", "gamma"};
    for (std::size_t i = 0; i < 6; ++i) record[names[i]] = opts.values[i];
    return record;
  }
  return parse_json_exact(read_stream(in));
}

TensorInput single_tensor(const TensorOptions& opts, std::istream& in) {
  const json doc = tensor_document(opts, in);
  if (doc.is_array()) throw InputError("expected a single tensor record");
  return tensor_from_json(doc);
}

int cmd_classify(const TensorOptions& opts, std::istream& in, std::ostream& out) {
  const json doc = tensor_document(opts, in);
  if (doc.is_array()) {
    json reports = json::array();
    for (const json& record : doc) {
      const TensorInput t = tensor_from_json(record);
      reports.push_back(to_json(make_report(t.params, t.id)));
    }
    out << reports.dump(2) << '\n';
  } else {
    const TensorInput t = tensor_from_json(doc);
    out << to_json(make_report(t.params, t.id)).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_batch(const std::string& input, std::istream& in, std::ostream& out) {
  std::ifstream file;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw InputError("cannot open '" + input + "'");
  }
  std::istream& src = file.is_open() ? file : in;
  bool any_failed = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(src, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json result;
    try {
      const TensorInput t = tensor_from_json(parse_json_exact(line));
      result = to_json(make_report(t.params, t.id));
    } catch (const std::exception& e) {
      any_failed = true;
      result = json{{"line", number}, {"error", e.what()}};
    }
    out << result.dump() << '\n';
  }
  return any_failed ? kExitInputError : kExitOk;
}

int cmd_rank(const TensorOptions& opts, std::istream& in, std::ostream& out) {
  const TensorInput t = single_tensor(opts, in);
  const RatMatrix m = generator_matrix(t.params);
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Rational& x : m.row(r)) row.push_back(to_json(x));
    rows.push_back(row);
  }
  const OrbitLabel label = classify_label(t.params);
  json result{{"rank", rat_rank(m)},
              {"class", std::string(to_string(label))},
              {"expected_rank", orbit_class(label).expected_rank},
              {"determinant", to_json(rat_det(m))},
              {"matrix", rows}};
  if (t.id) result["id"] = *t.id;
  out << result.dump(2) << '\n';
  return kExitOk;
}

int cmd_invariants(const TensorOptions& opts, std::istream& in, std::ostream& out) {
  const TensorInput t = single_tensor(opts, in);
  const ReportRecord r = make_report(t.params, t.id);
  json result{{"metric", r.metric}, {"invariants", r.invariants}, {"surfaces", r.surfaces}};
  if (t.id) result["id"] = *t.id;
  out << result.dump(2) << '\n';
  return kExitOk;
}

Box parse_box(const std::string& text) {
  std::array<double, 4> v{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t end = i == 3 ? text.size() : text.find(',', pos);
    if (end == std::string::npos) throw InputError("--box needs four comma-separated numbers u0,u1,v0,v1");
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    const auto res = std::from_chars(first, last, v[i]);
    if (res.ec != std::errc() || res.ptr != last) throw InputError("--box: cannot parse '" + std::string(first, last) + "'");
    pos = end + 1;
  }
  return {v[0], v[1], v[2], v[3]};
}

struct WebOptions {
  std::string out;
  std::string box = "-3,3,-3,3";
  std::size_t seeds = 12;
  double step = 0.01;
};

int cmd_web(const TensorOptions& opts, const WebOptions& w, std::istream& in, std::ostream& out, std::ostream& err) {
  const TensorInput t = single_tensor(opts, in);
  WebRenderConfig cfg;
  cfg.box = parse_box(w.box);
  if (w.seeds == 0) throw InputError("--seeds must be positive");
  cfg.seed_spacing = std::min(cfg.box.u1 - cfg.box.u0, cfg.box.v1 - cfg.box.v0) / static_cast<double>(w.seeds);
  cfg.step = w.step;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  WebDocument doc;
  try {
    doc = trace_web(t.params, cfg);
  } catch (const NonCharacteristicError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotCharacteristic;
  }
  const std::string svg = render_svg(doc, cfg);

  // Write beside the target and rename, so a failure never leaves a partial file.
  namespace fs = std::filesystem;
  const fs::path target(w.out);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write '" + temp.string() + "'");
    file << svg;
    file.close();
    if (!file) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw InputError("failed writing '" + temp.string() + "'");
    }
  }
  fs::rename(temp, target);

  json summary{{"out", w.out},
               {"class", std::string(to_string(classify_label(t.params)))},
               {"solid_curves", doc.foliation_solid.size()},
               {"dashed_curves", doc.foliation_dashed.size()},
               {"singular_boundaries", doc.singular_boundaries.size()},
               {"singular_regions", doc.singular_regions.size()},
               {"singular_points", doc.singular_points.size()}};
  out << summary.dump() << '\n';
  return kExitOk;
}

int cmd_verify(std::size_t trials, std::uint64_t seed, bool inject_fault, std::ostream& out) {
  GeneratorFn fn;
  if (inject_fault) {
    // Negative control: V1 with the sign of its C component flipped.
    fn = [](GeneratorId id, const KTParams& k) {
      ParamVector v = generator_vector(id, k);
      if (id == GeneratorId::V1) v[kC] = -v[kC];
      return v;
    };
  }
  const VerificationSummary summary = run_verification(trials, seed, fn);
  json checks = json::array();
  for (const CheckResult& c : summary.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  out << json{{"passed", summary.passed()}, {"trials", trials}, {"seed", seed}, {"checks", checks}}.dump() << '\n';
  return summary.passed() ? kExitOk : kExitFailure;
}

int cmd_atlas(std::ostream& out) {
  json entries = json::array();
  for (OrbitLabel label : all_labels()) {
    const OrbitClass& oc = orbit_class(label);
    for (const KTParams& k : representatives(label)) {
      json e = params_to_json(k);
      e["expected_class"] = std::string(to_string(label));
      e["class"] = std::string(to_string(classify_label(k)));
      e["expected_rank"] = oc.expected_rank;
      e["rank"] = generator_rank(k);
      e["web_name"] = std::string(oc.web_name);
      e["characteristic"] = oc.characteristic;
      entries.push_back(e);
    }
  }
  out << entries.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit classification of Killing tensors in the Euclidean and Minkowski planes", "ktorbit"};
  app.require_subcommand(1);

  TensorOptions classify_opts;
  auto* classify = app.add_subcommand("classify", "Classify one tensor record (or a JSON array of records)");
  add_tensor_options(classify, classify_opts);

  std::string batch_input;
  auto* batch = app.add_subcommand("batch", "Classify newline-delimited JSON records");
  batch->add_option("input", batch_input, "Input file (default: stdin)");

  TensorOptions rank_opts;
  auto* rank = app.add_subcommand("rank", "Generator matrix and its exact rank");
  add_tensor_options(rank, rank_opts);

  TensorOptions inv_opts;
  auto* invariants = app.add_subcommand("invariants", "Fundamental invariants and surface membership");
  add_tensor_options(invariants, inv_opts);

  TensorOptions web_opts;
  WebOptions web_cfg;
  auto* web = app.add_subcommand("web", "Render the separable web as SVG");
  add_tensor_options(web, web_opts);
  web->add_option("--out", web_cfg.out, "Output SVG path")->required();
  web->add_option("--box", web_cfg.box, "u0,u1,v0,v1")->capture_default_str();
  web->add_option("--seeds", web_cfg.seeds, "Seed count per axis")->capture_default_str();
  web->add_option("--step", web_cfg.step, "Integration step")->capture_default_str();

  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_option("--trials", trials, "Orbit-invariance fuzz trials (0 skips)")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");

  auto* atlas = app.add_subcommand("atlas", "Representative tensors of every orbit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*classify) return cmd_classify(classify_opts, in, out);
    if (*batch) return cmd_batch(batch_input, in, out);
    if (*rank) return cmd_rank(rank_opts, in, out);
    if (*invariants) return cmd_invariants(inv_opts, in, out);
    if (*web) return cmd_web(web_opts, web_cfg, in, out, err);
    if (*verify) return cmd_verify(trials, seed, inject_fault, out);
    if (*atlas) return cmd_atlas(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ktorbit::cli
