// Command-line front end. Exit codes are a stable contract:
//   0 success (for equiv: formulas are equivalent)
//   1 equiv ran fine and the formulas are not equivalent
//   2 input error (syntax, unknown port or monoid, malformed weights)
//   3 a guard or hypothesis refused the computation
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wpcl/archlib.hpp"
#include "wpcl/errors.hpp"
#include "wpcl/limits.hpp"
#include "wpcl/logic.hpp"
#include "wpcl/normal_form.hpp"
#include "wpcl/pvm.hpp"
#include "wpcl/semantics.hpp"
#include "wpcl/textio.hpp"
#include "wpcl/value.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string monoid = "max-avg-plus";
  bool monoid_given = false;
  std::string ports_csv;
  std::string formula;
  std::string formula2;
  std::string config;
  std::string format = "text";
  int port_limit = 0;  // 0 keeps the default
  int star_limit = 0;

  std::string style;
  std::string variant;
  std::string weights_path;
  int star_n = 3;
  int masters = 2;
  int slaves = 2;
  int publishers = 2;
  int topics = 3;
  int subscribers = 4;

  bool json_lines() const { return format == "json-lines"; }
};

wpcl::Limits make_limits(const Options& o) {
  wpcl::Limits limits;
  if (o.port_limit > 0) limits.port_limit = o.port_limit;
  if (o.star_limit > 0) limits.star_limit = o.star_limit;
  return limits;
}

wpcl::PortSet ports_from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return wpcl::PortSet(std::move(names));
}

void emit(const Options& o, const json& object, const std::string& text) {
  if (o.json_lines())
    std::cout << object.dump() << "\n";
  else
    std::cout << text << "\n";
}

void emit_fnf(const Options& o, const wpcl::Fnf& fnf,
              const wpcl::PortSet& ports) {
  if (!o.json_lines()) {
    std::cout << wpcl::print_fnf(fnf, ports) << "\n";
    return;
  }
  if (fnf.is_constant()) {
    std::cout << json{{"result", "constant"},
                      {"value", fnf.constant_value().to_string()}}
                     .dump()
              << "\n";
    return;
  }
  if (fnf.term_list().empty()) {
    std::cout << json{{"result", "empty"}}.dump() << "\n";
    return;
  }
  for (const auto& t : fnf.term_list())
    std::cout << json{{"result", "term"},
                      {"value", t.value.to_string()},
                      {"config", wpcl::print_configuration(t.config, ports)}}
                     .dump()
              << "\n";
}

int run_eval(const Options& o) {
  wpcl::PvMonoid m = wpcl::builtin_monoid(o.monoid);
  wpcl::PortSet ports = ports_from_csv(o.ports_csv);
  wpcl::Limits limits = make_limits(o);
  wpcl::WpclPtr f = wpcl::parse_wpcl(o.formula, ports);
  wpcl::Configuration gamma = wpcl::parse_configuration(o.config, ports);
  wpcl::Value v = wpcl::wpcl_eval(
      gamma, wpcl::lower_full_valuations(f, ports, m, limits), m, limits);
  emit(o, {{"result", "eval"}, {"value", v.to_string()}}, v.to_string());
  return 0;
}

int run_normalize(const Options& o) {
  wpcl::PvMonoid m = wpcl::builtin_monoid(o.monoid);
  wpcl::PortSet ports = ports_from_csv(o.ports_csv);
  wpcl::Limits limits = make_limits(o);
  wpcl::WpclPtr f = wpcl::parse_wpcl(o.formula, ports);
  emit_fnf(o, wpcl::normalize(f, ports, m, limits), ports);
  return 0;
}

int run_equiv(const Options& o) {
  wpcl::PvMonoid m = wpcl::builtin_monoid(o.monoid);
  wpcl::PortSet ports = ports_from_csv(o.ports_csv);
  wpcl::Limits limits = make_limits(o);
  wpcl::Fnf a =
      wpcl::normalize(wpcl::parse_wpcl(o.formula, ports), ports, m, limits);
  wpcl::Fnf b =
      wpcl::normalize(wpcl::parse_wpcl(o.formula2, ports), ports, m, limits);
  if (a == b) {
    emit(o, {{"result", "equiv"}, {"equivalent", true}}, "EQUIVALENT");
    return 0;
  }
  std::optional<wpcl::EquivWitness> w =
      wpcl::equivalence_witness(a, b, ports, m, limits);
  if (o.json_lines()) {
    json object{{"result", "equiv"}, {"equivalent", false}};
    if (w) {
      object["witness"] = wpcl::print_configuration(w->config, ports);
      object["left"] = w->left.to_string();
      object["right"] = w->right.to_string();
    }
    std::cout << object.dump() << "\n";
  } else {
    std::cout << "NOT EQUIVALENT\n";
    if (w)
      std::cout << "witness: " << wpcl::print_configuration(w->config, ports)
                << "\nleft: " << w->left.to_string()
                << "\nright: " << w->right.to_string() << "\n";
  }
  return 1;
}

int run_table(const Options& o) {
  wpcl::PvMonoid m = wpcl::builtin_monoid(o.monoid);
  wpcl::PortSet ports = ports_from_csv(o.ports_csv);
  wpcl::Limits limits = make_limits(o);
  wpcl::WpclPtr f = wpcl::parse_wpcl(o.formula, ports);
  wpcl::SemanticTable table = wpcl::semantic_table(
      wpcl::lower_full_valuations(f, ports, m, limits), ports, m, limits);
  for (const auto& [gamma, v] : table) {
    std::string cfg = wpcl::print_configuration(gamma, ports);
    emit(o,
         {{"result", "table"}, {"config", cfg}, {"value", v.to_string()}},
         v.to_string() + " @ " + cfg);
  }
  return 0;
}

wpcl::WeightMap load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wpcl::DomainError("cannot open weight file '" + path + "'");
  json object;
  try {
    in >> object;
  } catch (const json::exception& e) {
    throw wpcl::DomainError("weight file '" + path + "': " + e.what());
  }
  if (!object.is_object())
    throw wpcl::DomainError("weight file '" + path +
                            "': expected a flat JSON object");
  wpcl::WeightMap weights;
  for (const auto& [key, value] : object.items()) {
    if (!value.is_string())
      throw wpcl::DomainError("weight file '" + path + "': value for '" + key +
                              "' must be a string like \"3/2\" or \"-inf\"");
    weights.emplace(key, wpcl::Value::parse(value.get<std::string>()));
  }
  return weights;
}

// Each style has a natural monoid (the one its documented results assume);
// an explicit -m still wins.
std::string demo_monoid(const Options& o) {
  if (o.monoid_given) return o.monoid;
  if (o.style == "star") return "min-avg-plus";
  if (o.style == "pubsub" &&
      (o.variant == "prune" || o.variant.rfind("topic-", 0) == 0))
    return "min-maj-max";
  return "max-avg-plus";
}

int run_demo(const Options& o) {
  wpcl::PvMonoid m = wpcl::builtin_monoid(demo_monoid(o));
  wpcl::Limits limits = make_limits(o);
  wpcl::WeightMap weights = load_weights(o.weights_path);

  wpcl::ArchFixture fx = [&] {
    if (o.style == "master-slave") {
      if (o.variant.empty())
        throw wpcl::DomainError("master-slave needs a variant: i, ii or iii");
      return wpcl::build_master_slave(o.masters, o.slaves, weights, o.variant);
    }
    if (o.style == "pubsub") {
      if (o.variant.empty())
        throw wpcl::DomainError(
            "pubsub needs a variant: total, prune, subscriber-<i> or "
            "topic-<j>");
      return wpcl::build_pubsub(o.publishers, o.topics, o.subscribers, weights,
                                o.variant);
    }
    if (o.style == "star") return wpcl::build_star(o.star_n, weights);
    throw wpcl::DomainError("unknown style '" + o.style +
                            "' (master-slave, pubsub, star)");
  }();

  std::string shown = wpcl::print_wpcl(fx.formula, fx.ports);
  std::string cfg = wpcl::print_configuration(fx.config, fx.ports);
  emit(o, {{"result", "formula"}, {"text", shown}}, "formula: " + shown);
  emit(o, {{"result", "config"}, {"text", cfg}}, "config: " + cfg);

  wpcl::Value v = wpcl::wpcl_eval(
      fx.config, wpcl::lower_full_valuations(fx.formula, fx.ports, m, limits),
      m, limits);
  emit(o, {{"result", "eval"}, {"value", v.to_string()}},
       "eval: " + v.to_string());

  try {
    wpcl::Fnf nf = wpcl::normalize(fx.formula, fx.ports, m, limits);
    if (!o.json_lines()) std::cout << "normal form:\n";
    emit_fnf(o, nf, fx.ports);
  } catch (const wpcl::ResourceError& e) {
    emit(o, {{"result", "normalize-skipped"}, {"reason", e.what()}},
         std::string("normal form: skipped (") + e.what() + ")");
  } catch (const wpcl::HypothesisError& e) {
    emit(o, {{"result", "normalize-skipped"}, {"reason", e.what()}},
         std::string("normal form: skipped (") + e.what() + ")");
  }
  return 0;
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("-m,--monoid", o.monoid,
                  "Builtin monoid: max-avg-plus, min-avg-plus, min-maj-max")
      ->each([&o](const std::string&) { o.monoid_given = true; })
      ->capture_default_str();
  cmd->add_option("--port-limit", o.port_limit,
                  "Override the full-table port guard");
  cmd->add_option("--star-limit", o.star_limit,
                  "Override the star support-size guard");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
}

void add_ports_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--ports", o.ports_csv, "Comma-separated port names")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"weighted configuration logic: evaluate, normalize, compare"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a formula on one configuration");
  add_run_flags(eval, o);
  add_ports_flag(eval, o);
  eval->add_option("-f,--formula", o.formula, "Formula text")->required();
  eval->add_option("-c,--config", o.config, "Configuration, e.g. '{{p},{q}}'")
      ->required();

  CLI::App* normalize = app.add_subcommand(
      "normalize", "Print the full normal form of a formula");
  add_run_flags(normalize, o);
  add_ports_flag(normalize, o);
  normalize->add_option("-f,--formula", o.formula, "Formula text")->required();

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Decide whether two formulas agree on every configuration");
  add_run_flags(equiv, o);
  add_ports_flag(equiv, o);
  equiv->add_option("formula1", o.formula, "First formula")->required();
  equiv->add_option("formula2", o.formula2, "Second formula")->required();

  CLI::App* table = app.add_subcommand(
      "table", "Print the value of a formula on every configuration");
  add_run_flags(table, o);
  add_ports_flag(table, o);
  table->add_option("-f,--formula", o.formula, "Formula text")->required();

  CLI::App* demo = app.add_subcommand(
      "demo", "Build an architecture style, evaluate and normalize it");
  add_run_flags(demo, o);
  demo->add_option("style", o.style, "master-slave, pubsub or star")
      ->required();
  demo->add_option("variant", o.variant,
                   "Style variant (master-slave: i/ii/iii; pubsub: total, "
                   "prune, subscriber-<i>, topic-<j>)");
  demo->add_option("--weights", o.weights_path,
                   "JSON file mapping pair labels to value strings")
      ->required();
  demo->add_option("--n", o.star_n, "Star size")->capture_default_str();
  demo->add_option("--masters", o.masters)->capture_default_str();
  demo->add_option("--slaves", o.slaves)->capture_default_str();
  demo->add_option("--publishers", o.publishers)->capture_default_str();
  demo->add_option("--topics", o.topics)->capture_default_str();
  demo->add_option("--subscribers", o.subscribers)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (normalize->parsed()) return run_normalize(o);
    if (equiv->parsed()) return run_equiv(o);
    if (table->parsed()) return run_table(o);
    if (demo->parsed()) return run_demo(o);
  } catch (const wpcl::ParseError& e) {
    std::cerr << "error: " << e.what() << " (at bytes " << e.span.begin << ".."
              << e.span.end << ")\n";
    return 2;
  } catch (const wpcl::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wpcl::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wpcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
