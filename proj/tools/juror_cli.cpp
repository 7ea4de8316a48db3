// juror: command-line front end for the juror-model library.

#include "juror/io.hpp"
#include "juror/juror.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using juror::Error;
using juror::ErrorKind;
using juror::Rational;
using juror::io::Json;

enum class Format { kJson, kTable };

struct RunConfig {
  Format format = Format::kTable;
  std::size_t world_cap = juror::TestimonyCatalog::kDefaultCap;
};

std::size_t world_cap_from_env() {
  const char* raw = std::getenv("JUROR_WORLD_CAP");
  if (raw == nullptr || *raw == '\0') return juror::TestimonyCatalog::kDefaultCap;
  try {
    std::size_t used = 0;
    unsigned long value = std::stoul(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParseError, "JUROR_WORLD_CAP must be a nonnegative integer");
  }
}

void emit(const RunConfig& cfg, const Json& json, const std::string& table) {
  if (cfg.format == Format::kJson) {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

std::string rational_cell(const Rational& value) {
  std::string exact = juror::to_string(value);
  std::string approx = juror::to_approx_decimal(value);
  return exact == approx ? exact : exact + "  (~" + approx + ")";
}

std::string labels_text(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

Json labels_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

void write_file(const std::string& path, const Json& json) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << json.dump(2) << "\n";
}

// --- commands -------------------------------------------------------------

int cmd_rationalize(const RunConfig& cfg, const std::string& disposition_path, const std::string& theta_text,
                    const std::string& prior_out) {
  auto f = juror::io::disposition_from_json(juror::io::read_json_file(disposition_path), cfg.world_cap);
  Rational theta = juror::parse_rational(theta_text);
  if (!juror::check_poi(f)) {
    throw Error(ErrorKind::kAxiomViolation, "PoI fails: the disposition convicts on the empty transcript");
  }
  if (!juror::check_wtc(f)) {
    throw Error(ErrorKind::kAxiomViolation, "WtC fails: the disposition never convicts");
  }
  auto cert = juror::rationalize(f, theta);
  juror::WorldSpace space(f.catalog());
  // Independent re-check before reporting.
  bool verified = juror::verify_rationalization(f, theta, cert.prior).holds;
  bool open_door = juror::is_open_door(space, cert.prior);

  Json json = juror::io::certificate_to_json(cert, f);
  json["verified"] = verified;
  json["open_door"] = open_door;
  std::string table = juror::io::certificate_table(cert, f);
  table += std::string("verified     ") + (verified ? "true" : "false") + "\n";
  table += std::string("open door    ") + (open_door ? "true" : "false") + "\n";
  if (!prior_out.empty()) write_file(prior_out, juror::io::charge_to_json(cert.prior, f.catalog()));
  emit(cfg, json, table);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& disposition_path, const std::string& charge_path,
               const std::string& theta_text) {
  auto f = juror::io::disposition_from_json(juror::io::read_json_file(disposition_path), cfg.world_cap);
  auto file = juror::io::charge_from_json(juror::io::read_json_file(charge_path), cfg.world_cap);
  Rational theta = juror::parse_rational(theta_text);
  if (file.catalog && !(*file.catalog == f.catalog())) {
    throw Error(ErrorKind::kCatalogMismatch, "charge catalog differs from the disposition catalog");
  }
  auto result = juror::verify_rationalization(f, theta, file.charge);

  Json json;
  json["theta"] = juror::to_string(theta);
  json["holds"] = result.holds;
  std::string table = std::string("rationalizes  ") + (result.holds ? "true" : "false") + "\n";
  if (!result.holds) {
    auto labels = result.witness->labels(f.catalog());
    json["witness"] = labels_json(labels);
    json["witness_verdict"] = f.verdict(*result.witness) == juror::Verdict::kConvict ? "convict" : "acquit";
    json["witness_posterior"] = juror::to_string(*result.witness_posterior);
    table += "witness       " + labels_text(labels) + "\n";
    table += "verdict       " + std::string(json["witness_verdict"].get<std::string>()) + "\n";
    table += "P(E_G|E_T)    " + rational_cell(*result.witness_posterior) + "\n";
  }
  emit(cfg, json, table);
  return 0;
}

int cmd_extend(const RunConfig& cfg, const std::string& charge_path, const std::string& event_text,
               const std::string& given_text, const std::string& target_text, const std::string& output) {
  auto file = juror::io::charge_from_json(juror::io::read_json_file(charge_path), cfg.world_cap);
  const auto ground = file.charge.ground_size();
  auto event = juror::parse_points(ground, event_text);
  auto given = juror::parse_points(ground, given_text);
  Rational target = juror::parse_rational(target_text);

  auto extended = juror::extend_with_conditional(file.charge, event, given, target);
  auto check = juror::conditional(extended, event, given);
  const bool exact = check.value == target && juror::restricts_to(extended, file.charge);

  Json charge_json = juror::io::charge_to_json(extended, file.catalog);
  if (!output.empty()) write_file(output, charge_json);
  Json json;
  json["target"] = juror::to_string(target);
  json["conditional"] = juror::to_string(check.value);
  json["given_mass"] = juror::to_string(check.conditioning_mass);
  json["verified"] = exact;
  json["charge"] = std::move(charge_json);

  std::ostringstream table;
  table << "P~(event | given)   " << rational_cell(check.value) << "\n";
  table << "P~(given)           " << rational_cell(check.conditioning_mass) << "\n";
  table << "verified            " << (exact ? "true" : "false") << "\n";
  table << "atoms               " << extended.algebra().atom_count() << "\n";
  for (std::size_t i = 0; i < extended.algebra().atom_count(); ++i) {
    table << "  {" << juror::format_points(extended.algebra().atoms()[i]) << "}  "
          << juror::to_string(extended.mass(i)) << "\n";
  }
  emit(cfg, json, table.str());
  return exact ? 0 : 1;
}

int cmd_threshold(const RunConfig& cfg, const std::vector<std::string>& weights,
                  const std::vector<std::string>& quadruple) {
  if (weights.empty() == quadruple.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of --weights R W or --quadruple GC NGC GA NGA");
  }
  Json json;
  std::ostringstream table;
  Rational threshold;
  if (!weights.empty()) {
    juror::ScoreWeights w(juror::parse_rational(weights[0]), juror::parse_rational(weights[1]));
    threshold = juror::belief_threshold(w);
    Rational via_utilities = juror::verdict_threshold(juror::UtilityQuadruple::from_weights(w));
    json["reward"] = juror::to_string(w.reward);
    json["penalty"] = juror::to_string(w.penalty);
    json["threshold"] = juror::to_string(threshold);
    json["threshold_decimal"] = juror::to_approx_decimal(threshold);
    json["utility_embedding_agrees"] = via_utilities == threshold;
    table << "belief threshold W/(R+W)   " << rational_cell(threshold) << "\n";
  } else {
    juror::UtilityQuadruple u{juror::parse_rational(quadruple[0]), juror::parse_rational(quadruple[1]),
                              juror::parse_rational(quadruple[2]), juror::parse_rational(quadruple[3])};
    threshold = juror::verdict_threshold(u);
    json["quadruple"] = {{"GC", juror::to_string(u.guilty_convict)}, {"NGC", juror::to_string(u.innocent_convict)},
                         {"GA", juror::to_string(u.guilty_acquit)}, {"NGA", juror::to_string(u.innocent_acquit)}};
    json["threshold"] = juror::to_string(threshold);
    json["threshold_decimal"] = juror::to_approx_decimal(threshold);
    json["prefers_accuracy"] = u.prefers_accuracy();
    json["threshold_in_unit_interval"] = juror::is_probability(threshold);
    table << "verdict threshold          " << rational_cell(threshold) << "\n";
    if (!juror::is_probability(threshold)) table << "note: threshold lies outside [0, 1]\n";
  }
  emit(cfg, json, table.str());
  return 0;
}

int cmd_odds(const RunConfig& cfg, const std::string& prior_text, const std::string& lr_text) {
  auto prior = juror::Odds::parse(prior_text);
  Rational lr = juror::parse_rational(lr_text);
  auto posterior = juror::posterior_odds(prior, lr);
  Json json;
  json["prior"] = prior.to_string();
  json["likelihood_ratio"] = juror::to_string(lr);
  json["posterior"] = posterior.to_string();
  json["posterior_probability"] = juror::to_string(posterior.probability());
  std::ostringstream table;
  table << "posterior odds          " << posterior.to_string() << "\n";
  table << "posterior probability   " << rational_cell(posterior.probability()) << "\n";
  emit(cfg, json, table.str());
  return 0;
}

int cmd_rate(const RunConfig& cfg, const std::string& gamma_text, const std::string& theta_text,
             const std::string& prior_out) {
  juror::RateBoundConfig rate{juror::parse_rational(gamma_text), juror::parse_rational(theta_text)};
  auto count = juror::min_convicting_testimony_count(rate);
  Json json;
  json["gamma"] = juror::to_string(rate.gamma);
  json["theta"] = juror::to_string(rate.theta);
  json["count"] = count.count;
  json["strict_count"] = count.strict_count;
  std::ostringstream bound;
  bound << std::setprecision(6) << count.log_bound;
  json["log_bound"] = bound.str();
  json["poi_violating"] = count.poi_violating;

  std::ostringstream table;
  table << "testimonies needed (>=)         " << count.count << "\n";
  table << "testimonies needed (>)          " << count.strict_count << "\n";
  table << "log(2 theta)/log(1+gamma)       ~" << bound.str() << "\n";
  if (count.poi_violating) table << "note: theta <= 1/2, the even-odds prior already meets it\n";

  if (count.count > 0) {
    auto catalog = juror::TestimonyCatalog::numbered(count.count, std::max(cfg.world_cap, count.count));
    juror::WorldSpace space(catalog);
    auto built = juror::build_ratio_bounded_convicting_prior(catalog, rate);
    auto audit = juror::audit_rate_bounded_prior(space, built, rate);
    Json posteriors = Json::array();
    for (const auto& p : audit.posteriors) posteriors.push_back(juror::to_string(p));
    Json ratios = Json::array();
    for (const auto& r : audit.ratios) ratios.push_back(juror::to_string(r));
    json["posteriors"] = std::move(posteriors);
    json["ratios"] = std::move(ratios);
    json["audit_ok"] = audit.ok;
    table << "posterior chain                ";
    for (const auto& p : audit.posteriors) table << " " << juror::to_string(p);
    table << "\naudit                           " << (audit.ok ? "ok" : audit.failure) << "\n";
    if (!prior_out.empty()) write_file(prior_out, juror::io::charge_to_json(built.prior, catalog));
  }
  emit(cfg, json, table.str());
  return 0;
}

int scenario_spann(const RunConfig& cfg) {
  auto space = juror::build_spann_space();
  Rational paternity = space.prior.measure(space.paternity);
  bool alibi = juror::is_expressible(space.alibi, space.algebra);
  Json json;
  json["scenario"] = "spann";
  json["blood_types"] = Json::array();
  for (auto t : juror::kBloodTypes) json["blood_types"].push_back(std::string(t));
  json["size"] = space.algebra.atom_count();
  json["paternity_samples"] = space.paternity_sample_count();
  json["paternity_prior"] = juror::to_string(paternity);
  json["alibi_expressible"] = alibi;
  std::ostringstream table;
  table << "sample space size     " << space.algebra.atom_count() << "\n";
  table << "paternity samples     " << space.paternity_sample_count() << "\n";
  table << "P(paternity)          " << juror::to_string(paternity) << "\n";
  table << "alibi expressible     " << (alibi ? "true" : "false") << "\n";
  emit(cfg, json, table.str());
  return 0;
}

int scenario_two_witness(const RunConfig& cfg) {
  const Rational theta(3, 4);
  auto f = juror::Disposition::at_least(juror::TestimonyCatalog::numbered(4, cfg.world_cap), 2);
  auto cert = juror::rationalize(f, theta);
  juror::WorldSpace space(f.catalog());
  bool verified = juror::verify_rationalization(f, theta, cert.prior).holds;
  bool open_door = juror::is_open_door(space, cert.prior);
  Json json;
  json["scenario"] = "two-witness";
  json["catalog"] = labels_json(f.catalog().labels());
  json["theta"] = juror::to_string(theta);
  json["convicting_transcripts"] = f.convicting().size();
  json["guilt_prior"] = juror::to_string(cert.guilt_prior);
  json["verified"] = verified;
  json["open_door"] = open_door;
  Json rows = Json::array();
  for (const auto& row : cert.posteriors) {
    rows.push_back({{"transcript", labels_json(row.transcript.labels(f.catalog()))},
                    {"verdict", row.verdict == juror::Verdict::kConvict ? "convict" : "acquit"},
                    {"posterior", juror::to_string(row.posterior)}});
  }
  json["posteriors"] = std::move(rows);
  std::string table = juror::io::certificate_table(cert, f);
  table += std::string("verified     ") + (verified ? "true" : "false") + "\n";
  table += std::string("open door    ") + (open_door ? "true" : "false") + "\n";
  emit(cfg, json, table);
  return 0;
}

int scenario_posner(const RunConfig& cfg) {
  const Rational theta(3, 4);
  auto catalog = juror::TestimonyCatalog::numbered(3, cfg.world_cap);
  juror::WorldSpace space(catalog);
  auto prior = juror::posner_even_odds_prior(catalog, theta);
  const auto guilt = space.guilt_event();
  Json json;
  json["scenario"] = "posner";
  json["theta"] = juror::to_string(theta);
  json["guilt_prior"] = juror::to_string(prior.measure(guilt));
  Json rows = Json::array();
  std::ostringstream table;
  table << "P(E_G)                " << juror::to_string(prior.measure(guilt)) << "\n";
  bool all_convict = true;
  for (auto t : space.transcripts()) {
    Rational post = juror::conditional(prior, guilt, space.event_of_transcript(t)).value;
    if (!t.empty()) all_convict = all_convict && post >= theta;
    rows.push_back({{"transcript", labels_json(t.labels(catalog))}, {"posterior", juror::to_string(post)}});
    table << std::left << std::setw(22) << labels_text(t.labels(catalog)) << juror::to_string(post) << "\n";
  }
  json["posteriors"] = std::move(rows);
  json["convicts_on_any_testimony"] = all_convict;
  table << "convicts on any testimony   " << (all_convict ? "true" : "false") << "\n";
  emit(cfg, json, table.str());
  return 0;
}

int scenario_shooting(const RunConfig& cfg) {
  const Rational given_h(4, 5);
  const Rational given_not_h(1, 10);
  const Rational lr = given_h / given_not_h;
  auto first = juror::posterior_odds(juror::Odds(1, 2), lr);
  auto second = juror::posterior_odds(juror::Odds(1, 10), lr);
  Json json;
  json["scenario"] = "shooting";
  json["likelihood_ratio"] = juror::to_string(lr);
  json["posterior_from_1_to_2"] = first.to_string();
  json["posterior_from_1_to_10"] = second.to_string();
  std::ostringstream table;
  table << "likelihood ratio        " << juror::to_string(lr) << "\n";
  table << "1:2 updated             " << first.to_string() << "\n";
  table << "1:10 updated            " << second.to_string() << "\n";
  emit(cfg, json, table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite models of threshold jurors"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::optional<std::size_t> world_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--world-cap", world_cap, "Largest catalog size allowed (overrides JUROR_WORLD_CAP)");

  std::string disposition_path;
  std::string charge_path;
  std::string theta_text;
  std::string gamma_text;
  std::string prior_out;
  std::string output;
  std::string event_text;
  std::string given_text;
  std::string target_text;
  std::vector<std::string> weights;
  std::vector<std::string> quadruple;
  std::string prior_odds;
  std::string lr_text;
  std::string scenario;

  auto* rationalize = app.add_subcommand("rationalize", "Build a prior that rationalizes a disposition");
  rationalize->add_option("disposition", disposition_path, "Disposition JSON file")->required();
  rationalize->add_option("--theta", theta_text, "Verdict threshold in (1/2, 1)")->required();
  rationalize->add_option("--prior-out", prior_out, "Also write the prior as a charge file");

  auto* verify = app.add_subcommand("verify", "Check that a prior rationalizes a disposition");
  verify->add_option("disposition", disposition_path, "Disposition JSON file")->required();
  verify->add_option("charge", charge_path, "Charge JSON file on the world space")->required();
  verify->add_option("--theta", theta_text, "Verdict threshold")->required();

  auto* extend = app.add_subcommand("extend", "Extend a charge to a prescribed conditional value");
  extend->add_option("charge", charge_path, "Charge JSON file")->required();
  extend->add_option("--event", event_text, "Event A as comma-separated points")->required();
  extend->add_option("--given", given_text, "Event B as comma-separated points")->required();
  extend->add_option("--target", target_text, "Target value of P(A|B)")->required();
  extend->add_option("-o,--output", output, "Write the extended charge here");

  auto* threshold = app.add_subcommand("threshold", "Belief or verdict threshold");
  threshold->add_option("--weights", weights, "Reward R and penalty W")->expected(2);
  threshold->add_option("--quadruple", quadruple, "Utilities GC NGC GA NGA")->expected(4);

  auto* odds = app.add_subcommand("odds", "Update odds by a likelihood ratio");
  odds->add_option("--prior", prior_odds, "Prior odds a:b")->required();
  odds->add_option("--lr", lr_text, "Likelihood ratio")->required();

  auto* rate = app.add_subcommand("rate", "Testimony count and prior under a bounded update ratio");
  rate->add_option("--gamma", gamma_text, "Ratio slack gamma > 0")->required();
  rate->add_option("--theta", theta_text, "Verdict threshold in (0, 1)")->required();
  rate->add_option("--prior-out", prior_out, "Write the constructed prior as a charge file");

  auto* scenario_cmd = app.add_subcommand("scenario", "Regenerate a worked example");
  scenario_cmd->add_option("name", scenario, "spann | two-witness | posner | shooting")
      ->required()
      ->check(CLI::IsMember({"spann", "two-witness", "posner", "shooting"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors all map to 1; library errors use 2 and up.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    cfg.format = format == "json" ? Format::kJson : Format::kTable;
    cfg.world_cap = world_cap ? *world_cap : world_cap_from_env();
    if (cfg.world_cap > juror::TestimonyCatalog::kHardLimit) {
      throw Error(ErrorKind::kCapExceeded, "world cap above hard limit " +
                                               std::to_string(juror::TestimonyCatalog::kHardLimit));
    }

    if (*rationalize) return cmd_rationalize(cfg, disposition_path, theta_text, prior_out);
    if (*verify) return cmd_verify(cfg, disposition_path, charge_path, theta_text);
    if (*extend) return cmd_extend(cfg, charge_path, event_text, given_text, target_text, output);
    if (*threshold) return cmd_threshold(cfg, weights, quadruple);
    if (*odds) return cmd_odds(cfg, prior_odds, lr_text);
    if (*rate) return cmd_rate(cfg, gamma_text, theta_text, prior_out);
    if (*scenario_cmd) {
      if (scenario == "spann") return scenario_spann(cfg);
      if (scenario == "two-witness") return scenario_two_witness(cfg);
      if (scenario == "posner") return scenario_posner(cfg);
      return scenario_shooting(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return juror::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
