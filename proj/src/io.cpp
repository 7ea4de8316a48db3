#include "juror/io.hpp"

#include "juror/error.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace juror::io {
namespace {

void reject_unknown_keys(const Json& json, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!json.is_object()) throw Error(ErrorKind::kParseError, std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : json.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw Error(ErrorKind::kParseError, "unknown key '" + key + "' in " + std::string(what));
  }
}

std::vector<std::string> read_labels(const Json& json, std::string_view what) {
  if (!json.is_array()) throw Error(ErrorKind::kParseError, std::string(what) + " must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& item : json) {
    if (!item.is_string()) throw Error(ErrorKind::kParseError, std::string(what) + " must be an array of strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

TestimonyCatalog read_catalog(const Json& json, std::size_t cap) {
  auto labels = read_labels(json, "catalog");
  if (labels.size() > cap) {
    throw Error(ErrorKind::kCapExceeded, "catalog of " + std::to_string(labels.size()) +
                                             " testimonies exceeds world cap " + std::to_string(cap));
  }
  try {
    return TestimonyCatalog(std::move(labels), cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument) throw Error(ErrorKind::kParseError, e.what());
    throw;
  }
}

Json labels_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

}  // namespace

Json charge_to_json(const Charge& charge, const std::optional<TestimonyCatalog>& catalog) {
  Json out;
  out["ground_size"] = charge.ground_size();
  if (catalog) out["catalog"] = labels_json(catalog->labels());
  Json atoms = Json::object();
  for (std::size_t i = 0; i < charge.algebra().atom_count(); ++i) {
    atoms[format_points(charge.algebra().atoms()[i])] = to_string(charge.mass(i));
  }
  out["atoms"] = std::move(atoms);
  return out;
}

ChargeFile charge_from_json(const Json& json, std::size_t catalog_cap) {
  reject_unknown_keys(json, {"ground_size", "catalog", "atoms"}, "charge file");
  if (!json.contains("ground_size") || !json["ground_size"].is_number_unsigned()) {
    throw Error(ErrorKind::kParseError, "charge file needs a nonnegative integer 'ground_size'");
  }
  if (!json.contains("atoms") || !json["atoms"].is_object()) {
    throw Error(ErrorKind::kParseError, "charge file needs an 'atoms' object");
  }
  const auto ground = json["ground_size"].get<std::size_t>();
  std::optional<TestimonyCatalog> catalog;
  if (json.contains("catalog")) {
    catalog = read_catalog(json["catalog"], catalog_cap);
    if (catalog->size() > TestimonyCatalog::kHardLimit || (std::size_t{2} << catalog->size()) != ground) {
      throw Error(ErrorKind::kParseError, "ground_size does not match the world space of the catalog");
    }
  }

  std::vector<PointSet> blocks;
  std::vector<Rational> masses;
  for (const auto& [key, value] : json["atoms"].items()) {
    if (!value.is_string()) throw Error(ErrorKind::kParseError, "atom masses must be rational strings");
    blocks.push_back(parse_points(ground, key));
    masses.push_back(parse_rational(value.get<std::string>()));
  }
  try {
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return blocks[a].find_first() < blocks[b].find_first(); });
    std::vector<PointSet> sorted_blocks;
    std::vector<Rational> sorted_masses;
    for (std::size_t i : order) {
      sorted_blocks.push_back(blocks[i]);
      sorted_masses.push_back(masses[i]);
    }
    auto algebra = BooleanSubalgebra::from_partition(ground, std::move(sorted_blocks));
    return {Charge(std::move(algebra), std::move(sorted_masses)), std::move(catalog)};
  } catch (const Error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

Json disposition_to_json(const Disposition& f) {
  Json out;
  out["catalog"] = labels_json(f.catalog().labels());
  Json convicting = Json::array();
  for (Transcript t : f.convicting()) convicting.push_back(labels_json(t.labels(f.catalog())));
  out["convicting"] = std::move(convicting);
  out["default"] = "acquit";
  return out;
}

Disposition disposition_from_json(const Json& json, std::size_t catalog_cap) {
  reject_unknown_keys(json, {"catalog", "convicting", "default"}, "disposition file");
  if (!json.contains("catalog")) throw Error(ErrorKind::kParseError, "disposition file needs 'catalog'");
  if (!json.contains("convicting") || !json["convicting"].is_array()) {
    throw Error(ErrorKind::kParseError, "disposition file needs a 'convicting' array");
  }
  if (json.contains("default") && json["default"] != "acquit") {
    throw Error(ErrorKind::kParseError, "only \"acquit\" is supported as 'default'");
  }
  TestimonyCatalog catalog = read_catalog(json["catalog"], catalog_cap);
  std::set<Transcript> convicting;
  for (const auto& entry : json["convicting"]) {
    auto labels = read_labels(entry, "convicting transcript");
    convicting.insert(Transcript::from_labels(catalog, labels));
  }
  return Disposition(std::move(catalog), std::move(convicting));
}

Json certificate_to_json(const RationalizationCertificate& cert, const Disposition& f) {
  Json out;
  out["theta"] = to_string(cert.theta);
  out["catalog"] = labels_json(f.catalog().labels());
  out["guilt_prior"] = to_string(cert.guilt_prior);
  Json rows = Json::array();
  for (const auto& row : cert.posteriors) {
    Json r;
    r["transcript"] = labels_json(row.transcript.labels(f.catalog()));
    r["verdict"] = row.verdict == Verdict::kConvict ? "convict" : "acquit";
    r["posterior"] = to_string(row.posterior);
    rows.push_back(std::move(r));
  }
  out["posteriors"] = std::move(rows);
  out["prior"] = charge_to_json(cert.prior, f.catalog());
  return out;
}

std::string certificate_table(const RationalizationCertificate& cert, const Disposition& f) {
  std::ostringstream out;
  out << "theta        " << to_string(cert.theta) << "\n";
  out << "P(E_G)       " << to_string(cert.guilt_prior) << "\n";
  out << std::left << std::setw(24) << "transcript" << std::setw(10) << "verdict" << std::setw(12) << "P(E_G|E_T)"
      << "approx\n";
  for (const auto& row : cert.posteriors) {
    std::string name = "{";
    bool first = true;
    for (const auto& l : row.transcript.labels(f.catalog())) {
      if (!first) name += ",";
      name += l;
      first = false;
    }
    name += "}";
    out << std::left << std::setw(24) << name << std::setw(10)
        << (row.verdict == Verdict::kConvict ? "convict" : "acquit") << std::setw(12) << to_string(row.posterior)
        << "~" << to_approx_decimal(row.posterior) << "\n";
  }
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace juror::io
