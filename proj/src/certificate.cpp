#include "gim/certificate.hpp"

#include <json.hpp>

#include "gim/errors.hpp"
#include "gim/generators.hpp"
#include "gim/graph_io.hpp"

namespace gim {

using ojson = nlohmann::ordered_json;

ModelKind parse_kind(const std::string& s) {
  if (s == "minor") return ModelKind::Minor;
  if (s == "induced_minor" || s == "induced") return ModelKind::InducedMinor;
  throw InvalidInput("unknown model kind '" + s + "'");
}

std::string certificate_to_json(const Certificate& c) {
  ojson j;
  j["host"] = io::to_graph6(c.model.host);
  j["pattern"] = c.pattern_tag.empty() ? io::to_graph6(c.model.pattern) : c.pattern_tag;
  j["kind"] = to_string(c.kind);
  ojson sets = ojson::array();
  for (const auto& x : c.model.branch_sets) sets.push_back(x.members());
  j["branch_sets"] = std::move(sets);
  j["provenance"] = c.provenance;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw InvalidInput(std::string("certificate: ") + e.what());
  }
  try {
    Certificate c;
    c.model.host = io::from_graph6(j.at("host").get<std::string>());
    const auto pattern = j.at("pattern").get<std::string>();
    if (pattern.find(':') != std::string::npos) {
      c.pattern_tag = pattern;
      c.model.pattern = gen::from_tag(pattern);
    } else {
      c.model.pattern = io::from_graph6(pattern);
    }
    c.kind = parse_kind(j.at("kind").get<std::string>());
    for (const auto& x : j.at("branch_sets")) c.model.branch_sets.emplace_back(x.get<std::vector<Vertex>>());
    if (j.contains("provenance")) c.provenance = j["provenance"].get<std::string>();
    return c;
  } catch (const ojson::exception& e) {
    throw InvalidInput(std::string("certificate: ") + e.what());
  }
}

}  // namespace gim
