#include "minorlab/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "minorlab/graph6.hpp"
#include "minorlab/minor.hpp"

namespace minorlab {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

json LemmaReport::to_json() const {
  json j;
  j["id"] = id;
  j["params"] = params;
  j["instances_checked"] = instances_checked;
  json cex = json::array();
  for (const auto& c : counterexamples) cex.push_back({{"graph6", c.graph6}, {"context", c.context}});
  j["counterexamples"] = cex;
  j["verdict"] = verified() ? "verified" : "counterexample";
  j["witnesses_stored"] = witnesses_stored;
  j["wall_ms"] = wall_ms;
  j["config"] = config;
  return j;
}

LemmaReport report_from_json(const json& j) {
  LemmaReport r;
  r.id = j.at("id").get<std::string>();
  r.params = j.at("params");
  r.instances_checked = j.at("instances_checked").get<uint64_t>();
  for (const auto& c : j.at("counterexamples"))
    r.counterexamples.push_back({c.at("graph6").get<std::string>(), c.at("context").get<std::string>()});
  r.witnesses_stored = j.at("witnesses_stored").get<uint64_t>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.config = j.at("config");
  return r;
}

void ReportWriter::append(const LemmaReport& report) const {
  if (!enabled()) return;
  fs::create_directories(dir_);
  std::ofstream out(fs::path(dir_) / "reports.jsonl", std::ios::app);
  if (!out) throw std::runtime_error("cannot open reports.jsonl under " + dir_);
  out << report.to_json().dump() << "\n";
}

std::string ReportWriter::witness_dir(const std::string& id) const {
  return (fs::path(dir_) / "witnesses" / id).string();
}

void ReportWriter::store_witness(const std::string& id, const std::string& key,
                                 const json& doc) const {
  if (!enabled()) return;
  fs::path dir = fs::path(dir_) / "witnesses" / id;
  fs::create_directories(dir);
  std::ofstream out(dir / (key + ".json"));
  if (!out) throw std::runtime_error("cannot write witness " + key);
  out << doc.dump() << "\n";
}

uint64_t revalidate_witnesses(const std::string& dir) {
  fs::path root = fs::path(dir) / "witnesses";
  if (!fs::exists(root)) return 0;
  uint64_t checked = 0;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    json doc = json::parse(in);
    std::string kind = doc.at("kind").get<std::string>();
    Graph host = graph6_decode(doc.at("host").get<std::string>());
    if (kind == "minor") {
      Graph pattern = graph6_decode(doc.at("pattern").get<std::string>());
      MinorModel model;
      for (const auto& bs : doc.at("branch_sets")) {
        VertexSet set;
        for (const auto& v : bs) set = set.with(v.get<int>());
        model.branch_sets.push_back(set);
      }
      if (!is_valid_model(host, pattern, model))
        throw std::runtime_error("invalid stored minor model: " + path.string());
    } else if (kind == "rooted_k4") {
      RootedModel model;
      VertexSet roots;
      const auto& rts = doc.at("roots");
      const auto& sets = doc.at("branch_sets");
      for (int i = 0; i < 4; ++i) {
        model.roots[i] = rts.at(i).get<int>();
        roots = roots.with(model.roots[i]);
        VertexSet set;
        for (const auto& v : sets.at(i)) set = set.with(v.get<int>());
        model.branch_sets[i] = set;
      }
      if (!is_valid_rooted_model(host, roots, model))
        throw std::runtime_error("invalid stored rooted model: " + path.string());
    } else {
      throw std::runtime_error("unknown witness kind in " + path.string());
    }
    ++checked;
  }
  return checked;
}

}  // namespace minorlab
