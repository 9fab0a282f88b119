#include "orbicalc/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

#include "orbicalc/errors.hpp"

#ifndef ORBICALC_DEFAULT_CORPUS
#define ORBICALC_DEFAULT_CORPUS "corpus"
#endif

namespace fs = std::filesystem;

namespace orbicalc {

std::string corpus_directory() {
  if (const char* env = std::getenv("ORBICALC_CORPUS"); env && *env) return env;
  return ORBICALC_DEFAULT_CORPUS;
}

NamedGroup parse_group_json(const nlohmann::json& doc, const std::string& fallback_name) {
  if (!doc.is_object()) throw DomainError("group-file", "group file must be a JSON object");
  std::string name = doc.value("name", fallback_name);
  std::string description = doc.value("description", std::string());
  try {
    if (doc.contains("table")) {
      auto table = doc.at("table").get<std::vector<std::vector<int>>>();
      std::vector<std::string> labels;
      if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
      FiniteGroup g(std::move(table), std::move(labels));
      if (doc.contains("order") && doc.at("order").get<int>() != g.order())
        throw DomainError("declared-order", "declared order does not match table");
      return {name, description, std::move(g)};
    }
    if (doc.contains("generators")) {
      const int degree = doc.at("degree").get<int>();
      auto gens = doc.at("generators").get<std::vector<Permutation>>();
      FiniteGroup g = group_from_generators(degree, gens);
      if (doc.contains("order") && doc.at("order").get<int>() != g.order())
        throw DomainError("declared-order", "declared order " + std::to_string(doc.at("order").get<int>()) +
                                                " does not match generated order " + std::to_string(g.order()));
      return {name, description, std::move(g)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("group-file", std::string("malformed group file: ") + e.what());
  }
  throw DomainError("group-file", "group file needs either \"table\" or \"degree\"+\"generators\"");
}

NamedGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("group-file", "cannot open group file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("group-file", "'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_group_json(doc, fs::path(path).stem().string());
}

NamedGroup resolve_group(const std::string& path_or_name) {
  if (fs::is_regular_file(path_or_name)) return load_group_file(path_or_name);
  const fs::path candidate = fs::path(corpus_directory()) / (path_or_name + ".json");
  if (fs::is_regular_file(candidate)) return load_group_file(candidate.string());
  throw DomainError("group-file", "no group file or corpus entry named '" + path_or_name + "'");
}

const std::vector<NamedGroup>& load_corpus(const std::string& dir) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<std::vector<NamedGroup>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[dir];
  if (slot) return *slot;
  if (!fs::is_directory(dir)) throw DomainError("corpus", "corpus directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  auto groups = std::make_unique<std::vector<NamedGroup>>();
  for (const auto& f : files) groups->push_back(load_group_file(f.string()));
  std::stable_sort(groups->begin(), groups->end(), [](const NamedGroup& a, const NamedGroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  slot = std::move(groups);
  return *slot;
}

std::vector<NamedGroup> corpus_groups_up_to(int max_order, const std::string& dir) {
  std::vector<NamedGroup> out;
  for (const auto& g : load_corpus(dir))
    if (g.group.order() <= max_order) out.push_back(g);
  return out;
}

const NamedGroup& corpus_group(const std::string& name, const std::string& dir) {
  for (const auto& g : load_corpus(dir))
    if (g.name == name) return g;
  throw DomainError("corpus", "no corpus group named '" + name + "'");
}

nlohmann::ordered_json group_to_json(const NamedGroup& g, int degree, const std::vector<Permutation>& generators) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name;
  doc["description"] = g.description;
  doc["order"] = g.group.order();
  doc["degree"] = degree;
  doc["generators"] = generators;
  return doc;
}

}  // namespace orbicalc
