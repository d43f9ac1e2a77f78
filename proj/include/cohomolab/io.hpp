#pragma once

// File ingestion: group files (multiplication table or permutation
// generators), action files (explicit tables or named constructions), and the
// corpus index used by the golden tests.
//
// Group file:  {"name": str, "order": n, "mul": [[...]]}
//          or  {"name": str, "degree": d, "generators": [[image list], ...]}
// Action file: {"group": name, "set_size": m, "act": [[...]]}
//          or  {"group": name, "kind": "conjugation"}

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohomolab/group.hpp"

namespace cohomolab {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, const std::string& what)
      : std::runtime_error(file + ": " + what) {}
};

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

inline Group load_group_file(const std::string& path) {
  json j = load_json_file(path);
  try {
    std::string name = j.value("name", "unnamed");
    if (j.contains("mul")) {
      auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
      if (j.contains("order") &&
          j.at("order").get<int>() != static_cast<int>(mul.size()))
        throw ParseError(path, "declared order does not match table size");
      return Group::from_table(std::move(name), std::move(mul));
    }
    if (j.contains("generators")) {
      int degree = j.at("degree").get<int>();
      auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
      return Group::from_permutations(std::move(name), degree, gens);
    }
    throw ParseError(path, "expected either \"mul\" or \"generators\"");
  } catch (const json::exception& e) {
    throw ParseError(path, e.what());
  } catch (const GroupValidationError& e) {
    throw ParseError(path, std::string("invalid group: ") + e.what());
  }
}

inline GAction load_action_file(const std::string& path, const Group& group) {
  json j = load_json_file(path);
  try {
    if (j.contains("group")) {
      std::string ref = j.at("group").get<std::string>();
      if (ref != group.name())
        throw ParseError(path, "action references group \"" + ref +
                                   "\" but \"" + group.name() +
                                   "\" was supplied");
    }
    if (j.contains("kind")) {
      std::string kind = j.at("kind").get<std::string>();
      if (kind == "conjugation") return GAction::conjugation(group);
      throw ParseError(path, "unknown action kind \"" + kind + "\"");
    }
    int set_size = j.at("set_size").get<int>();
    auto act = j.at("act").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", "action");
    return GAction::from_table(group, set_size, std::move(act),
                               std::move(name));
  } catch (const json::exception& e) {
    throw ParseError(path, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, std::string("invalid action: ") + e.what());
  }
}

struct CorpusEntry {
  std::string name;
  std::string group_file;
  std::vector<std::string> action_files;
  std::map<std::string, std::string> golden;  // report name -> digest
};

struct CorpusIndex {
  std::string dir;
  std::vector<CorpusEntry> entries;

  const CorpusEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

inline CorpusIndex load_corpus_index(const std::string& dir) {
  json j = load_json_file(dir + "/index.json");
  CorpusIndex idx;
  idx.dir = dir;
  for (const auto& e : j.at("entries")) {
    CorpusEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.group_file = e.at("group").get<std::string>();
    if (e.contains("actions"))
      entry.action_files = e.at("actions").get<std::vector<std::string>>();
    if (e.contains("golden"))
      for (const auto& [k, v] : e.at("golden").items())
        entry.golden[k] = v.get<std::string>();
    idx.entries.push_back(std::move(entry));
  }
  return idx;
}

inline Group load_corpus_group(const CorpusIndex& idx, const std::string& name) {
  const CorpusEntry* e = idx.find(name);
  if (!e) throw ParseError(idx.dir, "no corpus entry named \"" + name + "\"");
  return load_group_file(idx.dir + "/" + e->group_file);
}

}  // namespace cohomolab
