#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbicalc/group.hpp"

namespace orbicalc {

struct NamedGroup {
  std::string name;
  std::string description;
  FiniteGroup group;
};

/// $ORBICALC_CORPUS if set, otherwise the corpus directory of the source tree.
std::string corpus_directory();

/// Accepts {"degree": n, "generators": [[...], ...]} or {"table": [[...], ...]};
/// optional "name", "description", "order" (checked when present).
NamedGroup parse_group_json(const nlohmann::json& doc, const std::string& fallback_name = "");
NamedGroup load_group_file(const std::string& path);

/// Resolves an existing file path first, then a corpus name ("s3" -> <corpus>/s3.json).
NamedGroup resolve_group(const std::string& path_or_name);

/// Every corpus group, ordered by (order, name). One entry per isomorphism class for
/// every order up to 24. Loaded once per directory and cached.
const std::vector<NamedGroup>& load_corpus(const std::string& dir = corpus_directory());

std::vector<NamedGroup> corpus_groups_up_to(int max_order, const std::string& dir = corpus_directory());

const NamedGroup& corpus_group(const std::string& name, const std::string& dir = corpus_directory());

nlohmann::ordered_json group_to_json(const NamedGroup& g, int degree, const std::vector<Permutation>& generators);

}  // namespace orbicalc
