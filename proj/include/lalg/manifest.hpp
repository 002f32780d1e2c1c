#pragma once

#include <string>
#include <vector>

namespace lalg {

// One block of the line-oriented manifest format:
//
//   begin <type> [name]
//     key = value
//   end
//
// Types: chart, algebroid, model, representation, matched_pair, poisson,
// acs, task. Task blocks carry the task kind in place of a name. '#' starts
// a comment. Keys may repeat; order is preserved.
struct ManifestEntry {
  std::string key;
  std::string value;
  int line = 0;
  int col = 0;
};

struct ManifestBlock {
  std::string type;
  std::string name;
  int line = 0;
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(const std::string& key) const;
  std::vector<const ManifestEntry*> all(const std::string& key) const;
};

struct Manifest {
  std::vector<ManifestBlock> blocks;

  std::vector<const ManifestBlock*> of_type(const std::string& type) const;
  const ManifestBlock* named(const std::string& name) const;
};

// Parses and structurally validates. Throws ParseError with a
// "line L, col C:" prefix on syntax errors, unknown block types or task
// kinds, duplicate object names, dangling references, or an empty manifest.
Manifest parse_manifest(const std::string& text);

}  // namespace lalg
