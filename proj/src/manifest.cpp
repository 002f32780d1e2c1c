#include "lalg/manifest.hpp"

#include "lalg/errors.hpp"

#include <set>
#include <sstream>

namespace lalg {

namespace {

const std::set<std::string> kBlockTypes = {
    "chart", "algebroid", "model", "representation",
    "matched_pair", "poisson", "acs", "task"};

const std::set<std::string> kTaskKinds = {
    "verify", "verify-matched", "betti", "total-betti", "spectral",
    "nijenhuis", "split", "jacobi", "lichnerowicz-betti", "skew-pair",
    "bihamiltonian"};

// keys whose values name other blocks, per block type
bool is_reference_key(const std::string& type, const std::string& key) {
  if (type == "task") return key == "object";
  if (type == "representation" || type == "acs") return key == "on";
  if (type == "matched_pair") return key == "a1" || key == "a2";
  return false;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw ParseError(msg, line, col);
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

const ManifestEntry* ManifestBlock::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

std::vector<const ManifestEntry*> ManifestBlock::all(const std::string& key) const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries)
    if (e.key == key) out.push_back(&e);
  return out;
}

std::vector<const ManifestBlock*> Manifest::of_type(const std::string& type) const {
  std::vector<const ManifestBlock*> out;
  for (const auto& b : blocks)
    if (b.type == type) out.push_back(&b);
  return out;
}

const ManifestBlock* Manifest::named(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.type != "chart" && b.type != "task" && b.name == name) return &b;
  return nullptr;
}

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  ManifestBlock* open = nullptr;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string body = strip(line);
    if (body.empty()) continue;
    int col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (body.rfind("begin", 0) == 0 &&
        (body.size() == 5 || body[5] == ' ' || body[5] == '\t')) {
      if (open) fail(lineno, col, "begin inside an open block");
      auto w = words(body);
      if (w.size() < 2) fail(lineno, col, "begin needs a block type");
      if (w.size() > 3) fail(lineno, col, "begin takes a type and one name");
      if (!kBlockTypes.count(w[1])) fail(lineno, col, "unknown block type " + w[1]);
      ManifestBlock b;
      b.type = w[1];
      b.line = lineno;
      if (w.size() == 3) b.name = w[2];
      if (b.type == "task") {
        if (b.name.empty()) fail(lineno, col, "task block needs a task kind");
        if (!kTaskKinds.count(b.name))
          fail(lineno, col, "unknown task kind " + b.name);
      } else if (b.type != "chart" && b.name.empty()) {
        fail(lineno, col, b.type + " block needs a name");
      } else if (b.type == "chart" && !b.name.empty()) {
        fail(lineno, col, "chart block takes no name");
      }
      m.blocks.push_back(std::move(b));
      open = &m.blocks.back();
      continue;
    }
    if (body == "end") {
      if (!open) fail(lineno, col, "end outside a block");
      open = nullptr;
      continue;
    }
    if (!open) fail(lineno, col, "content outside a block");
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, col, "expected key = value");
    std::string key = strip(line.substr(0, eq));
    if (key.empty()) fail(lineno, col, "empty key");
    ManifestEntry e;
    e.key = key;
    e.value = strip(line.substr(eq + 1));
    e.line = lineno;
    e.col = static_cast<int>(eq) + 2;
    open->entries.push_back(std::move(e));
  }
  if (open) fail(lineno, 1, "unterminated block " + open->type);
  if (m.blocks.empty()) fail(lineno == 0 ? 1 : lineno, 1, "empty manifest");

  std::set<std::string> names;
  int charts = 0;
  for (const auto& b : m.blocks) {
    if (b.type == "chart") {
      if (++charts > 1) fail(b.line, 1, "more than one chart block");
      continue;
    }
    if (b.type == "task") continue;
    if (!names.insert(b.name).second) fail(b.line, 1, "duplicate name " + b.name);
  }
  for (const auto& b : m.blocks)
    for (const auto& e : b.entries) {
      if (!is_reference_key(b.type, e.key)) continue;
      for (const auto& ref : words(e.value))
        if (!names.count(ref)) fail(e.line, e.col, "reference to undefined object " + ref);
    }
  return m;
}

}  // namespace lalg
