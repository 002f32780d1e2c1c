#include "lalg/errors.hpp"
#include "lalg/manifest.hpp"
#include "lalg/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::pair<int, int> parse_weight_window(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw lalg::Error("--weights expects lo..hi, got " + s);
  size_t lo_used = 0, hi_used = 0;
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(s.substr(0, dots), &lo_used);
    hi = std::stoi(s.substr(dots + 2), &hi_used);
  } catch (...) {
    throw lalg::Error("--weights expects lo..hi, got " + s);
  }
  if (lo_used != dots || hi_used != s.size() - dots - 2 || lo > hi)
    throw lalg::Error("--weights expects lo..hi, got " + s);
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight-sliced cohomology for algebroid presentations"};
  std::string manifest_path;
  std::string out_path;
  std::string weights = "-4..4";
  int threads = 1;
  int max_degree = -1;
  bool verbose = false;
  app.add_option("--manifest", manifest_path, "manifest file to run")->required();
  app.add_option("--out", out_path, "write tab separated records here");
  app.add_option("--weights", weights, "weight window lo..hi (default -4..4)");
  app.add_option("--max-degree", max_degree, "report degrees up to this bound");
  app.add_option("--threads", threads, "worker threads for weight slices");
  app.add_flag("--verbose", verbose, "progress notes on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  lalg::RunOptions opt;
  try {
    auto [lo, hi] = parse_weight_window(weights);
    opt.wlo = lo;
    opt.whi = hi;
  } catch (const lalg::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (max_degree >= 0) opt.max_degree = max_degree;
  opt.threads = threads < 1 ? 1 : threads;
  opt.verbose = verbose;

  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "cannot read " << manifest_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  lalg::Manifest manifest;
  try {
    manifest = lalg::parse_manifest(buf.str());
  } catch (const lalg::ParseError& e) {
    std::cerr << manifest_path << ": " << e.what() << "\n";
    return 2;
  }

  lalg::RunReport report = lalg::run_tasks(manifest, opt);
  std::cout << report.table;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << lalg::records_to_tsv(report.records);
  }
  return report.exit_code();
}
