#include "lalg/runner.hpp"

#include "lalg/complex_struct.hpp"
#include "lalg/errors.hpp"
#include "lalg/matched.hpp"
#include "lalg/models.hpp"
#include "lalg/poisson.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace lalg {

namespace {

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw Error("");
    return v;
  } catch (...) {
    throw Error(std::string("expected an integer ") + what + ", got " + s);
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) throw Error("expected lo..hi, got " + s);
  int lo = parse_int(s.substr(0, dots), "range bound");
  int hi = parse_int(s.substr(dots + 2), "range bound");
  if (lo > hi) throw Error("empty weight range " + s);
  return {lo, hi};
}

// matrix literal [a, b; c, d] with polynomial entries
PolyMat parse_matrix(const ChartPtr& chart, const std::string& text) {
  std::string s = text;
  auto strip = [](std::string v) {
    size_t a = v.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    size_t b = v.find_last_not_of(" \t");
    return v.substr(a, b - a + 1);
  };
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error("matrix literal must be bracketed: " + text);
  s = s.substr(1, s.size() - 2);
  PolyMat out;
  if (strip(s).empty()) return out;
  std::istringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    PolyVec r;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) r.push_back(Poly::parse(chart, cell));
    out.push_back(std::move(r));
  }
  return out;
}

// generator combination: comma separated terms, each "gen", "-gen" or
// "<poly>*gen" with the generator after the last star
PolyVec parse_combo(const PresPtr& p, const std::string& text) {
  const ChartPtr& chart = p->chart();
  PolyVec out(p->rank(), Poly(chart));
  auto strip = [](std::string v) {
    size_t a = v.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    size_t b = v.find_last_not_of(" \t");
    return v.substr(a, b - a + 1);
  };
  std::string s = strip(text);
  if (s.empty() || s == "0") return out;
  std::istringstream terms(s);
  std::string term;
  auto gen_index = [&](const std::string& name) {
    for (int i = 0; i < p->rank(); ++i)
      if (p->gen_name(i) == name) return i;
    throw Error("unknown generator " + name);
  };
  while (std::getline(terms, term, ',')) {
    term = strip(term);
    if (term.empty()) throw Error("empty term in " + text);
    size_t star = term.rfind('*');
    if (star == std::string::npos) {
      Scalar c(1);
      if (term[0] == '-') {
        c = Scalar(-1);
        term = strip(term.substr(1));
      }
      out[gen_index(term)] += Poly::constant(chart, c);
    } else {
      std::string coeff = strip(term.substr(0, star));
      std::string gen = strip(term.substr(star + 1));
      out[gen_index(gen)] += Poly::parse(chart, coeff);
    }
  }
  return out;
}

const std::string& need(const ManifestBlock& b, const std::string& key) {
  const ManifestEntry* e = b.find(key);
  if (!e) throw Error(b.type + " " + b.name + " needs " + key);
  return e->value;
}

ChartPtr build_chart(const Manifest& m) {
  auto charts = m.of_type("chart");
  if (charts.empty()) return Chart::create({});
  const ManifestBlock& b = *charts[0];
  std::vector<VarSpec> vars;
  for (const ManifestEntry* e : b.all("var")) {
    auto w = words(e->value);
    if (w.empty() || w.size() > 2) throw Error("var takes a name and an optional weight");
    VarSpec v;
    v.name = w[0];
    if (w.size() == 2) v.weight = parse_int(w[1], "variable weight");
    vars.push_back(std::move(v));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const ManifestEntry* e : b.all("pair")) {
    auto w = words(e->value);
    if (w.size() != 2) throw Error("pair takes two variable names");
    pairs.emplace_back(w[0], w[1]);
  }
  if (pairs.empty()) return Chart::create(std::move(vars));
  return Chart::create(std::move(vars), pairs);
}

PresPtr build_algebroid(const ChartPtr& chart, const ManifestBlock& b) {
  std::vector<std::string> names = words(need(b, "generators"));
  int r = static_cast<int>(names.size());
  int n = chart->size();
  std::vector<int> weights(r, 0);
  if (const ManifestEntry* e = b.find("weights")) {
    auto w = words(e->value);
    if (static_cast<int>(w.size()) != r) throw Error("one weight per generator");
    for (int i = 0; i < r; ++i) weights[i] = parse_int(w[i], "generator weight");
  }
  PolyMat anchor(r, PolyVec(n, Poly(chart)));
  if (const ManifestEntry* e = b.find("anchor")) {
    anchor = parse_matrix(chart, e->value);
    if (static_cast<int>(anchor.size()) != r)
      throw Error("anchor needs one row per generator");
    for (auto& row : anchor)
      if (static_cast<int>(row.size()) != n)
        throw Error("anchor needs one column per variable");
  }
  std::vector<std::vector<PolyVec>> structure(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
  std::vector<std::vector<bool>> seen(r, std::vector<bool>(r, false));
  auto gen_index = [&](const std::string& name) {
    for (int i = 0; i < r; ++i)
      if (names[i] == name) return i;
    throw Error("unknown generator " + name);
  };
  for (const ManifestEntry* e : b.all("bracket")) {
    size_t colon = e->value.find(':');
    if (colon == std::string::npos) throw Error("bracket needs gi gj : value");
    auto lhs = words(e->value.substr(0, colon));
    if (lhs.size() != 2) throw Error("bracket takes two generators");
    int i = gen_index(lhs[0]);
    int j = gen_index(lhs[1]);
    if (i == j) throw Error("bracket of a generator with itself is zero");
    if (seen[i][j]) throw Error("bracket " + lhs[0] + " " + lhs[1] + " given twice");
    seen[i][j] = seen[j][i] = true;
    // placeholder presentation carrying the generator names for the parser
    PolyVec v(r, Poly(chart));
    {
      PolyMat a0(r, PolyVec(n, Poly(chart)));
      std::vector<std::vector<PolyVec>> c0(
          r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
      PresPtr stub = AlgebroidPresentation::create(chart, names, weights, a0, c0);
      v = parse_combo(stub, e->value.substr(colon + 1));
    }
    for (int k = 0; k < r; ++k) {
      structure[i][j][k] = v[k];
      structure[j][i][k] = Scalar(-1) * v[k];
    }
  }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), std::move(structure));
}

PresPtr build_model(const ChartPtr& chart, const ManifestBlock& b) {
  const std::string& kind = need(b, "kind");
  if (kind == "tangent") return tangent_algebroid(chart);
  if (kind == "foliation")
    return foliation_algebroid(chart, parse_int(need(b, "leaf"), "leaf count")).pres;
  if (kind == "lie_algebra") {
    std::vector<std::string> names;
    if (const ManifestEntry* e = b.find("generators")) names = words(e->value);
    int r = names.empty() ? parse_int(need(b, "rank"), "rank") : static_cast<int>(names.size());
    if (names.empty())
      for (int i = 0; i < r; ++i) names.push_back("e" + std::to_string(i + 1));
    ChartPtr point = Chart::create({});
    std::vector c(r, std::vector(r, std::vector(r, Scalar(0))));
    auto gen_index = [&](const std::string& name) {
      for (int i = 0; i < r; ++i)
        if (names[i] == name) return i;
      throw Error("unknown generator " + name);
    };
    for (const ManifestEntry* e : b.all("bracket")) {
      size_t colon = e->value.find(':');
      if (colon == std::string::npos) throw Error("bracket needs gi gj : value");
      auto lhs = words(e->value.substr(0, colon));
      if (lhs.size() != 2) throw Error("bracket takes two generators");
      int i = gen_index(lhs[0]);
      int j = gen_index(lhs[1]);
      std::string rhs = e->value.substr(colon + 1);
      std::istringstream terms(rhs);
      std::string term;
      while (std::getline(terms, term, ',')) {
        size_t a = term.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t z = term.find_last_not_of(" \t");
        term = term.substr(a, z - a + 1);
        if (term == "0") continue;
        size_t star = term.rfind('*');
        Scalar coeff(1);
        std::string gen = term;
        if (star != std::string::npos) {
          Poly cp = Poly::parse(point, term.substr(0, star));
          gen = term.substr(star + 1);
          size_t g = gen.find_first_not_of(" \t");
          gen = gen.substr(g, gen.find_last_not_of(" \t") - g + 1);
          coeff = cp.is_zero() ? Scalar(0) : cp.terms().begin()->second;
        } else if (term[0] == '-') {
          coeff = Scalar(-1);
          gen = term.substr(1);
        }
        int k = gen_index(gen);
        c[i][j][k] += coeff;
        c[j][i][k] -= coeff;
      }
    }
    return lie_algebra_point(c, names);
  }
  throw Error("unknown model kind " + kind);
}

std::vector<PolyMat> parse_matrix_list(const ChartPtr& chart, const ManifestBlock& b,
                                       const std::string& key, int count, int dim) {
  std::vector<PolyMat> out;
  for (const ManifestEntry* e : b.all(key)) {
    PolyMat m = parse_matrix(chart, e->value);
    if (static_cast<int>(m.size()) != dim)
      throw Error(key + " matrix must be " + std::to_string(dim) + " by " +
                  std::to_string(dim));
    for (auto& row : m)
      if (static_cast<int>(row.size()) != dim)
        throw Error(key + " matrix must be " + std::to_string(dim) + " by " +
                    std::to_string(dim));
    out.push_back(std::move(m));
  }
  if (out.empty())
    out.assign(count, PolyMat(dim, PolyVec(dim, Poly(chart))));
  if (static_cast<int>(out.size()) != count)
    throw Error("expected " + std::to_string(count) + " " + key + " matrices");
  return out;
}

// named objects built from the manifest, in declaration order
struct Env {
  ChartPtr chart;
  std::map<std::string, PresPtr> algebroids;
  std::map<std::string, Representation> reps;
  std::map<std::string, MatchedPair> pairs;
  std::map<std::string, PoissonBivector> poissons;
  std::map<std::string, AlmostComplexStructure> acss;
  std::map<std::string, std::string> broken;  // name -> build error

  const PresPtr& algebroid(const std::string& name) const {
    auto it = algebroids.find(name);
    if (it == algebroids.end()) {
      auto br = broken.find(name);
      throw Error(br != broken.end() ? name + " failed to build: " + br->second
                                     : name + " is not an algebroid");
    }
    return it->second;
  }
  const PoissonBivector& poisson(const std::string& name) const {
    auto it = poissons.find(name);
    if (it == poissons.end()) {
      auto br = broken.find(name);
      throw Error(br != broken.end() ? name + " failed to build: " + br->second
                                     : name + " is not a poisson tensor");
    }
    return it->second;
  }
};

Env build_env(const Manifest& m) {
  Env env;
  env.chart = build_chart(m);
  for (const auto& b : m.blocks) {
    try {
      if (b.type == "algebroid") {
        env.algebroids.emplace(b.name, build_algebroid(env.chart, b));
      } else if (b.type == "model") {
        env.algebroids.emplace(b.name, build_model(env.chart, b));
      } else if (b.type == "representation") {
        const PresPtr& on = env.algebroid(need(b, "on"));
        int rank = parse_int(need(b, "rank"), "module rank");
        std::vector<int> vw;
        if (const ManifestEntry* e = b.find("weights")) {
          for (const auto& w : words(e->value))
            vw.push_back(parse_int(w, "value weight"));
        }
        auto gamma = parse_matrix_list(env.chart, b, "gamma", on->rank(), rank);
        env.reps.emplace(b.name, Representation::create(on, std::move(gamma), vw));
      } else if (b.type == "matched_pair") {
        const PresPtr& a1 = env.algebroid(need(b, "a1"));
        const PresPtr& a2 = env.algebroid(need(b, "a2"));
        auto g12 = parse_matrix_list(env.chart, b, "nabla12", a1->rank(), a2->rank());
        auto g21 = parse_matrix_list(env.chart, b, "nabla21", a2->rank(), a1->rank());
        env.pairs.emplace(b.name,
                          make_matched(a1, a2, std::move(g12), std::move(g21)));
      } else if (b.type == "poisson") {
        PolyMat p = parse_matrix(env.chart, need(b, "coefficients"));
        env.poissons.emplace(b.name, PoissonBivector::from_matrix(env.chart, p));
      } else if (b.type == "acs") {
        const PresPtr& on = env.algebroid(need(b, "on"));
        PolyMat j = parse_matrix(env.chart, need(b, "j"));
        PolyMat jm(env.chart->size(),
                   PolyVec(env.chart->size(), Poly(env.chart)));
        if (const ManifestEntry* e = b.find("jm")) jm = parse_matrix(env.chart, e->value);
        env.acss.emplace(b.name, AlmostComplexStructure::create(on, j, jm));
      }
    } catch (const Error& err) {
      env.broken.emplace(b.name, err.what());
    }
  }
  return env;
}

// ---- task runner ----

struct Sink {
  std::vector<TaskRecord>* records;
  std::ostringstream* table;
  std::string task;
  std::string object;

  void rec(const std::string& key, const std::string& value) const {
    records->push_back({task, object, sanitize(key), sanitize(value)});
    (*table) << "  " << key << " = " << value << "\n";
  }
  void raw(const TaskRecord& r) const {
    records->push_back(r);
    (*table) << "  " << r.key << " = " << r.value << "\n";
  }
};

// runs f on each weight of [lo, hi]; results are merged in weight order no
// matter how the work is scheduled
std::vector<std::vector<TaskRecord>> per_weight(
    int lo, int hi, int threads,
    const std::function<std::vector<TaskRecord>(int)>& f) {
  int count = hi - lo + 1;
  std::vector<std::vector<TaskRecord>> out(count);
  std::vector<std::string> errs(count);
  int workers = std::min(threads, count);
  if (workers <= 1) {
    for (int k = 0; k < count; ++k) out[k] = f(lo + k);
    return out;
  }
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= count) return;
      try {
        out[k] = f(lo + k);
      } catch (const std::exception& e) {
        errs[k] = e.what();
        if (errs[k].empty()) errs[k] = "task error";
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (int k = 0; k < count; ++k)
    if (!errs[k].empty()) throw Error(errs[k]);
  return out;
}

struct TaskContext {
  const Env* env;
  RunOptions opt;
  bool* failed;
};

void run_verify(const TaskContext& cx, const Sink& s, const std::string& name) {
  const Env& env = *cx.env;
  if (auto it = env.algebroids.find(name); it != env.algebroids.end()) {
    AxiomReport ar = validate_presentation(it->second);
    s.rec("axioms", ar.ok() ? "pass" : "fail");
    if (!ar.ok()) {
      s.rec("witness", ar.witness);
      *cx.failed = true;
    }
    WeightReport wr = check_homogeneity(it->second);
    s.rec("grading", wr.ok ? "pass" : "fail");
    if (!wr.ok) {
      s.rec("witness", wr.violations.empty() ? "inhomogeneous" : wr.violations[0]);
      *cx.failed = true;
    }
    return;
  }
  if (auto it = env.reps.find(name); it != env.reps.end()) {
    RepReport rr = validate_representation(it->second);
    s.rec("flatness", rr.ok() ? "pass" : "fail");
    if (!rr.ok()) {
      s.rec("witness", rr.witness);
      *cx.failed = true;
    }
    return;
  }
  if (auto it = env.acss.find(name); it != env.acss.end()) {
    AcsReport ar = validate_acs(it->second);
    s.rec("endomorphism", ar.ok() ? "pass" : "fail");
    if (!ar.ok()) {
      s.rec("witness", ar.witness);
      *cx.failed = true;
    }
    return;
  }
  throw Error(name + " is not a verifiable object");
}

void run_verify_matched(const TaskContext& cx, const Sink& s, const std::string& name) {
  const Env& env = *cx.env;
  auto it = env.pairs.find(name);
  if (it == env.pairs.end()) throw Error(name + " is not a matched pair");
  MatchedReport mr = check_matched(it->second);
  s.rec("anchors", mr.anchors_ok ? "pass" : "fail");
  s.rec("mixed12", mr.mixed12_ok ? "pass" : "fail");
  s.rec("mixed21", mr.mixed21_ok ? "pass" : "fail");
  s.rec("flat12", mr.flat12_ok ? "pass" : "fail");
  s.rec("flat21", mr.flat21_ok ? "pass" : "fail");
  if (!mr.ok()) {
    s.rec("witness", mr.witness);
    *cx.failed = true;
  }
}

void emit_betti(const TaskContext& cx, const Sink& s,
                const std::function<BettiTable(int)>& table_of) {
  auto rows = per_weight(cx.opt.wlo, cx.opt.whi, cx.opt.threads, [&](int w) {
    BettiTable bt = table_of(w);
    std::vector<TaskRecord> recs;
    for (size_t k = 0; k < bt.betti.size(); ++k) {
      if (cx.opt.max_degree && static_cast<int>(k) > *cx.opt.max_degree) break;
      std::ostringstream key;
      key << "w=" << w << " k=" << k;
      recs.push_back({s.task, s.object, key.str(), std::to_string(bt.betti[k])});
    }
    return recs;
  });
  for (const auto& chunk : rows)
    for (const auto& r : chunk) s.raw(r);
}

void run_betti(const TaskContext& cx, const Sink& s, const std::string& name) {
  const PresPtr& p = cx.env->algebroid(name);
  emit_betti(cx, s, [&](int w) { return betti(ScalarComplexModel(p), w); });
}

// matched pair object, or a skew pair assembled from two tensors
MatchedPair resolve_pair(const Env& env, const std::vector<std::string>& names) {
  if (names.size() == 1) {
    auto it = env.pairs.find(names[0]);
    if (it != env.pairs.end()) return it->second;
    throw Error(names[0] + " is not a matched pair");
  }
  if (names.size() == 2)
    return skew_pair(env.poisson(names[0]), env.poisson(names[1]));
  throw Error("expected a matched pair or two tensors");
}

void run_total_betti(const TaskContext& cx, const Sink& s,
                     const std::vector<std::string>& names) {
  MatchedPair mp = resolve_pair(*cx.env, names);
  emit_betti(cx, s, [&](int w) {
    DoubleComplexSlice dc = double_complex(mp, w);
    DoubleReport dr = check_double(dc);
    if (!dr.ok()) throw Error("double complex check failed: " + dr.witness);
    return betti(total_complex(dc), w);
  });
}

void run_lichnerowicz_betti(const TaskContext& cx, const Sink& s,
                            const std::string& name) {
  const PoissonBivector& p = cx.env->poisson(name);
  JacobiReport jr = jacobi_check(p);
  if (!jr.ok) throw Error("tensor fails the Jacobi identity");
  LichnerowiczComplexModel model(p);
  emit_betti(cx, s, [&](int w) { return betti(model, w); });
}

void run_spectral(const TaskContext& cx, const Sink& s,
                  const std::vector<std::string>& names) {
  const Env& env = *cx.env;
  const std::string& name = names[0];
  if (names.size() == 2 || env.pairs.count(name)) {
    MatchedPair mp = resolve_pair(env, names);
    auto rows = per_weight(cx.opt.wlo, cx.opt.whi, cx.opt.threads, [&](int w) {
      std::vector<TaskRecord> recs;
      DoubleComplexSlice dc = double_complex(mp, w);
      DoubleReport dr = check_double(dc);
      if (!dr.ok()) throw Error("double complex check failed: " + dr.witness);
      SpectralResult sp = spectral_pages(dc);
      const std::vector<std::vector<int>>* pages[3] = {&sp.e0, &sp.e1, &sp.e2};
      for (int r = 0; r < 3; ++r)
        for (size_t p = 0; p < pages[r]->size(); ++p)
          for (size_t q = 0; q < (*pages[r])[p].size(); ++q) {
            int d = (*pages[r])[p][q];
            if (d == 0) continue;
            std::ostringstream key;
            key << "w=" << w << " E" << r << " p=" << p << " q=" << q;
            recs.push_back({s.task, s.object, key.str(), std::to_string(d)});
          }
      return recs;
    });
    for (const auto& chunk : rows)
      for (const auto& r : chunk) s.raw(r);
    return;
  }
  if (auto it = env.acss.find(name); it != env.acss.end()) {
    SplitPresentation sp = split_presentation(it->second);
    auto rows = per_weight(cx.opt.wlo, cx.opt.whi, cx.opt.threads, [&](int w) {
      std::vector<TaskRecord> recs;
      FilteredComplex fc = filtration_slices(sp, w);
      for (const FilteredPage& page : filtered_pages(fc, 2)) {
        for (const auto& [pq, d] : page.dims) {
          std::ostringstream key;
          key << "w=" << w << " E" << page.r << " p=" << pq.first
              << " q=" << pq.second;
          recs.push_back({s.task, s.object, key.str(), std::to_string(d)});
        }
      }
      return recs;
    });
    for (const auto& chunk : rows)
      for (const auto& r : chunk) s.raw(r);
    return;
  }
  throw Error(name + " is not a matched pair or complex structure");
}

void run_nijenhuis(const TaskContext& cx, const Sink& s, const std::string& name) {
  auto it = cx.env->acss.find(name);
  if (it == cx.env->acss.end()) throw Error(name + " is not a complex structure");
  AcsReport ar = validate_acs(it->second);
  if (!ar.ok()) throw Error("invalid structure: " + ar.witness);
  NijenhuisReport nr = nijenhuis(it->second);
  s.rec("integrable", nr.ok ? "yes" : "no");
  const PresPtr& p = it->second.pres;
  for (const auto& [i, k, v] : nr.values) {
    if (v.is_zero()) continue;
    std::ostringstream key;
    key << "N(" << p->gen_name(i) << "," << p->gen_name(k) << ")";
    s.rec(key.str(), v.str());
  }
}

void run_split(const TaskContext& cx, const Sink& s, const std::string& name) {
  auto it = cx.env->acss.find(name);
  if (it == cx.env->acss.end()) throw Error(name + " is not a complex structure");
  AcsReport ar = validate_acs(it->second);
  if (!ar.ok()) throw Error("invalid structure: " + ar.witness);
  SplitFrames fr = split_complexified(it->second);
  for (size_t i = 0; i < fr.holo.size(); ++i)
    s.rec("holo " + std::to_string(i + 1), fr.holo[i].str());
  for (size_t i = 0; i < fr.anti.size(); ++i)
    s.rec("anti " + std::to_string(i + 1), fr.anti[i].str());
}

void run_jacobi(const TaskContext& cx, const Sink& s, const std::string& name) {
  const PoissonBivector& p = cx.env->poisson(name);
  JacobiReport jr = jacobi_check(p);
  s.rec("jacobi", jr.ok ? "pass" : "fail");
  if (!jr.ok) {
    s.rec("witness", jr.witness.str());
    *cx.failed = true;
  }
}

void run_skew_pair(const TaskContext& cx, const Sink& s,
                   const std::vector<std::string>& names) {
  if (names.size() != 2) throw Error("skew-pair takes two tensors");
  const PoissonBivector& p1 = cx.env->poisson(names[0]);
  const PoissonBivector& p2 = cx.env->poisson(names[1]);
  MatchedPair mp = skew_pair(p1, p2);
  s.rec("rank1", std::to_string(mp.a1->rank()));
  s.rec("rank2", std::to_string(mp.a2->rank()));
  MatchedReport mr = check_matched(mp);
  s.rec("matched", mr.ok() ? "pass" : "fail");
  if (!mr.ok()) {
    s.rec("witness", mr.witness);
    *cx.failed = true;
  }
}

void run_bihamiltonian(const TaskContext& cx, const Sink& s,
                       const std::vector<std::string>& names) {
  if (names.size() != 2) throw Error("bihamiltonian takes two tensors");
  const PoissonBivector& p1 = cx.env->poisson(names[0]);
  const PoissonBivector& p2 = cx.env->poisson(names[1]);
  BihamiltonianReport br = bihamiltonian_check(p1, p2);
  s.rec("jacobi1", br.jacobi1_ok ? "pass" : "fail");
  s.rec("jacobi2", br.jacobi2_ok ? "pass" : "fail");
  s.rec("compatible", br.mixed_ok ? "pass" : "fail");
  if (!br.ok()) {
    if (!br.witness.is_zero()) s.rec("witness", br.witness.str());
    *cx.failed = true;
  }
}

}  // namespace

std::string records_to_tsv(const std::vector<TaskRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records)
    os << r.task << '\t' << r.object << '\t' << r.key << '\t' << r.value << '\n';
  return os.str();
}

RunReport run_tasks(const Manifest& m, const RunOptions& opt) {
  RunReport report;
  std::ostringstream table;
  Env env = build_env(m);
  for (const auto& b : m.blocks) {
    if (b.type != "task") continue;
    TaskContext cx{&env, opt, &report.failed};
    if (const ManifestEntry* e = b.find("weights")) {
      try {
        auto [lo, hi] = parse_range(e->value);
        cx.opt.wlo = lo;
        cx.opt.whi = hi;
      } catch (const Error& err) {
        table << "== " << b.name << "\n";
        Sink s{&report.records, &table, b.name, ""};
        s.rec("error", err.what());
        report.failed = true;
        continue;
      }
    }
    if (const ManifestEntry* e = b.find("max-degree"))
      cx.opt.max_degree = parse_int(e->value, "degree bound");
    std::vector<std::string> names;
    if (const ManifestEntry* e = b.find("object")) names = words(e->value);
    std::string object;
    for (const auto& n : names) {
      if (!object.empty()) object += ' ';
      object += n;
    }
    table << "== " << b.name << (object.empty() ? "" : " " + object) << "\n";
    Sink s{&report.records, &table, b.name, object};
    if (opt.verbose) std::cerr << "running " << b.name << " " << object << "\n";
    try {
      if (names.empty()) throw Error("task needs an object");
      const std::string& name = names[0];
      if (b.name == "verify") run_verify(cx, s, name);
      else if (b.name == "verify-matched") run_verify_matched(cx, s, name);
      else if (b.name == "betti") run_betti(cx, s, name);
      else if (b.name == "total-betti") run_total_betti(cx, s, names);
      else if (b.name == "spectral") run_spectral(cx, s, names);
      else if (b.name == "nijenhuis") run_nijenhuis(cx, s, name);
      else if (b.name == "split") run_split(cx, s, name);
      else if (b.name == "jacobi") run_jacobi(cx, s, name);
      else if (b.name == "lichnerowicz-betti") run_lichnerowicz_betti(cx, s, name);
      else if (b.name == "skew-pair") run_skew_pair(cx, s, names);
      else if (b.name == "bihamiltonian") run_bihamiltonian(cx, s, names);
      else throw Error("unknown task " + b.name);
    } catch (const std::exception& err) {
      s.rec("error", err.what());
      report.failed = true;
    }
  }
  report.table = table.str();
  return report;
}

}  // namespace lalg
