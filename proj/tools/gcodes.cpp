// gcodes: dihedral and quaternion group codes from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "gc/oracle.hpp"
#include "gc/verify.hpp"
#include "gc/weights.hpp"

using json = nlohmann::json;
using namespace gc;

namespace {

struct Config {
  std::string command;
  uint64_t q = 9;
  int n = 16;
  std::string group = "dihedral";
  std::string metric = "hermitian";
  uint64_t budget_exhaustive = uint64_t(1) << 24;
  int isd_sets = 0;
  int isd_weight = 0;
  uint64_t isd_budget = uint64_t(1) << 36;
  uint64_t parity_budget = uint64_t(1) << 32;
  uint64_t seed = 1;
  std::string format = "json";
  std::string cache_dir;
  std::string spec_file;
  std::vector<std::string> spec_text;
  std::string kernel;
  bool timings = false;
  // enumerate / css-search
  bool selforth_only = false;
  std::vector<int> dims;
  uint64_t limit = 1000;
  uint64_t offset = 0;
  uint64_t max_specs = 256;
  bool sample = false;
  bool code_distance = true;
  // verify
  int samples = 200;
  int iso_samples = 500;
  bool matrix = false;

  json to_json() const {
    json j{{"command", command}, {"q", q},         {"n", n},           {"group", group},
           {"metric", metric},   {"seed", seed},   {"format", format}, {"budget_exhaustive", budget_exhaustive},
           {"isd_sets", isd_sets}, {"isd_weight", isd_weight}, {"isd_budget", isd_budget},
           {"parity_budget", parity_budget}};
    if (!spec_file.empty()) j["spec_file"] = spec_file;
    if (!spec_text.empty()) j["spec"] = spec_text;
    if (!dims.empty()) j["dims"] = dims;
    if (command == "enumerate") {
      j["selforth"] = selforth_only;
      j["limit"] = limit;
      j["offset"] = offset;
    }
    if (command == "css-search") {
      j["max_specs"] = max_specs;
      j["sample"] = sample;
      j["code_distance"] = code_distance;
    }
    if (command == "verify") {
      j["samples"] = samples;
      j["iso_samples"] = iso_samples;
    }
    return j;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Algebra {
  std::unique_ptr<FieldTable> F;
  Decomposition D;
  Metric metric = Metric::Euclidean;
  std::string cache_key;
};

Algebra make_algebra(const Config& c, std::vector<std::string>& warnings) {
  if (c.n < 1) throw UsageError("--n must be positive");
  auto [p, m] = prime_power(c.q);
  (void)m;
  if (c.group != "dihedral" && c.group != "quaternion") throw UsageError("--group must be dihedral or quaternion");
  if (c.metric != "euclidean" && c.metric != "hermitian") throw UsageError("--metric must be euclidean or hermitian");
  Algebra A;
  A.metric = c.metric == "hermitian" ? Metric::Hermitian : Metric::Euclidean;
  FactorMode dmode = A.metric == Metric::Hermitian ? FactorMode::Hermitian : FactorMode::Euclidean;
  bool quat = c.group == "quaternion";
  int n = c.n;
  if (quat && A.metric == Metric::Hermitian) {
    warnings.push_back("hermitian quaternion codes are handled through F_q[D_" + std::to_string(2 * n) + "]");
    quat = false;
    n = 2 * n;
  }
  if (quat) {
    A.F = std::make_unique<FieldTable>(p, master_degree(c.q, n, true));
    try {
      A.D = build_quaternion_decomposition(*A.F, n, c.q);
    } catch (const DelegateToDihedral& e) {
      warnings.push_back(std::string("quaternion algebra delegated: ") + e.what());
      quat = false;
      n = 2 * n;
    }
  }
  if (!quat) {
    A.F = std::make_unique<FieldTable>(p, master_degree(c.q, n, false));
    A.D = build_dihedral_decomposition(*A.F, n, c.q, dmode);
  }
  std::ostringstream key;
  key << "p" << A.F->p() << "_M" << A.F->degree() << "_mod";
  for (auto x : conway_polynomial(A.F->p(), A.F->degree())) key << "-" << x;
  key << "_n" << A.D.n << "_" << (A.D.group == GroupKind::Dihedral ? "dihedral" : "quaternion") << "_"
      << mode_name(A.D.fs.mode) << "_q" << c.q;
  A.cache_key = key.str();
  return A;
}

std::string elem_str(const FieldTable& F, Elem x, uint64_t field) {
  if (x == ZERO) return "0";
  if (x == 0) return "1";
  return "g^" + std::to_string(F.sub_log(x, field));
}

json summand_image(const Decomposition& D, const Summand& S, const Mat2& M) {
  const FieldTable& F = *D.F;
  if (S.kind == SummandKind::Field) return elem_str(F, M.e[0], S.field);
  if (S.kind == SummandKind::C2) return json::array({elem_str(F, M.e[0], S.field), elem_str(F, M.e[1], S.field)});
  return json::array({json::array({elem_str(F, M(0, 0), S.field), elem_str(F, M(0, 1), S.field)}),
                      json::array({elem_str(F, M(1, 0), S.field), elem_str(F, M(1, 1), S.field)})});
}

json decomposition_json(const Algebra& A) {
  const Decomposition& D = A.D;
  const FieldTable& F = *D.F;
  json blocks = json::array();
  for (size_t b = 0; b < D.blocks.size(); ++b) {
    const Block& blk = D.blocks[b];
    json comps = json::array();
    for (auto& f : blk.cls.companions) comps.push_back(poly_str(F, f, D.q));
    json sums = json::array();
    for (int k : blk.summands) {
      const Summand& S = D.sum[size_t(k)];
      sums.push_back({{"summand", k + 1},
                      {"kind", summand_kind_name(S.kind)},
                      {"field", S.field},
                      {"rho_a", summand_image(D, S, S.img_a)},
                      {"rho_b", summand_image(D, S, S.img_b)},
                      {"ideals", summand_options(D, size_t(k)).size()}});
    }
    blocks.push_back({{"block", b + 1},
                      {"class", tag_name(blk.cls.tag)},
                      {"side", D.group == GroupKind::Quaternion ? (blk.cls.plus ? "x^n+1" : "x^n-1") : "x^n-1"},
                      {"degree", blk.cls.degree},
                      {"factor", poly_str(F, blk.cls.rep, D.q)},
                      {"companions", comps},
                      {"summands", sums}});
  }
  json j{{"algebra", algebra_name(D)},
         {"order", D.order()},
         {"master_field", json{{"p", F.p()}, {"degree", F.degree()}}},
         {"blocks", blocks},
         {"ideal_count", count_ideals(D)},
         {"note", "g denotes the primitive element of each summand field"}};
  if (D.group == GroupKind::Quaternion)
    j["counts"] = {{"r", D.fs.r}, {"s", D.fs.s}, {"t", D.fs.t}, {"k", D.fs.k}};
  return j;
}

std::vector<std::string> read_specs(const Config& c) {
  std::vector<std::string> out = c.spec_text;
  if (!c.spec_file.empty()) {
    std::ifstream in(c.spec_file);
    if (!in) throw UsageError("cannot read spec file " + c.spec_file);
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      out.push_back(line.substr(b));
    }
  }
  if (out.empty()) throw UsageError("no spec given (--spec or --spec-text)");
  return out;
}

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows r;
  for (size_t i = 0; i < m.rows; ++i) r.push_back(m.row_vec(i));
  return r;
}

json distance_json(const DistanceResult& d) {
  if (d.empty) return {{"value", nullptr}, {"status", "EXACT"}, {"method", d.method}, {"note", "zero code"}};
  return {{"value", d.value},   {"status", status_name(d.status)}, {"lower", d.lower},
          {"upper", d.upper},   {"method", d.method},              {"work", d.work}};
}

// Mixed-radix product of per-block admissible options, canonical order.
struct SelforthSpace {
  std::vector<std::vector<std::vector<BlockIdeal>>> opts;
  uint64_t total = 1;

  SelforthSpace(const Decomposition& D, Metric m) {
    for (size_t b = 0; b < D.blocks.size(); ++b) {
      opts.push_back(selforth_block_options(D, b, m));
      total = opts.back().empty() ? 0 : (total > UINT64_MAX / opts.back().size() ? UINT64_MAX : total * opts.back().size());
    }
  }
  IdealSpec at(const Decomposition& D, uint64_t idx) const {
    IdealSpec s = zero_spec(D);
    for (size_t b = D.blocks.size(); b-- > 0;) {
      uint64_t r = opts[b].size();
      const auto& pick = opts[b][idx % r];
      idx /= r;
      for (size_t i = 0; i < pick.size(); ++i) s.parts[size_t(D.blocks[b].summands[i])] = pick[i];
    }
    return s;
  }
};

bool dim_ok(const Config& c, int k) {
  return c.dims.empty() || std::find(c.dims.begin(), c.dims.end(), k) != c.dims.end();
}

struct Cache {
  std::filesystem::path path;
  json data = json::object();
  bool dirty = false;

  Cache(const Config& c, const Algebra& A) {
    if (c.cache_dir.empty()) return;
    std::filesystem::create_directories(c.cache_dir);
    path = std::filesystem::path(c.cache_dir) / (A.cache_key + ".json");
    std::ifstream in(path);
    if (in) {
      try {
        in >> data;
      } catch (const std::exception&) {
        data = json::object();
      }
    }
    if (!data.contains("key") || data["key"] != A.cache_key) data = {{"key", A.cache_key}};
  }
  bool enabled() const { return !path.empty(); }
  void store() {
    if (!enabled() || !dirty) return;
    std::ofstream out(path);
    out << data.dump(1) << "\n";
  }
};

struct Run {
  Config cfg;
  json results = json::array();
  json timings = json::object();
  std::vector<std::string> warnings;
  int exit_code = 0;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void lap(const std::string& name) {
    if (!cfg.timings) return;
    auto t = std::chrono::steady_clock::now();
    timings[name] = std::chrono::duration<double>(t - t0).count();
    t0 = t;
  }
};

IsdOptions isd_options(const Config& c) {
  IsdOptions o;
  o.work_budget = c.isd_budget;
  o.max_info_sets = c.isd_sets;
  o.max_info_weight = c.isd_weight;
  o.ops = c.kernel.empty() ? nullptr : &kernels::ops_by_name(c.kernel);
  return o;
}

void cmd_decompose(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  R.lap("decompose");
  Cache cache(R.cfg, A);
  json d = decomposition_json(A);
  if (cache.enabled() && !cache.data.contains("decomposition")) {
    cache.data["decomposition"] = d;
    cache.dirty = true;
  }
  cache.store();
  R.results.push_back(d);
}

void cmd_dual(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  const Decomposition& D = A.D;
  const FieldTable& F = *D.F;
  for (auto& text : read_specs(R.cfg)) {
    IdealSpec s = parse_spec(D, text);
    IdealSpec d = dual(D, s, A.metric);
    Matrix gen = ideal_to_code(D, s).gen;
    Matrix dgen = ideal_to_code(D, d).gen;
    bool herm = A.metric == Metric::Hermitian;
    auto od = oracle::dual_nullspace(F, rows_of(gen), size_t(D.order()), herm, D.fs.conj);
    bool ok = oracle::same_space(F, rows_of(dgen), od) && rank(F, gen) == size_t(ideal_dimension(D, s));
    if (!ok) R.exit_code = 1;
    R.results.push_back({{"spec", to_string(D, s)},
                         {"dimension", ideal_dimension(D, s)},
                         {"metric", metric_name(A.metric)},
                         {"dual", to_string(D, d)},
                         {"dual_dimension", ideal_dimension(D, d)},
                         {"self_orthogonal", spec_contained(D, s, d)},
                         {"self_dual", s == d},
                         {"oracle_agrees", ok}});
  }
  R.lap("dual");
}

void cmd_classify(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  const Decomposition& D = A.D;
  for (auto& text : read_specs(R.cfg)) {
    IdealSpec s = parse_spec(D, text);
    json r{{"spec", to_string(D, s)}, {"dimension", ideal_dimension(D, s)}, {"metric", metric_name(A.metric)}};
    bool so = is_selforth(D, s, A.metric);
    r["self_orthogonal"] = so;
    r["self_dual"] = so && dual(D, s, A.metric) == s;
    SelfOrthReport rep;
    bool have_clauses = false;
    if (A.metric == Metric::Hermitian && D.fs.mode == FactorMode::Hermitian) {
      rep = hermitian_selforth(D, s);
      have_clauses = true;
    } else if (D.group == GroupKind::Quaternion) {
      rep = quaternion_euclid_selforth(D, s);
      have_clauses = true;
    }
    if (have_clauses) {
      r["clauses_agree"] = rep.self_orthogonal == so;
      if (rep.self_orthogonal != so) R.exit_code = 1;
      if (!rep.self_orthogonal) {
        r["failing_block"] = rep.failing_block + 1;
        r["reason"] = rep.reason;
      }
    }
    R.results.push_back(r);
  }
  R.lap("classify");
}

void cmd_count(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  const Decomposition& D = A.D;
  json r{{"algebra", algebra_name(D)}, {"metric", metric_name(A.metric)}, {"ideals", count_ideals(D)}};
  std::optional<uint64_t> formula;
  if (A.metric == Metric::Hermitian && D.fs.mode == FactorMode::Hermitian)
    formula = count_hermitian_selforth(D);
  else if (D.group == GroupKind::Quaternion)
    formula = count_euclid_selforth_quaternion(D);
  uint64_t blocks = count_selforth_by_blocks(D, A.metric);
  r["self_orthogonal_by_blocks"] = blocks;
  if (formula) {
    r["self_orthogonal_formula"] = *formula;
    r["agree"] = *formula == blocks;
    if (*formula != blocks) R.exit_code = 1;
  } else {
    r["self_orthogonal_formula"] = nullptr;
  }
  R.results.push_back(r);
  R.lap("count");
}

void cmd_enumerate(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  const Decomposition& D = A.D;
  uint64_t total, emitted = 0, matched = 0;
  std::optional<SelforthSpace> space;
  if (R.cfg.selforth_only) {
    space.emplace(D, A.metric);
    total = space->total;
  } else {
    total = count_ideals(D);
  }
  if (total == UINT64_MAX) R.warnings.push_back("ideal count saturated");
  for (uint64_t i = 0; i < total; ++i) {
    IdealSpec s = space ? space->at(D, i) : spec_at(D, i);
    int k = ideal_dimension(D, s);
    if (!dim_ok(R.cfg, k)) continue;
    if (matched++ < R.cfg.offset) continue;
    if (emitted == R.cfg.limit) {
      R.warnings.push_back("output truncated at --limit " + std::to_string(R.cfg.limit));
      break;
    }
    ++emitted;
    R.results.push_back({{"index", i},
                         {"spec", to_string(D, s)},
                         {"dimension", k},
                         {"self_orthogonal", space ? true : is_selforth(D, s, A.metric)}});
  }
  R.lap("enumerate");
}

json quantum_json(const Decomposition& D, const IdealSpec& s, const QuantumRecord& rec) {
  std::string label = "[[" + std::to_string(rec.n) + "," + std::to_string(rec.kq) + "," + std::to_string(rec.dQ.value) +
                      "]]_" + std::to_string(rec.q_quantum);
  return {{"spec", to_string(D, s)},
          {"n", rec.n},
          {"k", rec.k},
          {"kq", rec.kq},
          {"q_code", rec.q_code},
          {"q_quantum", rec.q_quantum},
          {"self_dual", rec.self_dual},
          {"d_code", rec.dC.method.empty() && !rec.dC.empty ? json(nullptr) : distance_json(rec.dC)},
          {"d_dual", distance_json(rec.dDual)},
          {"d_q", distance_json(rec.dQ)},
          {"floor", rec.dDual.lower},
          {"parameters", label}};
}

// Rechecks an emitted record: self-orthogonality by containment, witness
// weight and witness position relative to C and its hermitian dual.
bool revalidate(const Decomposition& D, const IdealSpec& s, const QuantumRecord& rec) {
  const FieldTable& F = *D.F;
  Matrix gen = ideal_to_code(D, s).gen;
  auto rows = rows_of(gen);
  size_t n = size_t(D.order());
  if (int(rank(F, gen)) != rec.k || rec.kq != rec.n - 2 * rec.k) return false;
  if (!oracle::is_self_orthogonal(F, rows, n, true, D.fs.conj)) return false;
  const auto& w = rec.dQ.witness;
  if (w.empty()) return rec.dQ.status != BoundStatus::Exact || rec.dQ.empty;
  int wt = 0;
  for (Elem x : w) wt += x != ZERO;
  if (wt != rec.dQ.upper) return false;
  auto dualrows = oracle::dual_nullspace(F, rows, n, true, D.fs.conj);
  if (!oracle::contains(F, dualrows, {w})) return false;
  if (!rec.self_dual && oracle::contains(F, rows, {w})) return false;
  return true;
}

void cmd_css_search(Run& R) {
  auto A = make_algebra(R.cfg, R.warnings);
  const Decomposition& D = A.D;
  if (D.group != GroupKind::Dihedral || D.fs.mode != FactorMode::Hermitian)
    throw UsageError("css-search needs --group dihedral --metric hermitian and a square --q");
  Cache cache(R.cfg, A);
  std::vector<IdealSpec> cands;
  if (!R.cfg.spec_file.empty() || !R.cfg.spec_text.empty()) {
    for (auto& t : read_specs(R.cfg)) cands.push_back(parse_spec(D, t));
  } else {
    SelforthSpace space(D, Metric::Hermitian);
    std::vector<uint64_t> idx;
    for (uint64_t i = 0; i < space.total; ++i) {
      IdealSpec s = space.at(D, i);
      int k = ideal_dimension(D, s);
      if (k == 0 || !dim_ok(R.cfg, k)) continue;
      idx.push_back(i);
    }
    if (idx.size() > R.cfg.max_specs) {
      R.warnings.push_back(std::to_string(idx.size()) + " candidates, evaluating " + std::to_string(R.cfg.max_specs) +
                           (R.cfg.sample ? " sampled" : " in canonical order"));
      if (R.cfg.sample) {
        std::mt19937_64 rng(R.cfg.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(R.cfg.max_specs);
        std::sort(idx.begin(), idx.end());
      } else {
        idx.resize(R.cfg.max_specs);
      }
    }
    for (auto i : idx) cands.push_back(space.at(D, i));
  }
  R.lap("candidates");
  CssOptions opt;
  opt.isd = isd_options(R.cfg);
  opt.parity_budget = R.cfg.parity_budget;
  opt.code_distance = R.cfg.code_distance;
  std::string budget_tag = std::to_string(opt.isd.work_budget) + "/" + std::to_string(opt.parity_budget) + "/" +
                           std::to_string(opt.isd.max_info_sets) + "/" + std::to_string(opt.isd.max_info_weight) +
                           (opt.code_distance ? "/c" : "/-");
  struct Row {
    size_t order;
    json j;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < cands.size(); ++i) {
    const IdealSpec& s = cands[i];
    std::string key = to_string(D, s);
    auto rep = hermitian_selforth(D, s);
    if (!rep.self_orthogonal) {
      R.warnings.push_back("skipped, not hermitian self-orthogonal: " + key);
      continue;
    }
    json j;
    if (cache.enabled() && cache.data.contains("css") && cache.data["css"].contains(key) &&
        cache.data["css"][key].value("budgets", "") == budget_tag) {
      j = cache.data["css"][key]["record"];
    } else {
      QuantumRecord rec = css_hermitian(D, s, opt);
      j = quantum_json(D, s, rec);
      bool ok = revalidate(D, s, rec);
      j["revalidated"] = ok;
      if (!ok) R.exit_code = 1;
      if (cache.enabled()) {
        cache.data["css"][key] = {{"budgets", budget_tag}, {"record", j}};
        cache.dirty = true;
      }
    }
    rows.push_back({i, j});
  }
  cache.store();
  auto status_rank = [](const json& d) {
    std::string s = d["status"];
    return s == "EXACT" ? 0 : s == "UPPER_BOUND" ? 1 : 2;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    int ka = a.j["kq"], kb = b.j["kq"];
    if (ka != kb) return ka > kb;
    int da = a.j["d_q"]["value"].is_null() ? 0 : int(a.j["d_q"]["value"]);
    int db = b.j["d_q"]["value"].is_null() ? 0 : int(b.j["d_q"]["value"]);
    if (da != db) return da > db;
    int sa = status_rank(a.j["d_q"]), sb = status_rank(b.j["d_q"]);
    if (sa != sb) return sa < sb;
    return a.order < b.order;
  });
  std::map<int, std::string> best;
  for (auto& r : rows) {
    int kq = r.j["kq"];
    if (!best.count(kq)) best[kq] = r.j["parameters"];
    R.results.push_back(r.j);
  }
  json summary = json::object();
  for (auto& [kq, label] : best) summary[std::to_string(kq)] = label;
  R.results.push_back({{"best_by_kq", summary}});
  R.lap("css");
}

void cmd_verify(Run& R) {
  std::vector<Config> targets;
  if (R.cfg.matrix) {
    for (auto [q, n, g, m] : {std::tuple<uint64_t, int, const char*, const char*>{9, 16, "dihedral", "hermitian"},
                              {4, 7, "dihedral", "hermitian"},
                              {25, 3, "dihedral", "hermitian"},
                              {9, 10, "dihedral", "hermitian"},
                              {11, 7, "quaternion", "euclidean"}}) {
      Config c = R.cfg;
      c.q = q;
      c.n = n;
      c.group = g;
      c.metric = m;
      targets.push_back(c);
    }
  } else {
    targets.push_back(R.cfg);
  }
  VerifyOptions opt;
  opt.dual_samples = R.cfg.samples;
  opt.iso_samples = R.cfg.iso_samples;
  opt.seed = R.cfg.seed;
  for (auto& c : targets) {
    auto A = make_algebra(c, R.warnings);
    auto rep = verify_all(A.D, opt);
    json checks = json::object();
    for (auto& [name, t] : rep.tallies) {
      json e{{"checks", t.checks}, {"failures", t.failures}};
      if (t.failures) e["first_failure"] = t.first_failure;
      checks[name] = e;
    }
    R.results.push_back({{"algebra", rep.algebra}, {"checks", checks}, {"failures", rep.failures()}});
    if (rep.failures()) R.exit_code = 1;
    R.lap(rep.algebra);
  }
}

// CSV/text views flatten nested objects with dotted keys.
void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else {
    out[prefix] = j.dump();
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"') o += '"';
    o += ch;
  }
  return o + "\"";
}

void emit(const Run& R) {
  json doc{{"config", R.cfg.to_json()}, {"results", R.results}, {"timings", R.timings}, {"warnings", R.warnings}};
  if (R.cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::map<std::string, std::string>> flat;
  std::vector<std::string> cols;
  for (auto& r : R.results) {
    std::map<std::string, std::string> m;
    flatten(r, "", m);
    for (auto& [k, v] : m)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    flat.push_back(m);
  }
  if (R.cfg.format == "csv") {
    for (size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << csv_cell(cols[i]);
    std::cout << "\n";
    for (auto& m : flat) {
      for (size_t i = 0; i < cols.size(); ++i) {
        auto it = m.find(cols[i]);
        std::cout << (i ? "," : "") << (it == m.end() ? "" : csv_cell(it->second));
      }
      std::cout << "\n";
    }
  } else {
    for (auto& m : flat) {
      bool first = true;
      for (auto& [k, v] : m) {
        std::cout << (first ? "" : "  ") << k << "=" << v;
        first = false;
      }
      std::cout << "\n";
    }
  }
  for (auto& w : R.warnings) std::cerr << "warning: " << w << "\n";
  if (R.cfg.timings)
    for (auto& [k, v] : R.timings.items()) std::cerr << "time " << k << ": " << v.dump() << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral and quaternion group codes: decompositions, duals, counts and CSS codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Run R;
  Config& c = R.cfg;
  app.add_option("--q", c.q, "Order of the code alphabet (prime power)");
  app.add_option("--n", c.n, "Group parameter: D_n of order 2n, Q_n of order 4n");
  app.add_option("--group", c.group, "dihedral or quaternion")->check(CLI::IsMember({"dihedral", "quaternion"}));
  app.add_option("--metric", c.metric, "euclidean or hermitian")->check(CLI::IsMember({"euclidean", "hermitian"}));
  app.add_option("--budget-exhaustive", c.budget_exhaustive, "Largest q^k for full enumeration");
  app.add_option("--isd-sets", c.isd_sets, "Information sets used by ISD (0: all disjoint)");
  app.add_option("--isd-weight", c.isd_weight, "Largest information weight (0: unbounded)");
  app.add_option("--isd-budget", c.isd_budget, "Codeword budget per ISD run");
  app.add_option("--parity-budget", c.parity_budget, "Column-set budget for dual distance searches");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", c.cache_dir, "Directory for cached decompositions and distances");
  app.add_option("--spec", c.spec_file, "File with one ideal spec per line");
  app.add_option("--spec-text", c.spec_text, "Ideal spec given inline (repeatable)");
  app.add_option("--kernel", c.kernel, "Enumeration kernel: scalar, avx2 or neon");
  app.add_flag("--timings", c.timings, "Report wall-clock timings (output is no longer byte-stable)");

  app.add_subcommand("decompose", "Wedderburn-Artin blocks and generator images");
  app.add_subcommand("dual", "Closed-form dual of each spec, checked against the nullspace");
  app.add_subcommand("classify", "Self-orthogonality of each spec");
  app.add_subcommand("count", "Number of self-orthogonal codes");
  auto* en = app.add_subcommand("enumerate", "List ideals in canonical order");
  en->add_flag("--selforth", c.selforth_only, "Only self-orthogonal ideals for --metric");
  en->add_option("--dims", c.dims, "Keep these dimensions");
  en->add_option("--limit", c.limit, "Maximum number of results");
  en->add_option("--offset", c.offset, "Skip this many matches");
  auto* css = app.add_subcommand("css-search", "Hermitian CSS codes from self-orthogonal ideals");
  css->add_option("--dims", c.dims, "Keep these code dimensions");
  css->add_option("--max-specs", c.max_specs, "Evaluate at most this many candidates");
  css->add_flag("--sample", c.sample, "Sample candidates with --seed instead of taking the first ones");
  css->add_flag("!--no-code-distance", c.code_distance, "Skip d(C)");
  auto* ver = app.add_subcommand("verify", "Oracle equivalence checks; exits 1 on any mismatch");
  ver->add_option("--samples", c.samples, "Random specs per algebra");
  ver->add_option("--iso-samples", c.iso_samples, "Random pairs for the multiplicativity check");
  ver->add_flag("--matrix", c.matrix, "Run the standard test matrix instead of --q/--n");

  CLI11_PARSE(app, argc, argv);
  c.command = app.get_subcommands().front()->get_name();
  try {
    if (c.command == "decompose") cmd_decompose(R);
    else if (c.command == "dual") cmd_dual(R);
    else if (c.command == "classify") cmd_classify(R);
    else if (c.command == "count") cmd_count(R);
    else if (c.command == "enumerate") cmd_enumerate(R);
    else if (c.command == "css-search") cmd_css_search(R);
    else if (c.command == "verify") cmd_verify(R);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  emit(R);
  return R.exit_code;
}
