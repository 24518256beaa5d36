#include "gc/ideals.hpp"

#include <limits>
#include <sstream>

namespace gc {

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a && b > std::numeric_limits<uint64_t>::max() / a) return std::numeric_limits<uint64_t>::max();
  return a * b;
}

uint64_t option_count(const Summand& s) {
  switch (s.kind) {
    case SummandKind::Field: return 2;
    case SummandKind::C2: return 3;
    default: return s.field + 3;
  }
}

BlockIdeal option_at(const FieldTable& F, const Summand& s, uint64_t j) {
  uint64_t m = option_count(s);
  if (j == 0) return {IdealKind::Zero, ZERO};
  if (j == m - 1) return {IdealKind::Full, ZERO};
  if (s.kind == SummandKind::C2) return c2_mid();
  if (j == 1) return {IdealKind::E01, ZERO};
  if (j == 2) return {IdealKind::Row, ZERO};
  return {IdealKind::Row, F.pow(s.tau, int64_t(j - 3))};
}

BlockValue single(const Decomposition& D, size_t k, const Mat2& m) {
  BlockValue v = bv_zero(D);
  v[k] = m;
  return v;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

BlockIdeal c2_mid() { return {IdealKind::Row, 0}; }

Mat2 ideal_generator(const Decomposition& D, size_t k, const BlockIdeal& b) {
  const Summand& s = D.sum[k];
  switch (b.kind) {
    case IdealKind::Zero: return Mat2{};
    case IdealKind::Full:
      return s.kind == SummandKind::Field ? Mat2::make(0, ZERO, ZERO, ZERO) : Mat2::identity();
    case IdealKind::E01: return Mat2::make(ZERO, 0, ZERO, ZERO);
    case IdealKind::Row:
      if (s.kind == SummandKind::C2) return Mat2::make(0, 0, 0, 0);
      return Mat2::make(0, b.lambda, ZERO, ZERO);
  }
  return Mat2{};
}

int ideal_rank(const Decomposition& D, size_t k, const BlockIdeal& b) {
  switch (b.kind) {
    case IdealKind::Zero: return 0;
    case IdealKind::Full: return D.sum[k].is_matrix() ? 2 : 1;
    default: return 1;
  }
}

void validate(const Decomposition& D, const IdealSpec& sp) {
  if (sp.parts.size() != D.sum.size()) throw FieldError("spec has the wrong number of summands");
  for (size_t k = 0; k < sp.parts.size(); ++k) {
    const Summand& s = D.sum[k];
    const BlockIdeal& b = sp.parts[k];
    bool ok = true;
    if (s.kind == SummandKind::Field)
      ok = b.kind == IdealKind::Zero || b.kind == IdealKind::Full;
    else if (s.kind == SummandKind::C2)
      ok = b.kind != IdealKind::E01 && (b.kind != IdealKind::Row || b.lambda == 0);
    else if (b.kind == IdealKind::Row)
      ok = b.lambda == ZERO || D.F->in_subfield(b.lambda, s.field);
    if (!ok) throw FieldError("invalid ideal for block#" + std::to_string(k + 1));
  }
}

int ideal_dimension(const Decomposition& D, const IdealSpec& sp) {
  validate(D, sp);
  int dim = 0;
  for (size_t k = 0; k < sp.parts.size(); ++k) {
    const Summand& s = D.sum[k];
    int r = ideal_rank(D, k, sp.parts[k]);
    if (s.kind == SummandKind::C2)
      dim += sp.parts[k].kind == IdealKind::Full ? 2 : r;
    else if (s.kind == SummandKind::Field)
      dim += r * int(s.d);
    else
      dim += 2 * r * int(s.d);
  }
  return dim;
}

IdealSpec zero_spec(const Decomposition& D) { return IdealSpec{std::vector<BlockIdeal>(D.sum.size())}; }

IdealSpec full_spec(const Decomposition& D) {
  return IdealSpec{std::vector<BlockIdeal>(D.sum.size(), BlockIdeal{IdealKind::Full, ZERO})};
}

CodeRecord ideal_to_code(const Decomposition& D, const IdealSpec& sp) {
  validate(D, sp);
  const FieldTable& F = *D.F;
  CodeRecord rec;
  rec.length = D.order();
  rec.gen = Matrix(0, size_t(rec.length));
  auto push = [&](size_t k, const Mat2& m) { rec.gen.append_row(rho_inv(D, single(D, k, m))); };
  for (size_t k = 0; k < sp.parts.size(); ++k) {
    const Summand& s = D.sum[k];
    const BlockIdeal& b = sp.parts[k];
    if (b.kind == IdealKind::Zero) continue;
    if (s.kind == SummandKind::C2) {
      if (b.kind == IdealKind::Full) {
        push(k, Mat2::identity());
        push(k, Mat2::make(ZERO, 0, 0, ZERO));
      } else {
        push(k, ideal_generator(D, k, b));
      }
      continue;
    }
    for (uint32_t t = 0; t < s.d; ++t) {
      Elem c = F.pow(s.tau, t);
      if (s.kind == SummandKind::Field) {
        push(k, Mat2::make(c, ZERO, ZERO, ZERO));
      } else if (b.kind == IdealKind::Full) {
        for (size_t e = 0; e < 4; ++e) {
          Mat2 m;
          m.e[e] = c;
          push(k, m);
        }
      } else {
        Mat2 g = ideal_generator(D, k, b);
        push(k, m2_scale(F, c, g));
        push(k, Mat2::make(ZERO, ZERO, F.mul(c, g(0, 0)), F.mul(c, g(0, 1))));
      }
    }
  }
  rec.k = int(rec.gen.rows);
  return rec;
}

std::optional<IdealSpec> code_to_ideal(const Decomposition& D, const Matrix& gen) {
  const FieldTable& F = *D.F;
  if (gen.rows > 0 && gen.cols != size_t(D.order())) throw FieldError("code length mismatch");
  size_t S = D.sum.size();
  std::vector<Matrix> vecs(S, Matrix(0, 2));
  for (auto& v : vecs) v.cols = 2;
  for (size_t r = 0; r < gen.rows; ++r) {
    auto bv = rho(D, gen.row_vec(r));
    for (size_t k = 0; k < S; ++k) {
      const Mat2& m = bv[k];
      if (D.sum[k].kind == SummandKind::Field)
        vecs[k].append_row({m(0, 0), ZERO});
      else if (D.sum[k].kind == SummandKind::C2)
        vecs[k].append_row({m(0, 0), m(0, 1)});
      else {
        vecs[k].append_row({m(0, 0), m(0, 1)});
        vecs[k].append_row({m(1, 0), m(1, 1)});
      }
    }
  }
  IdealSpec sp = zero_spec(D);
  for (size_t k = 0; k < S; ++k) {
    Matrix b = row_basis(F, vecs[k]);
    BlockIdeal& out = sp.parts[k];
    if (b.rows == 0) continue;
    if (D.sum[k].kind == SummandKind::Field) {
      out.kind = IdealKind::Full;
    } else if (b.rows == 2) {
      out.kind = IdealKind::Full;
    } else if (D.sum[k].kind == SummandKind::C2) {
      if (b.at(0, 0) != 0 || b.at(0, 1) != 0) return std::nullopt;
      out = c2_mid();
    } else if (b.at(0, 0) == ZERO) {
      out.kind = IdealKind::E01;
    } else {
      out = {IdealKind::Row, b.at(0, 1)};
      if (out.lambda != ZERO && !F.in_subfield(out.lambda, D.sum[k].field)) return std::nullopt;
    }
  }
  auto rec = ideal_to_code(D, sp);
  if (!same_row_space(F, gen, rec.gen)) return std::nullopt;
  return sp;
}

Matrix left_ideal_of(const Decomposition& D, const std::vector<Elem>& u) {
  int G = D.order();
  if (int(u.size()) != G) throw FieldError("element length mismatch");
  Matrix m{size_t(G), size_t(G)};
  for (int g = 0; g < G; ++g)
    for (int x = 0; x < G; ++x) m.at(size_t(g), size_t(group_mul(D, g, x))) = u[size_t(x)];
  return row_basis(*D.F, m);
}

bool is_left_ideal(const Decomposition& D, const Matrix& gen) {
  int G = D.order();
  if (gen.rows == 0) return true;
  if (gen.cols != size_t(G)) throw FieldError("code length mismatch");
  Matrix img(0, size_t(G));
  for (int g : {D.index(1, 0), D.index(0, 1)})
    for (size_t r = 0; r < gen.rows; ++r) {
      std::vector<Elem> w(size_t(G), ZERO);
      for (int x = 0; x < G; ++x) w[size_t(group_mul(D, g, x))] = gen.at(r, size_t(x));
      img.append_row(w);
    }
  return contains_rows(*D.F, gen, img);
}

std::string to_string(const Decomposition& D, const IdealSpec& sp) {
  validate(D, sp);
  std::string out;
  for (size_t k = 0; k < sp.parts.size(); ++k) {
    if (k) out += "; ";
    out += "block#" + std::to_string(k + 1) + ": ";
    const BlockIdeal& b = sp.parts[k];
    switch (b.kind) {
      case IdealKind::Zero: out += "zero"; break;
      case IdealKind::Full: out += "full"; break;
      case IdealKind::E01: out += "e01"; break;
      case IdealKind::Row:
        out += "row(λ=";
        out += b.lambda == ZERO ? std::string("zero")
                                : std::to_string(D.F->sub_log(b.lambda, D.sum[k].field));
        out += ")";
        break;
    }
  }
  return out;
}

IdealSpec parse_spec(const Decomposition& D, const std::string& text) {
  IdealSpec sp = zero_spec(D);
  std::vector<char> seen(D.sum.size(), 0);
  std::string t = text;
  for (char& c : t)
    if (c == '\n') c = ';';
  std::stringstream ss(t);
  std::string item;
  size_t pos = 0;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t k = pos;
    if (item.rfind("block#", 0) == 0) {
      size_t colon = item.find(':');
      if (colon == std::string::npos) throw FieldError("bad spec item: " + item);
      k = std::stoul(item.substr(6, colon - 6)) - 1;
      item = trim(item.substr(colon + 1));
    }
    if (k >= D.sum.size()) throw FieldError("block index out of range: " + std::to_string(k + 1));
    if (seen[k]) throw FieldError("block listed twice: " + std::to_string(k + 1));
    seen[k] = 1;
    pos = k + 1;
    BlockIdeal& b = sp.parts[k];
    if (item == "zero")
      b.kind = IdealKind::Zero;
    else if (item == "full")
      b.kind = IdealKind::Full;
    else if (item == "e01")
      b.kind = IdealKind::E01;
    else if (item.rfind("row(", 0) == 0 && item.back() == ')') {
      size_t eq = item.find('=');
      if (eq == std::string::npos) throw FieldError("bad row item: " + item);
      std::string v = trim(item.substr(eq + 1, item.size() - eq - 2));
      b.kind = IdealKind::Row;
      if (v == "zero")
        b.lambda = ZERO;
      else
        b.lambda = D.F->sub_exp(std::stoll(v), D.sum[k].field);
    } else {
      throw FieldError("bad spec item: " + item);
    }
  }
  for (size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw FieldError("missing block#" + std::to_string(k + 1));
  validate(D, sp);
  return sp;
}

std::vector<BlockIdeal> summand_options(const Decomposition& D, size_t k) {
  const Summand& s = D.sum[k];
  std::vector<BlockIdeal> out;
  uint64_t m = option_count(s);
  out.reserve(m);
  for (uint64_t j = 0; j < m; ++j) out.push_back(option_at(*D.F, s, j));
  return out;
}

uint64_t count_ideals(const Decomposition& D) {
  uint64_t c = 1;
  for (auto& s : D.sum) c = sat_mul(c, option_count(s));
  return c;
}

IdealSpec spec_at(const Decomposition& D, uint64_t index) {
  IdealSpec sp = zero_spec(D);
  for (size_t k = D.sum.size(); k-- > 0;) {
    uint64_t m = option_count(D.sum[k]);
    sp.parts[k] = option_at(*D.F, D.sum[k], index % m);
    index /= m;
  }
  if (index) throw FieldError("ideal index out of range");
  return sp;
}

uint64_t enumerate_ideals(const Decomposition& D, const std::function<bool(const IdealSpec&)>& visit,
                          uint64_t budget, const IdealFilter& filter) {
  size_t S = D.sum.size();
  std::vector<std::vector<BlockIdeal>> opts(S);
  uint64_t total = 1;
  for (size_t k = 0; k < S; ++k) {
    if (!filter && total > budget) break;
    for (auto& b : summand_options(D, k))
      if (!filter || filter(k, b)) opts[k].push_back(b);
    total = sat_mul(total, opts[k].size());
  }
  if (total > budget) throw FieldError("ideal enumeration exceeds budget");
  if (total == 0) return 0;
  std::vector<size_t> idx(S, 0);
  IdealSpec sp = zero_spec(D);
  for (size_t k = 0; k < S; ++k) sp.parts[k] = opts[k][0];
  uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(sp)) return visited;
    size_t k = S;
    while (k-- > 0) {
      if (++idx[k] < opts[k].size()) {
        sp.parts[k] = opts[k][idx[k]];
        break;
      }
      idx[k] = 0;
      sp.parts[k] = opts[k][0];
    }
    if (k == size_t(-1)) return visited;
  }
}

}  // namespace gc
