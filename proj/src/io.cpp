#include "eip/io.hpp"

#include <fstream>
#include <sstream>

namespace eip {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? std::string("document") : path) + ": " + msg);
}

const Json& field_of(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t int_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t size_of(const Json& j, const std::string& path) {
  const auto v = int_of(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

PrimeField field_from(const Json& j) {
  const auto p = int_of(field_of(j, "p", ""), "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail("p", "modulus " + std::to_string(p) + " is not prime");
  try {
    return PrimeField(static_cast<std::uint64_t>(p));
  } catch (const Error& e) {
    fail("p", e.what());
  }
}

void check_type(const Json& j, const char* want) {
  if (!j.is_object()) fail("", "expected an object");
  auto it = j.find("type");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != want))
    fail("type", std::string("expected \"") + want + "\"");
}

Matrix matrix_from(const Json& j, const PrimeField& f, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of rows");
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = j[i];
    if (!row.is_array()) fail(rp, "expected a row");
    if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, f.reduce(int_of(row[c], rp + "[" + std::to_string(c) + "]")));
  }
  return m;
}

Json scalars(std::span<const Scalar> v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalars(m.row(i)));
  return rows;
}

Json to_json(const BeilinsonRep& rep) {
  Json maps = Json::array();
  for (const auto& level : rep.maps()) {
    Json arrows = Json::array();
    for (const auto& a : level) arrows.push_back(to_json(a));
    maps.push_back(std::move(arrows));
  }
  return Json{{"type", "beilinson"}, {"p", rep.field().p()}, {"n", rep.n()}, {"r", rep.r()},
              {"dims", rep.dims()}, {"maps", std::move(maps)}};
}

Json to_json(const ErModule& m) {
  Json ops = Json::array();
  for (const auto& op : m.ops()) ops.push_back(to_json(op));
  return Json{{"type", "er-module"}, {"p", m.field().p()}, {"r", m.r()}, {"dim", m.dim()}, {"ops", std::move(ops)}};
}

Json to_json(const ProjPoint& a) { return scalars(a.coords()); }

Json to_json(const JordanType& jt) {
  return Json{{"counts", jt.counts}, {"text", jt.to_string()}};
}

Json to_json(const PropertyReport& rep) {
  Json w = Json::array();
  for (const auto& x : rep.witnesses) w.push_back(Json{{"alpha", to_json(x.alpha)}, {"level", x.level}});
  Json j{{"property", to_string(rep.property)}, {"j", rep.j}, {"verdict", rep.verdict}, {"route", rep.route},
         {"points", rep.field_tag}, {"witnesses", std::move(w)}};
  if (!rep.profile.empty()) {
    Json prof = Json::array();
    for (const auto& p : rep.profile) prof.push_back(Json{{"alpha", to_json(p.alpha)}, {"ranks", p.ranks}});
    j["profile"] = std::move(prof);
  }
  return j;
}

Json to_json(const TauOrbitReport& rep) {
  Json shifts = Json::array();
  for (const auto& s : rep.shifts)
    shifts.push_back(Json{{"m", s.m}, {"dims", s.dims}, {"eip", s.eip}, {"ekp", s.ekp},
                          {"hit_projective", s.hit_projective}, {"hit_injective", s.hit_injective},
                          {"coxeter", s.coxeter}});
  return Json{{"base", rep.base}, {"k_max", rep.k_max}, {"dim_cap", rep.dim_cap}, {"shifts", std::move(shifts)},
              {"m0", optional_int(rep.m0)}, {"m1", optional_int(rep.m1)}, {"width", optional_int(rep.width)},
              {"notes", rep.notes}};
}

Json to_json(const IndecResult& r) {
  Json pr = Json::array();
  for (const auto& p : r.projectors) pr.push_back(to_json(p));
  return Json{{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"projectors", std::move(pr)}};
}

Json to_json(const Classification& c) {
  return Json{{"class", to_string(c.kind)}, {"exponent", c.exponent}, {"tits_form", c.tits},
              {"indecomposable", to_json(c.indecomposability)}, {"notes", c.notes}};
}

Json to_json(const EndAlgebra& e) {
  return Json{{"dim", e.dim()}, {"commutative", e.commutative}, {"local", e.local},
              {"regime", to_string(e.regime)}};
}

Json to_json(const IsoResult& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

BeilinsonRep rep_from_json(const Json& j) {
  check_type(j, "beilinson");
  const PrimeField f = field_from(j);
  const auto n = static_cast<int>(int_of(field_of(j, "n", ""), "n"));
  const auto r = static_cast<int>(int_of(field_of(j, "r", ""), "r"));
  if (n < 2) fail("n", "B(n, r) requires n >= 2");
  if (r < 1) fail("r", "B(n, r) requires r >= 1");
  const Json& dj = field_of(j, "dims", "");
  if (!dj.is_array() || dj.size() != static_cast<std::size_t>(n))
    fail("dims", "expected a list of " + std::to_string(n) + " dimensions");
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < dj.size(); ++v) dims.push_back(size_of(dj[v], "dims[" + std::to_string(v) + "]"));
  const Json& mj = field_of(j, "maps", "");
  if (!mj.is_array() || mj.size() != static_cast<std::size_t>(n - 1))
    fail("maps", "expected " + std::to_string(n - 1) + " levels");
  std::vector<std::vector<Matrix>> maps;
  for (int i = 0; i + 1 < n; ++i) {
    const std::string lp = "maps[" + std::to_string(i) + "]";
    const Json& level = mj[static_cast<std::size_t>(i)];
    if (!level.is_array() || level.size() != static_cast<std::size_t>(r))
      fail(lp, "expected " + std::to_string(r) + " arrows");
    std::vector<Matrix> arrows;
    for (int l = 0; l < r; ++l)
      arrows.push_back(matrix_from(level[static_cast<std::size_t>(l)], f, dims[static_cast<std::size_t>(i) + 1],
                                   dims[static_cast<std::size_t>(i)], lp + "[" + std::to_string(l) + "]"));
    maps.push_back(std::move(arrows));
  }
  return BeilinsonRep(f, n, r, std::move(dims), std::move(maps));
}

ErModule ermodule_from_json(const Json& j) {
  check_type(j, "er-module");
  const PrimeField f = field_from(j);
  const auto r = static_cast<int>(int_of(field_of(j, "r", ""), "r"));
  if (r < 1) fail("r", "kE_r requires r >= 1");
  const std::size_t dim = size_of(field_of(j, "dim", ""), "dim");
  const Json& oj = field_of(j, "ops", "");
  if (!oj.is_array() || oj.size() != static_cast<std::size_t>(r))
    fail("ops", "expected " + std::to_string(r) + " operators");
  std::vector<Matrix> ops;
  for (int l = 0; l < r; ++l)
    ops.push_back(matrix_from(oj[static_cast<std::size_t>(l)], f, dim, dim, "ops[" + std::to_string(l) + "]"));
  return ErModule(f, r, dim, std::move(ops));
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

// Objects and nested arrays one entry per line; arrays of scalars inline.
void dump_to(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      dump_to(out, value, indent + 2);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      dump_to(out, j[k], indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  dump_to(out, j, 0);
  return out + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace eip
