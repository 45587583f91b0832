#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "eip/io.hpp"

using namespace eip;

namespace {

struct Job {
  std::string command;
  std::uint64_t p = 5;
  int n = 2;
  int r = 3;
  std::string family;
  std::string input;
  std::string input2;
  std::string alpha;
  bool all_alpha = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  int k_max = 8;
  int jobs = 0;
  std::string format = "json";
  std::string output;
  std::string property = "eip";
  std::string route = "definition";
  int i = 0;
  int j = 1;
  int m = 3;
  int d = 2;
  int s = 0;
  std::string lambda;
  bool forget_grading = false;
  std::string dot;
  std::size_t dim_cap = 2000;
};

Json job_json(const Job& job) {
  Json j{{"command", job.command}};
  if (job.command == "construct") {
    j["family"] = job.family;
    j["p"] = job.p;
    j["n"] = job.n;
    j["r"] = job.r;
    Json params;
    if (job.family == "projective" || job.family == "injective" || job.family == "simple") params["i"] = job.i;
    if (job.family == "m-module" || job.family == "w-module") params = Json{{"m", job.m}, {"d", job.d}};
    if (job.family == "x-module") params = Json{{"alpha", job.alpha}, {"i", job.i}, {"j", job.j}};
    if (job.family == "e-lambda") params["lambda"] = job.lambda;
    if (job.family == "radical-power") params["s"] = job.s;
    j["params"] = params.is_null() ? Json::object() : params;
    j["forget"] = job.forget_grading;
  } else {
    j["input"] = job.input;
    if (!job.input2.empty()) j["input2"] = job.input2;
  }
  j["flags"] = Json{{"alpha", job.alpha}, {"all_alpha", job.all_alpha}, {"samples", job.samples},
                    {"seed", job.seed},   {"k_max", job.k_max},         {"jobs", job.jobs},
                    {"format", job.format}};
  if (job.command == "check") {
    j["flags"]["property"] = job.property;
    j["flags"]["route"] = job.route;
    j["flags"]["j"] = job.j;
  }
  return j;
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(std::string("--") + what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ParameterError(std::string("--") + what + " needs a comma-separated list");
  return out;
}

ProjPoint parse_point(const PrimeField& f, const std::string& text, int r) {
  auto v = parse_list(text, "alpha");
  if (v.size() != static_cast<std::size_t>(r))
    throw ParameterError("--alpha needs " + std::to_string(r) + " coordinates");
  Vector c;
  for (auto x : v) c.push_back(f.reduce(x));
  return ProjPoint(f, c);
}

CheckOptions check_options(const Job& job) {
  CheckOptions o;
  o.jobs = job.jobs;
  o.samples = job.samples;
  o.seed = job.seed;
  return o;
}

SearchOptions search_options(const Job& job) {
  SearchOptions o;
  o.seed = job.seed;
  return o;
}

void emit(const Job& job, Json body, const std::string& text) {
  std::string out;
  if (job.format == "json") {
    body["job"] = job_json(job);
    out = dump_canonical(body);
  } else {
    out = text;
  }
  if (job.output.empty()) std::cout << out;
  else write_text_file(job.output, out);
}

struct Loaded {
  std::optional<BeilinsonRep> rep;
  std::optional<ErModule> module;
};

// Returns nullopt after printing a validation report.
std::optional<Loaded> load(const std::string& path) {
  Json j = read_json_file(path);
  Loaded l;
  if (j.is_object() && j.contains("type") && j["type"] == "er-module") {
    l.module = ermodule_from_json(j);
    auto bad = validate(*l.module);
    if (!bad.empty()) {
      std::cerr << path << ": not a kE_r-module:\n";
      for (const auto& b : bad) std::cerr << "  " << b << "\n";
      return std::nullopt;
    }
    return l;
  }
  l.rep = rep_from_json(j);
  auto bad = validate(*l.rep);
  if (!bad.empty()) {
    std::cerr << path << ": commutativity relations fail:\n";
    for (const auto& v : bad)
      std::cerr << "  level " << v.level << ", arrows " << v.arrow_a << " and " << v.arrow_b << "\n";
    return std::nullopt;
  }
  return l;
}

BeilinsonRep require_rep(const Loaded& l, const std::string& path) {
  if (!l.rep) throw ParameterError(path + ": expected a B(n, r)-representation");
  return *l.rep;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

int cmd_construct(const Job& job) {
  const PrimeField f(job.p);
  std::optional<BeilinsonRep> rep;
  std::optional<ErModule> mod;
  if (job.family == "projective") rep = projective(f, job.n, job.r, job.i);
  else if (job.family == "injective") rep = injective(f, job.n, job.r, job.i);
  else if (job.family == "simple") rep = simple(f, job.n, job.r, job.i);
  else if (job.family == "m-module") rep = m_module(f, job.n, job.r, job.m, job.d);
  else if (job.family == "w-module") rep = w_module(f, job.n, job.r, job.m, job.d);
  else if (job.family == "x-module") {
    if (job.alpha.empty()) throw ParameterError("x-module requires --alpha");
    rep = x_module(f, job.n, job.r, parse_point(f, job.alpha, job.r), job.i, job.j);
  } else if (job.family == "e-lambda") {
    if (job.lambda.empty()) throw ParameterError("e-lambda requires --lambda");
    rep = e_lambda(f, job.r, parse_list(job.lambda, "lambda"));
  } else if (job.family == "radical-power") mod = group_algebra_radical_power(f, job.r, job.s);
  else throw ParameterError("unknown family '" + job.family + "'");
  if (job.forget_grading && rep) {
    mod = forget(*rep);
    rep.reset();
  }
  Json j = rep ? to_json(*rep) : to_json(*mod);
  const std::string text = dump_canonical(j);
  if (job.output.empty()) std::cout << text;
  else write_text_file(job.output, text);
  return 0;
}

int cmd_check(const Job& job) {
  auto l = load(job.input);
  if (!l) return 3;
  const BeilinsonRep m = require_rep(*l, job.input);
  const Property prop = parse_property(job.property);
  CheckOptions opts = check_options(job);
  opts.keep_profile = true;
  PropertyReport rep;
  if (job.route == "hom") {
    if (prop == Property::eip) rep = is_eip_hom(m, opts);
    else if (prop == Property::ekp) rep = is_ekp_hom(m, opts);
    else throw ParameterError("--route hom applies to eip and ekp only");
  } else if (job.route == "definition") {
    rep = check_property(m, prop, prop == Property::constant_rank ? job.j : 0, opts);
  } else {
    throw ParameterError("--route must be 'definition' or 'hom'");
  }
  std::ostringstream t;
  t << to_string(prop) << (prop == Property::constant_rank ? "(j=" + std::to_string(job.j) + ")" : "") << ": "
    << (rep.verdict ? "true" : "false") << "  [" << rep.route << "; " << rep.field_tag << "]\n";
  for (const auto& w : rep.witnesses) t << "  fails at " << w.alpha.to_string() << ", level " << w.level << "\n";
  emit(job, Json{{"report", to_json(rep)}}, t.str());
  return rep.verdict ? 0 : 1;
}

int cmd_jordan_type(const Job& job) {
  auto l = load(job.input);
  if (!l) return 3;
  const ErModule m = l->module ? *l->module : forget(*l->rep);
  const PrimeField& f = m.field();
  std::vector<ProjPoint> pts;
  if (!job.alpha.empty() && !job.all_alpha) pts.push_back(parse_point(f, job.alpha, m.r()));
  else pts = check_points(f, m.r(), check_options(job));
  auto jts = map_points<JordanType>(pts, [&](const ProjPoint& a) { return jordan_type(m, a); }, job.jobs);
  bool constant = true;
  Json points = Json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    constant = constant && jts[k] == jts.front();
    points.push_back(Json{{"alpha", to_json(pts[k])}, {"jordan_type", to_json(jts[k])}});
    if (pts.size() <= 64) t << pts[k].to_string() << "  " << jts[k].to_string() << "\n";
  }
  t << (constant ? "constant: " + jts.front().to_string() : std::string("not constant")) << "\n";
  Json body{{"constant", constant}, {"points", std::move(points)}};
  body["jordan_type"] = constant ? Json(jts.front().to_string()) : Json(nullptr);
  emit(job, std::move(body), t.str());
  return 0;
}

OrbitOptions orbit_options(const Job& job) {
  OrbitOptions o;
  o.k_max = job.k_max;
  o.dim_cap = job.dim_cap;
  o.check = check_options(job);
  o.search = search_options(job);
  return o;
}

std::string orbit_text(const TauOrbitReport& r) {
  std::ostringstream t;
  t << r.base << "\n";
  for (const auto& s : r.shifts)
    t << "  tau^" << s.m << "  " << dims_text(s.dims) << (s.eip ? "  EIP" : "") << (s.ekp ? "  EKP" : "") << "\n";
  t << "width: " << (r.width ? std::to_string(*r.width) : std::string("unknown")) << "\n";
  for (const auto& n : r.notes) t << "note: " << n << "\n";
  return t.str();
}

int cmd_orbit(const Job& job, bool width_only) {
  auto l = load(job.input);
  if (!l) return 3;
  const BeilinsonRep m = require_rep(*l, job.input);
  const auto opts = orbit_options(job);
  TauOrbitReport r = width_only ? width(m, opts) : tau_orbit(m, opts);
  if (!job.dot.empty()) write_text_file(job.dot, to_dot(r));
  Json body{{"orbit", to_json(r)}};
  if (!width_only) body["classification"] = to_json(classify(m, opts));
  emit(job, std::move(body), orbit_text(r));
  return 0;
}

int cmd_end_ring(const Job& job) {
  auto l = load(job.input);
  if (!l) return 3;
  const auto opts = search_options(job);
  Json body;
  std::ostringstream t;
  if (l->rep) {
    const auto graded = hom_space(*l->rep, *l->rep);
    std::vector<Matrix> basis;
    for (const auto& phi : graded) basis.push_back(total_matrix(phi));
    const EndAlgebra g = analyze_algebra(basis, opts);
    const IndecResult ind = is_indecomposable(*l->rep, opts);
    body["graded"] = to_json(g);
    body["indecomposable"] = to_json(ind);
    t << "graded End: dim " << g.dim() << ", commutative " << g.commutative << ", local " << g.local << " ("
      << to_string(g.regime) << ")\nindecomposable: " << to_string(ind.verdict) << " (" << ind.reason << ")\n";
    if (static_cast<std::uint64_t>(l->rep->n()) <= l->rep->field().p()) {
      const EndAlgebra u = end_algebra(forget(*l->rep), opts);
      body["ungraded"] = to_json(u);
      t << "End of the kE_r-module: dim " << u.dim() << ", commutative " << u.commutative << ", local " << u.local
        << " (" << to_string(u.regime) << ")\n";
    }
  } else {
    const EndAlgebra u = end_algebra(*l->module, opts);
    const IndecResult ind = is_indecomposable(*l->module, opts);
    body["ungraded"] = to_json(u);
    body["indecomposable"] = to_json(ind);
    t << "End: dim " << u.dim() << ", commutative " << u.commutative << ", local " << u.local << " ("
      << to_string(u.regime) << ")\nindecomposable: " << to_string(ind.verdict) << "\n";
  }
  emit(job, std::move(body), t.str());
  return 0;
}

int cmd_iso(const Job& job) {
  auto a = load(job.input);
  auto b = load(job.input2);
  if (!a || !b) return 3;
  IsoResult r;
  if (a->rep && b->rep) r = is_isomorphic(*a->rep, *b->rep, search_options(job));
  else {
    const ErModule x = a->module ? *a->module : forget(*a->rep);
    const ErModule y = b->module ? *b->module : forget(*b->rep);
    r = is_isomorphic(x, y, search_options(job));
  }
  emit(job, Json{{"iso", to_json(r)}}, "isomorphic: " + to_string(r.verdict) + " (" + r.reason + ")\n");
  return r.verdict == IsoVerdict::yes ? 0 : 1;
}

void add_flags(CLI::App* sub, Job& job, bool with_points, bool with_output = true) {
  sub->add_option("--seed", job.seed, "Seed for randomized steps")->envname("EIPCTL_SEED");
  sub->add_option("--jobs", job.jobs, "Threads for the point loop (0 = runtime default)")->envname("EIPCTL_JOBS");
  sub->add_option("--format", job.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("EIPCTL_FORMAT");
  if (with_output) sub->add_option("-o,--output", job.output, "Write to this file instead of stdout");
  if (with_points) {
    sub->add_option("--alpha", job.alpha, "Point as comma-separated coordinates");
    sub->add_flag("--all-alpha", job.all_alpha, "Every point of P^{r-1}(F_p)");
    sub->add_option("--samples", job.samples, "Check this many random points instead of all")
        ->envname("EIPCTL_SAMPLES");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal images and equal kernels toolkit for B(n, r)-representations"};
  app.require_subcommand(1);
  Job job;

  auto* construct = app.add_subcommand("construct", "Build a module and write canonical JSON");
  construct->add_option("family", job.family, "projective | injective | simple | m-module | w-module | x-module | "
                                              "e-lambda | radical-power")
      ->required();
  construct->add_option("--p", job.p, "Prime")->envname("EIPCTL_P");
  construct->add_option("--n", job.n, "Number of vertices")->envname("EIPCTL_N");
  construct->add_option("--r", job.r, "Arrows per level")->envname("EIPCTL_R");
  construct->add_option("--i", job.i, "Vertex");
  construct->add_option("--j", job.j, "Power of the linear form (x-module)");
  construct->add_option("--m", job.m, "Top degree (m-module, w-module)");
  construct->add_option("--d", job.d, "Number of layers (m-module, w-module)");
  construct->add_option("--s", job.s, "Radical power (radical-power)");
  construct->add_option("--lambda", job.lambda, "Arrow scalars (e-lambda)");
  construct->add_flag("--forget", job.forget_grading, "Write the underlying kE_r-module");
  add_flags(construct, job, true);

  auto* check = app.add_subcommand("check", "Decide a property; exit 0 iff it holds");
  check->add_option("file", job.input)->required()->check(CLI::ExistingFile);
  check->add_option("--property", job.property, "eip | ekp | cr | cjt");
  check->add_option("--j", job.j, "Power for cr");
  check->add_option("--route", job.route, "definition | hom");
  add_flags(check, job, true);

  auto* jt = app.add_subcommand("jordan-type", "Jordan types of the underlying kE_r-module");
  jt->add_option("file", job.input)->required()->check(CLI::ExistingFile);
  add_flags(jt, job, true);

  auto* orbit = app.add_subcommand("tau-orbit", "Scan the tau-orbit (n = 2)");
  auto* wid = app.add_subcommand("width", "Width of the regular component (n = 2)");
  for (auto* sub : {orbit, wid}) {
    sub->add_option("file", job.input)->required()->check(CLI::ExistingFile);
    sub->add_option("--k-max", job.k_max, "Bound on |m|")->envname("EIPCTL_K_MAX");
    sub->add_option("--dim-cap", job.dim_cap, "Largest total dimension to translate");
    sub->add_option("--dot", job.dot, "Also write a Graphviz file");
    add_flags(sub, job, true);
  }

  auto* end = app.add_subcommand("end-ring", "Endomorphism algebra and indecomposability");
  end->add_option("file", job.input)->required()->check(CLI::ExistingFile);
  add_flags(end, job, false);

  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 0 iff certified");
  iso->add_option("first", job.input)->required()->check(CLI::ExistingFile);
  iso->add_option("second", job.input2)->required()->check(CLI::ExistingFile);
  add_flags(iso, job, false);

  CLI11_PARSE(app, argc, argv);

  job.command = app.get_subcommands().front()->get_name();
  try {
    if (*construct) return cmd_construct(job);
    if (*check) return cmd_check(job);
    if (*jt) return cmd_jordan_type(job);
    if (*orbit) return cmd_orbit(job, false);
    if (*wid) return cmd_orbit(job, true);
    if (*end) return cmd_end_ring(job);
    if (*iso) return cmd_iso(job);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
