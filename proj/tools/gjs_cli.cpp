#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gjs/cumulants.hpp"
#include "gjs/errors.hpp"
#include "gjs/f_algebra.hpp"
#include "gjs/factor.hpp"
#include "gjs/gr_algebra.hpp"
#include "gjs/graph_io.hpp"
#include "gjs/verify.hpp"

using json = nlohmann::json;
using namespace gjs;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Common {
  double tol = 1e-9;
  int max_degree = -1;
  std::uint64_t seed = 20240917;
  bool pf = false;
  bool as_json = false;
  std::string star;
  std::vector<double> weights;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

GraphPtr load(const std::string& file, const Common& c) {
  GraphSpec spec = load_graph_spec(file);
  if (c.pf && !c.weights.empty()) throw InputError("--pf and --weights are mutually exclusive");
  if (c.pf)
    for (auto& v : spec.vertices) v.weight2.reset();
  if (!c.weights.empty()) {
    if (c.weights.size() != spec.vertices.size())
      throw InputError("--weights needs one value per vertex (" + std::to_string(spec.vertices.size()) + ")");
    for (std::size_t i = 0; i < c.weights.size(); ++i) spec.vertices[i].weight2 = c.weights[i];
  }
  if (!c.star.empty()) spec.star = c.star;
  return make_graph(spec);
}

// "v,w,v" or "v,w@2,v": w@2 takes the second parallel edge into w.
Path parse_path(const Graph& g, const std::string& text) {
  std::vector<int> vs, pick;
  for (const auto& tok : split(text, ',')) {
    std::string id = tok;
    int which = 0;
    if (auto at = tok.find('@'); at != std::string::npos) {
      id = tok.substr(0, at);
      try {
        which = std::stoi(tok.substr(at + 1)) - 1;
      } catch (const std::exception&) {
        throw InputError("bad parallel edge selector in '" + tok + "'");
      }
      if (which < 0) throw InputError("parallel edge selectors start at 1");
    }
    if (!g.has_vertex(id)) throw InputError("unknown vertex '" + id + "'");
    vs.push_back(g.vertex_index(id));
    if (vs.size() > 1) pick.push_back(which);
  }
  if (vs.empty()) throw InputError("empty path '" + text + "'");
  return path_through(g, vs, pick);
}

std::vector<Path> parse_paths(const Graph& g, const std::string& text) {
  std::vector<Path> out;
  for (const auto& p : split(text, ';')) out.push_back(parse_path(g, p));
  if (out.empty()) throw InputError("no paths given");
  return out;
}

int degree_cap(const Common& c, int fallback) { return c.max_degree < 0 ? fallback : c.max_degree; }

void check_cap(int len, int cap) {
  if (len > cap)
    throw InputError("length " + std::to_string(len) + " exceeds --max-degree " + std::to_string(cap));
}

json b_json(const Graph& g, const BElement& b) {
  json j = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) j[g.vertex(v).id] = b[static_cast<std::size_t>(v)];
  return j;
}

std::string b_text(const Graph& g, const BElement& b) {
  std::string s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!s.empty()) s += "  ";
    s += g.vertex(v).id + ": " + format_number(b[static_cast<std::size_t>(v)]);
  }
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------------ trace

int cmd_trace(const Common& c, const std::string& file, const std::string& loop, bool all, int max_len) {
  GraphPtr g = load(file, c);
  const int cap = degree_cap(c, 10);
  std::vector<Path> paths;
  if (!loop.empty()) paths = parse_paths(*g, loop);
  if (all) {
    check_cap(max_len, cap);
    for (int len = 0; len <= max_len; len += 2)
      for (int v = 0; v < g->vertex_count(); ++v)
        for (auto& p : enumerate_paths(*g, len, v, v)) paths.push_back(std::move(p));
  }
  if (paths.empty()) throw InputError("give --loop or --all-loops");
  json rows = json::array();
  bool ok = true;
  if (!c.as_json) std::printf("%-40s %18s %18s %10s\n", "path", "tau", "t(phi)", "diff");
  for (const auto& p : paths) {
    check_cap(p.length(), cap);
    Element x = Element::basis(g, p);
    const double a = tau(x), b = t_functional(phi(x)), d = std::abs(a - b);
    ok = ok && d <= c.tol;
    if (c.as_json)
      rows.push_back({{"path", to_string(*g, p)}, {"tau", a}, {"t_phi", b}, {"diff", d}});
    else
      std::printf("%-40s %18s %18s %10.3g\n", to_string(*g, p).c_str(), format_number(a).c_str(),
                  format_number(b).c_str(), d);
  }
  if (c.as_json) emit({{"command", "trace"}, {"rows", rows}, {"pass", ok}});
  return ok ? kOk : kFail;
}

// ---------------------------------------------------------------- moments

std::vector<Element> as_elements(const GraphPtr& g, const std::vector<Path>& ps, int cap) {
  std::vector<Element> xs;
  int total = 0;
  for (const auto& p : ps) {
    total += p.length();
    xs.push_back(Element::basis(g, p));
  }
  check_cap(total, cap);
  return xs;
}

int cmd_moments(const Common& c, const std::string& file, const std::string& spec) {
  GraphPtr g = load(file, c);
  auto ps = parse_paths(*g, spec);
  auto xs = as_elements(g, ps, degree_cap(c, 12));
  BElement a = moment(xs), b = moment_fpicture(xs);
  const double d = b_distance(a, b);
  const bool ok = d <= c.tol;
  if (c.as_json) {
    emit({{"command", "moments"}, {"graded", b_json(*g, a)}, {"fpicture", b_json(*g, b)}, {"diff", d}, {"pass", ok}});
  } else {
    std::printf("E(x1...xn), graded product : %s\n", b_text(*g, a).c_str());
    std::printf("E(x1...xn), F picture      : %s\n", b_text(*g, b).c_str());
    std::printf("difference                 : %.3g\n", d);
  }
  return ok ? kOk : kFail;
}

// -------------------------------------------------------------- cumulants

int cmd_cumulants(const Common& c, const std::string& file, const std::string& spec) {
  GraphPtr g = load(file, c);
  auto ps = parse_paths(*g, spec);
  auto xs = as_elements(g, ps, degree_cap(c, 12));
  BElement k = cumulant_mobius(xs);
  json j{{"command", "cumulants"}, {"mobius", b_json(*g, k)}};
  bool ok = true;
  bool all_two = true;
  for (const auto& p : ps) all_two = all_two && p.length() == 2;
  if (!c.as_json) std::printf("kappa (Moebius inversion) : %s\n", b_text(*g, k).c_str());
  if (all_two) {
    BElement cf = cumulant_closed_form(*g, ps);
    const double d = b_distance(k, cf);
    ok = d <= c.tol;
    j["closed_form"] = b_json(*g, cf);
    j["diff"] = d;
    if (!c.as_json) {
      std::printf("kappa (closed form)       : %s\n", b_text(*g, cf).c_str());
      std::printf("difference                : %.3g\n", d);
    }
  } else if (!c.as_json) {
    std::printf("closed form applies only to length-2 paths\n");
  }
  j["pass"] = ok;
  if (c.as_json) emit(j);
  return ok ? kOk : kFail;
}

// --------------------------------------------------------------- freeness

int cmd_freeness(const Common& c, const std::string& file, int order) {
  GraphPtr g = load(file, c);
  if (order < 1) throw InputError("--order must be positive");
  check_cap(2 * order, degree_cap(c, 12));
  FreenessReport r = freeness_certificate(g, order, c.tol);
  if (c.as_json) {
    emit({{"command", "freeness"},
          {"max_order", r.max_order},
          {"tuples_checked", r.tuples_checked},
          {"mixed_tuples", r.mixed_tuples},
          {"max_mixed", r.max_mixed},
          {"max_closed_form_gap", r.max_closed_form_gap},
          {"worst_witness", r.worst_witness},
          {"pass", r.pass}});
  } else {
    std::printf("tuples checked      : %llu (%llu mixed)\n", static_cast<unsigned long long>(r.tuples_checked),
                static_cast<unsigned long long>(r.mixed_tuples));
    std::printf("max mixed cumulant  : %.3g %s\n", r.max_mixed, r.worst_witness.c_str());
    std::printf("closed form gap     : %.3g\n", r.max_closed_form_gap);
    std::printf("verdict             : %s\n", r.pass ? "free with amalgamation (certified to this order)" : "FAILED");
  }
  return r.pass ? kOk : kFail;
}

// ----------------------------------------------------------------- factor

int cmd_factor(const Common& c, const std::string& file) {
  GraphPtr g = load(file, c);
  MGammaReport r = m_gamma_report(*g, c.tol);
  std::optional<OmegaFactor> om;
  if (g->vertex_count() == 2 && g->undirected_edge_count() >= 1) {
    int v = g->vertices_of(Parity::Even).at(0), w = g->vertices_of(Parity::Odd).at(0);
    om = omega_factor(g->multiplicity(v, w), g->mu2(v), g->mu2(w));
  }
  json atoms = json::array(), diffuse = json::array(), other = json::array();
  for (const auto& a : r.atoms) atoms.push_back({{"vertex", g->vertex(a.vertex).id}, {"trace", a.trace}});
  for (const auto& d : r.diffuse)
    diffuse.push_back({{"parameter", std::isnan(d.parameter) ? json(nullptr) : json(d.parameter)}, {"weight", d.weight}});
  for (const auto& o : r.other) other.push_back({{"description", o.description}, {"weight", o.weight}});
  if (c.as_json) {
    json j{{"command", "factor"}, {"atoms", atoms}, {"diffuse", diffuse}, {"other", other},
           {"verdict", r.verdict}, {"notes", r.notes}};
    if (om) j["factor"] = om->is_factor;
    emit(j);
  } else {
    for (int v = 0; v < g->vertex_count(); ++v)
      std::printf("vertex %-8s mu2 = %-16s delta = %s\n", g->vertex(v).id.c_str(), format_number(g->mu2(v)).c_str(),
                  format_number(delta_at(*g, v)).c_str());
    std::printf("M(Gamma) = %s\n", r.verdict.c_str());
    if (om) std::printf("factor   : %s\n", om->is_factor ? "yes" : "no");
    for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
  }
  return kOk;
}

// ------------------------------------------------------------------- gram

int cmd_gram(const Common& c, const std::string& file, bool show) {
  GraphPtr g = load(file, c);
  const int len = degree_cap(c, 4);
  check_cap(len, 8);
  auto paths = enumerate_paths_upto(*g, len);
  std::vector<Element> xs;
  for (const auto& p : paths) xs.push_back(Element::basis(g, p));
  double off = 0, diag = 0, min_diag = INFINITY;
  std::vector<std::vector<double>> m(paths.size(), std::vector<double>(paths.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      m[i][j] = inner(xs[i], xs[j]);
      if (i == j) {
        diag = std::max(diag, std::abs(m[i][j] - g->mu(paths[i].start()) * g->mu(paths[i].finish())));
        min_diag = std::min(min_diag, m[i][j]);
      } else {
        off = std::max(off, std::abs(m[i][j]));
      }
    }
  const bool ok = off <= c.tol && diag <= c.tol && min_diag > 0;
  if (c.as_json) {
    json j{{"command", "gram"}, {"size", paths.size()}, {"max_offdiagonal", off}, {"max_diagonal_error", diag},
           {"min_diagonal", min_diag}, {"pass", ok}};
    if (show) j["matrix"] = m;
    emit(j);
  } else {
    std::printf("paths of length <= %d : %zu\n", len, paths.size());
    std::printf("max |off-diagonal|   : %.3g\n", off);
    std::printf("max diagonal error   : %.3g (against mu(s) mu(f))\n", diag);
    std::printf("min diagonal entry   : %s\n", format_number(min_diag).c_str());
    if (show)
      for (std::size_t i = 0; i < paths.size(); ++i) {
        std::printf("%-28s", to_string(*g, paths[i]).c_str());
        for (double v : m[i]) std::printf(" %9.4f", v);
        std::printf("\n");
      }
  }
  return ok ? kOk : kFail;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Common& c, const std::string& suite, bool fast) {
  VerifyOptions opt;
  opt.fast = fast;
  opt.seed = c.seed;
  opt.tol = c.tol;
  if (c.max_degree >= 0) opt.max_degree = c.max_degree;
  VerificationReport r = run_suite(suite, opt);
  if (c.as_json) {
    json checks = json::array();
    for (const auto& k : r.checks)
      checks.push_back({{"id", k.id}, {"pass", k.pass}, {"witness", k.witness}, {"elapsed_ms", k.elapsed_ms}});
    emit({{"command", "verify"}, {"suite", r.suite}, {"checks", checks}, {"passed", r.passed()},
          {"failed", r.failed()}});
  } else {
    for (const auto& k : r.checks)
      std::printf("%s  %-55s %-28s %8.1f ms\n", k.pass ? "PASS" : "FAIL", k.id.c_str(), k.witness.c_str(),
                  k.elapsed_ms);
    std::printf("%d passed, %d failed\n", r.passed(), r.failed());
  }
  return r.ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph path algebras, their traces, cumulants and factor parameters"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--tol", c.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--max-degree", c.max_degree, "Cap on path lengths");
  app.add_option("--seed", c.seed, "Seed for random property draws")->capture_default_str();
  app.add_flag("--pf", c.pf, "Ignore file weights and use the Perron-Frobenius weighting");
  app.add_flag("--json", c.as_json, "Structured output");
  app.add_option("--star", c.star, "Distinguished vertex id");
  app.add_option("--weights", c.weights, "Vertex weights mu^2 in file order")->delimiter(',');

  std::string file, loop, paths, suite = "all";
  bool all_loops = false, fast = false, show = false;
  int max_len = 4, order = 4;

  auto* trace = app.add_subcommand("trace", "tau via the graded and the F picture");
  trace->add_option("graph", file, "Graph file")->required();
  trace->add_option("--loop", loop, "Paths as vertex lists, ';' separated");
  trace->add_flag("--all-loops", all_loops, "Every loop up to --max-len");
  trace->add_option("--max-len", max_len, "Longest loop for --all-loops")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "B-valued moment E(x1 ... xn) via both pictures");
  moments->add_option("graph", file, "Graph file")->required();
  moments->add_option("--paths", paths, "Arguments as vertex lists, ';' separated")->required();

  auto* cumulants = app.add_subcommand("cumulants", "B-valued free cumulant of basis paths");
  cumulants->add_option("graph", file, "Graph file")->required();
  cumulants->add_option("--paths", paths, "Arguments as vertex lists, ';' separated")->required();

  auto* freeness = app.add_subcommand("freeness", "Certificate that mixed cumulants vanish");
  freeness->add_option("graph", file, "Graph file")->required();
  freeness->add_option("--order", order, "Largest cumulant order")->capture_default_str();

  auto* factor = app.add_subcommand("factor", "Structure of the von Neumann algebra of the graph");
  factor->add_option("graph", file, "Graph file")->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of the path basis");
  gram->add_option("graph", file, "Graph file")->required();
  gram->add_flag("--show", show, "Print the matrix");

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_flag("--fast", fast, "Smaller sizes where possible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*trace) return cmd_trace(c, file, loop, all_loops, max_len);
    if (*moments) return cmd_moments(c, file, paths);
    if (*cumulants) return cmd_cumulants(c, file, paths);
    if (*freeness) return cmd_freeness(c, file, order);
    if (*factor) return cmd_factor(c, file);
    if (*gram) return cmd_gram(c, file, show);
    if (*verify) return cmd_verify(c, suite, fast);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
