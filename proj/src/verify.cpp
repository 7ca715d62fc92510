#include "gjs/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "gjs/cdelta.hpp"
#include "gjs/cumulants.hpp"
#include "gjs/epitl.hpp"
#include "gjs/errors.hpp"
#include "gjs/f_algebra.hpp"
#include "gjs/factor.hpp"
#include "gjs/gr_algebra.hpp"
#include "gjs/noncross.hpp"
#include "gjs/planar.hpp"

namespace gjs {

int VerificationReport::passed() const {
  int k = 0;
  for (const auto& c : checks) k += c.pass ? 1 : 0;
  return k;
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"isomorphism", "trace",   "positivity",
                                              "combinatorics", "cdelta", "factor",
                                              "poisson",     "freeness", "planar"};
  return names;
}

namespace {

struct Outcome {
  double deviation = 0;
  std::string failure;

  void see(double d) {
    if (std::isnan(d) || d > deviation) deviation = std::isnan(d) ? INFINITY : d;
  }
  void fail(const std::string& why) {
    if (failure.empty()) failure = why;
  }
};

class Runner {
 public:
  Runner(VerificationReport& rep, double tol) : rep_(rep), tol_(tol) {}

  void run(const std::string& id, const std::function<void(Outcome&)>& body, double tol = -1) {
    const double limit = tol < 0 ? tol_ : tol;
    CheckRecord rec;
    rec.id = id;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rec.pass = out.failure.empty() && out.deviation <= limit;
    if (!out.failure.empty())
      rec.witness = out.failure;
    else
      rec.witness = "max deviation " + format_number(out.deviation, 3);
    rep_.checks.push_back(std::move(rec));
  }

 private:
  VerificationReport& rep_;
  double tol_;
};

struct NamedGraph {
  std::string name;
  GraphPtr g;
};

std::vector<NamedGraph> test_graphs() {
  return {{"A2", graphs::a_n(2)},     {"A3", graphs::a_n(3)},     {"A4", graphs::a_n(4)},
          {"K12", graphs::k1n(2)},    {"K13", graphs::k1n(3)},    {"double-edge", graphs::double_edge()}};
}

GraphPtr starred(const GraphPtr& g, int v = 0) { return std::make_shared<const Graph>(g->with_star(v)); }

Element random_element(const GraphPtr& g, const std::vector<Path>& pool, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> coef(-1, 1);
  Element x(g);
  for (int i = 0; i < terms; ++i) x.add(pool[pick(rng)], coef(rng));
  return x;
}

std::vector<Path> loops_upto(const Graph& g, int max_len, std::optional<int> at = std::nullopt) {
  std::vector<Path> out;
  for (int len = 0; len <= max_len; len += 2)
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (at && *at != v) continue;
      for (auto& p : enumerate_paths(g, len, v, v)) out.push_back(std::move(p));
    }
  return out;
}

// ---------------------------------------------------------------- suites

void suite_isomorphism(Runner& r, const VerifyOptions& opt) {
  for (const auto& [name, g] : test_graphs())
    r.run("phi-psi-inverse/" + name, [&](Outcome& o) {
      for (const auto& p : enumerate_paths_upto(*g, opt.max_degree)) {
        Element x = Element::basis(g, p);
        o.see(distance(phi(psi(x)), x));
        o.see(distance(psi(phi(x)), x));
      }
    });
}

void suite_trace(Runner& r, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (const auto& [name, g] : test_graphs()) {
    r.run("tau-equals-t-phi/" + name, [&](Outcome& o) {
      for (const auto& p : loops_upto(*g, opt.max_degree)) {
        Element x = Element::basis(g, p);
        o.see(std::abs(tau(x) - t_functional(phi(x))));
      }
    });
    r.run("tau-tracial/" + name, [&](Outcome& o) {
      auto pool = enumerate_paths_upto(*g, 3);
      for (int k = 0; k < 100; ++k) {
        Element x = random_element(g, pool, rng, 4), y = random_element(g, pool, rng, 4);
        o.see(std::abs(tau(bullet(x, y)) - tau(bullet(y, x))));
      }
    });
  }
}

void suite_positivity(Runner& r, const VerifyOptions& opt) {
  for (const auto& [name, g] : test_graphs())
    r.run("gram-diagonal/" + name, [&](Outcome& o) {
      auto paths = enumerate_paths_upto(*g, opt.max_degree);
      std::vector<Element> xs;
      for (const auto& p : paths) xs.push_back(Element::basis(g, p));
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
          double want = i == j ? g->mu(paths[i].start()) * g->mu(paths[i].finish()) : 0.0;
          o.see(std::abs(inner(xs[i], xs[j]) - want));
        }
    });
}

void suite_combinatorics(Runner& r, const VerifyOptions&) {
  r.run("catalan-counts", [](Outcome& o) {
    for (int n = 0; n <= 8; ++n) {
      const auto cat = static_cast<std::size_t>(catalan(n));
      if (enumerate_nc(n).size() != cat) o.fail("NC(" + std::to_string(n) + ") size");
      if (enumerate_tl(2 * n).size() != cat) o.fail("TL(" + std::to_string(2 * n) + ") size");
    }
  });
  r.run("kreweras-class-structure", [](Outcome& o) {
    for (int n = 1; n <= 6; ++n)
      for (const auto& t : enumerate_tl(2 * n)) {
        auto res = kreweras_class_structure(t);
        if (!res.pass) o.fail(res.witness);
      }
  });
  r.run("epsilon-identity", [](Outcome& o) {
    for (int n = 1; n <= 6; ++n)
      for (const auto& t : enumerate_tl(2 * n)) {
        auto res = epsilon_identity_check(t);
        if (!res.pass) o.fail(res.witness);
      }
  });
}

using Op = std::function<Element(const Element&)>;

void suite_cdelta(Runner& r, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  for (const auto& [name, g] : test_graphs()) {
    r.run("relations/" + name, [&](Outcome& o) {
      for (int v = 0; v < g->vertex_count(); ++v) {
        const double dv = delta_at(*g, v);
        Op am = [v](const Element& x) { return apply_a_minus(x, v); };
        Op ap = [v](const Element& x) { return apply_a_plus(x, v); };
        Op cm = [v](const Element& x) { return apply_c_minus(x, v); };
        Op cp = [v](const Element& x) { return apply_c_plus(x, v); };
        auto on_object = [&](int obj, const Op& lhs, const Op& rhs) {
          for (const auto& p : enumerate_paths(*g, 2 * obj, v, v)) {
            Element x = Element::basis(g, p);
            o.see(distance(lhs(x), rhs(x)));
          }
        };
        auto then = [](Op first, Op second) { return Op([=](const Element& x) { return second(first(x)); }); };
        Op scaled_id = [dv](const Element& x) { return x * dv; };
        on_object(1, am, ap);
        on_object(0, cm, cp);
        for (int n = 0; n <= 3; ++n) {
          on_object(n + 2, then(ap, am), then(am, ap));
          on_object(n, then(cm, am), scaled_id);
          on_object(n + 1, then(cp, am), then(am, cp));
          on_object(n + 1, then(cm, ap), then(ap, cm));
          on_object(n, then(cp, ap), scaled_id);
          on_object(n, then(cp, cm), then(cm, cp));
        }
        // Only-A and only-C identities for k + l <= 3.
        for (int tot = 1; tot <= 3; ++tot)
          for (int k = 0; k <= tot; ++k) {
            Op mixed_a = [&, k, tot](const Element& x) {
              Element y = x;
              for (int j = tot; j > k; --j) y = apply_a_plus(y, v);
              for (int j = k; j >= 1; --j) y = apply_a_minus(y, v);
              return y;
            };
            Op plus_a = [&, tot](const Element& x) {
              Element y = x;
              for (int j = 0; j < tot; ++j) y = apply_a_plus(y, v);
              return y;
            };
            on_object(tot, mixed_a, plus_a);
            Op mixed_c = [&, k, tot](const Element& x) {
              Element y = x;
              for (int j = 0; j < k; ++j) y = apply_c_minus(y, v);
              for (int j = k; j < tot; ++j) y = apply_c_plus(y, v);
              return y;
            };
            Op plus_c = [&, tot](const Element& x) {
              Element y = x;
              for (int j = 0; j < tot; ++j) y = apply_c_plus(y, v);
              return y;
            };
            on_object(0, mixed_c, plus_c);
          }
      }
    });
    r.run("weight-multiplicative/" + name, [&](Outcome& o) {
      std::uniform_int_distribution<int> obj(0, 5);
      auto random_tpq = [&](int tgt, int src) {
        int len = std::uniform_int_distribution<int>(0, std::min(tgt, src))(rng);
        int plo = std::uniform_int_distribution<int>(1, tgt - len + 1)(rng);
        int qlo = std::uniform_int_distribution<int>(1, src - len + 1)(rng);
        return TPQMorphism(tgt, src, Interval{plo, len}, Interval{qlo, len});
      };
      int done = 0;
      while (done < 100) {
        int n = obj(rng), m = obj(rng), k = obj(rng);
        if ((m + n) % 2 || (n + k) % 2) continue;
        TPQMorphism f = random_tpq(m, n), h = random_tpq(n, k);
        int v = std::uniform_int_distribution<int>(0, g->vertex_count() - 1)(rng);
        const double dv = delta_at(*g, v);
        TPQProduct pr = tpq_compose(f, h);
        double lhs = std::pow(dv, pr.delta_power) * weight_functional(pr.morphism, dv);
        o.see(std::abs(lhs - weight_functional(f, dv) * weight_functional(h, dv)));
        ++done;
      }
    });
    r.run("commutator-inversion/" + name, [&](Outcome& o) {
      std::normal_distribution<double> nd;
      for (int v = 0; v < g->vertex_count(); ++v) {
        Element c = c_element(g, v);
        for (int n = 1; n <= 3; ++n) {
          Element x(g);
          for (const auto& p : enumerate_paths(*g, 2 * n, v, v)) x.add(p, nd(rng));
          Element c2n = c_power(g, v, n);
          x -= c2n * (local_inner(x, c2n, v) / local_inner(c2n, c2n, v));
          Element z = (sharp(c, x) - sharp(x, c)).degree_part(2 * n + 2);
          o.see(distance(z, apply_c_minus(x, v) - apply_c_plus(x, v)));
          o.see(distance(commutator_inverse(z, v, n), x));
        }
      }
    });
  }
}

void suite_factor(Runner& r, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  r.run("line-regimes", [](Outcome& o) {
    for (int q = 1; q <= 4; ++q)
      for (int k = 1; k < 40; ++k) {
        const double alpha = k / 40.0, beta = 1 - alpha;
        AlgDesc odd = prop_line(q, alpha, beta, CornerParity::Odd);
        AlgDesc even = prop_line(q, alpha, beta, CornerParity::Even);
        odd.validate();
        even.validate();
        // Both corners must describe the same diffuse factor of M(Omega).
        double atoms = 0;
        for (double a : odd.atoms) atoms += a * beta;
        for (double a : even.atoms) atoms += a * alpha;
        const double total = 1 - atoms;
        const auto& dodd = odd.diffuse.front();
        const auto& deven = even.diffuse.front();
        double from_odd = 1 + (dodd.parameter - 1) * std::pow(dodd.weight * beta / total, 2);
        double from_even = 1 + (deven.parameter - 1) * std::pow(deven.weight * alpha / total, 2);
        o.see(std::abs(from_odd - from_even));
        if (q > 1) {
          auto om = omega_factor(q, alpha, beta);
          if (om.is_factor) o.see(std::abs(*om.parameter - from_odd));
        }
      }
    // Continuity across the regime boundaries.
    for (int q = 2; q <= 4; ++q)
      for (double ratio : {1.0 / q, double(q)}) {
        const double alpha = ratio / (1 + ratio), beta = 1 - alpha;
        for (double eps : {-1e-9, 1e-9}) {
          AlgDesc a = prop_line(q, alpha + eps, beta - eps, CornerParity::Odd);
          AlgDesc b = prop_line(q, alpha, beta, CornerParity::Odd);
          if (std::abs(a.diffuse.front().parameter - b.diffuse.front().parameter) > 1e-6)
            o.fail("jump at a regime boundary for q = " + std::to_string(q));
        }
      }
  });
  r.run("omega-corollary-value", [](Outcome& o) {
    auto om = omega_factor(2, 0.5, 0.5);
    if (!om.is_factor || !om.parameter) o.fail("Omega(2, 1/2, 1/2) should be a factor");
    else o.see(std::abs(*om.parameter - 1.5));
    AlgDesc odd = prop_line(2, 0.5, 0.5, CornerParity::Odd);
    o.see(std::abs(odd.diffuse.front().parameter - 3));
  });
  r.run("star-closed-form-vs-pipeline", [&](Outcome& o) {
    std::uniform_int_distribution<int> leaves(1, 4), mult(1, 3);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    for (int k = 0; k < 200; ++k) {
      int n = leaves(rng);
      std::vector<int> q;
      std::vector<double> a;
      for (int i = 0; i < n; ++i) {
        q.push_back(mult(rng));
        a.push_back(w(rng));
      }
      double b = w(rng) * (k % 2 ? 0.5 : 4.0);
      AlgDesc x = star_m1(q, a, b), y = star_m1_pipeline(q, a, b);
      if (x.atoms.size() != y.atoms.size() || x.diffuse.size() != y.diffuse.size()) {
        o.fail("shape mismatch: " + to_string(x) + " vs " + to_string(y));
        continue;
      }
      for (std::size_t i = 0; i < x.atoms.size(); ++i) o.see(std::abs(x.atoms[i] - y.atoms[i]));
      for (std::size_t i = 0; i < x.diffuse.size(); ++i) {
        o.see(std::abs(x.diffuse[i].parameter - y.diffuse[i].parameter));
        o.see(std::abs(x.diffuse[i].weight - y.diffuse[i].weight));
      }
    }
  });
  r.run("free-product-sqrt-n", [](Outcome& o) {
    for (int n = 2; n <= 4; ++n) {
      const double t = 1 / std::sqrt(double(n));
      AlgDesc part;
      part.atoms = {1 - t};
      part.diffuse = {{1.0, t}};
      std::vector<AlgDesc> parts(static_cast<std::size_t>(n), part);
      AlgDesc fp = free_product(parts);
      if (!fp.atoms.empty() || fp.diffuse.size() != 1) {
        o.fail("unexpected shape " + to_string(fp));
        continue;
      }
      o.see(std::abs(fp.diffuse[0].parameter - (2 * std::sqrt(double(n)) - 1)));
    }
  });
  r.run("atom-traces", [](Outcome& o) {
    auto g = graphs::omega(2, 0.8, 0.2);
    auto atoms = atom_list(*g);
    if (atoms.size() != 1 || g->vertex(atoms[0].vertex).id != "v")
      o.fail("Omega(2, 0.8, 0.2) should have one atom at v");
    else
      o.see(std::abs(atoms[0].trace - 0.4));
    for (const auto& [name, h] : test_graphs()) {
      if (h->undirected_edge_count() < 2) continue;
      for (int v = 0; v < h->vertex_count(); ++v) {
        CenterReport cr = center_report(*h, v);
        const double dv = delta_at(*h, v);
        if ((cr.center_dim == 2) != (dv < 1 - 1e-12)) o.fail("centre dimension at " + name);
        if (cr.atom_trace) o.see(std::abs(*cr.atom_trace - (1 - dv) * h->mu2(v)));
      }
    }
  });
}

void suite_poisson(Runner& r, const VerifyOptions&) {
  struct Case {
    int q;
    double alpha, beta;
  };
  const std::vector<Case> cases{{1, 0.6, 0.4}, {2, 0.5, 0.5}, {2, 0.8, 0.2}, {3, 0.3, 0.7}, {3, 0.75, 0.25},
                                {2, 2.0 / 3, 1.0 / 3}};
  auto moments = [](const Case& c, int k) {
    auto g = graphs::omega(c.q, c.alpha, c.beta);
    const int v = g->vertex_index("v"), w = g->vertex_index("w");
    std::vector<int> ev(g->out_edges(v).begin(), g->out_edges(v).end());
    auto eij = [&](int i, int j) {
      return make_path(*g, w, {g->reversal(ev[static_cast<std::size_t>(i)]), ev[static_cast<std::size_t>(j)]});
    };
    const double jump = c.q * std::sqrt(c.beta / c.alpha);
    double s = 0;
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      Path p = trivial_path(w);
      for (int t = 0; t < k; ++t)
        p = concat(p, eij(idx[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>((t + 1) % k)]));
      s += tau_path(*g, p) / g->mu2(w);
      int t = 0;
      while (t < k && ++idx[static_cast<std::size_t>(t)] == c.q) idx[static_cast<std::size_t>(t++)] = 0;
      if (t == k) break;
    }
    return s / (c.q * std::pow(jump, k));
  };
  r.run("free-poisson-moments", [&](Outcome& o) {
    for (const auto& c : cases) {
      const double rate = c.alpha / (c.beta * c.q);
      for (int k = 1; k <= 5; ++k) {
        double want = 0;
        for (const auto& pi : nc_table(k)) want += std::pow(rate, pi.block_count());
        o.see(std::abs(moments(c, k) - want) / std::max(1.0, std::abs(want)));
      }
    }
  }, 1e-8);
  r.run("rate-one-catalan", [&](Outcome& o) {
    for (const auto& c : {Case{1, 0.5, 0.5}, Case{2, 2.0 / 3, 1.0 / 3}, Case{3, 0.75, 0.25}})
      for (int k = 1; k <= 5; ++k) o.see(std::abs(moments(c, k) - static_cast<double>(catalan(k))));
  }, 1e-8);
}

void suite_freeness(Runner& r, const VerifyOptions&) {
  r.run("mixed-cumulants-vanish/two-odd-line", [&](Outcome& o) {
    FreenessReport fr = freeness_certificate(graphs::two_odd_line(), 5, 1e-10);
    o.see(fr.max_mixed);
    if (fr.mixed_tuples == 0) o.fail("no mixed tuples were generated");
  }, 1e-10);
  for (const auto& [name, g] : test_graphs()) {
    r.run("closed-form-cumulants/" + name, [&, g = g](Outcome& o) {
      o.see(freeness_certificate(g, 4, 1e-10).max_closed_form_gap);
    }, 1e-10);
  }
  r.run("closed-form-cumulants/two-odd-line", [&](Outcome& o) {
    o.see(freeness_certificate(graphs::two_odd_line(), 4, 1e-10).max_closed_form_gap);
  }, 1e-10);
}

void suite_planar(Runner& r, const VerifyOptions& opt) {
  const double tol = 1e-8;
  std::mt19937_64 rng(opt.seed + 3);
  std::vector<NamedGraph> towers{{"A3", starred(graphs::a_n(3))}, {"A4", starred(graphs::a_n(4))}};
  for (const auto& [name, g] : towers) {
    PathTower P(g);
    const double d = P.delta();
    r.run("jones-relations/" + name, [&](Outcome& o) {
      for (int n = 2; n <= 4; ++n) {
        TowerElement e = P.jones(n);
        o.see(distance(P.mult(e, e), e));
        o.see(distance(P.adjoint(e), e));
      }
      for (int level = 3; level <= 4; ++level) {
        std::vector<TowerElement> es;
        for (int i = 1; i < level; ++i) es.push_back(P.include_to(P.jones(i + 1), level));
        for (std::size_t i = 0; i < es.size(); ++i)
          for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            const auto& a = es[i];
            const auto& b = es[j];
            if (i + 1 == j || j + 1 == i)
              o.see(distance(P.mult(P.mult(a, b), a), a * (1 / (d * d))));
            else
              o.see(distance(P.mult(a, b), P.mult(b, a)));
          }
      }
    }, tol);
    r.run("trace-and-expectation/" + name, [&](Outcome& o) {
      for (int n = 0; n <= 4; ++n)
        for (const auto& p : enumerate_paths(*g, n, P.star())) {
          TowerElement x(n);
          x.add({p, p}, 1.0);
          const double want = std::pow(d, -n) * g->mu2(p.finish()) / g->mu2(P.star());
          o.see(std::abs(P.trace(x) - want));
          // Independent route: expectation down to level 0, where tr(1) = 1.
          TowerElement y = x;
          while (y.level() > 0) y = P.cond_exp(y);
          o.see(std::abs(P.trace(y) - want));
        }
      std::normal_distribution<double> nd;
      for (int n = 0; n <= 3; ++n) {
        TowerElement x(n);
        for (const auto& b : P.basis(n)) x.add(b, nd(rng));
        o.see(distance(P.cond_exp(P.include(x)), x));
        o.see(std::abs(P.trace(P.include(x)) - P.trace(x)));
      }
    }, tol);
    r.run("tl-expansion/" + name, [&](Outcome& o) {
      o.see(distance(P.ztl(TLPairing(Partition(4, {{1, 2}, {3, 4}}))), P.jones(2) * d));
      for (int n = 1; n <= 3; ++n) {
        auto tls = enumerate_tl(2 * n);
        for (const auto& a : tls) {
          o.see(std::abs(P.trace(P.ztl(a)) - std::pow(d, tl_closure_loops(a) - n)));
          for (const auto& b : tls) {
            TLPairing c;
            int loops = tl_compose(a, b, c);
            o.see(distance(P.mult(P.ztl(a), P.ztl(b)), P.ztl(c) * std::pow(d, loops)));
          }
        }
      }
    }, tol);
    auto loops = loops_upto(*g, 4, P.star());
    r.run("theta-multiplicative/" + name, [&](Outcome& o) {
      for (const auto& p : loops)
        for (const auto& q : loops) {
          Element x = Element::basis(g, p), y = Element::basis(g, q);
          TowerElement prod = P.gr0_mul(P.theta(x), P.theta(y));
          o.see(distance(P.theta(bullet(x, y)), prod));
          o.see(distance(P.gr0_mul_tangle(P.theta(x), P.theta(y)), prod));
        }
    }, tol);
    r.run("theta-trace/" + name, [&](Outcome& o) {
      for (const auto& p : loops) {
        Element x = Element::basis(g, p);
        o.see(std::abs(tau(x) / g->mu2(P.star()) - P.gr0_trace(P.theta(x))));
      }
    }, tol);
    const int v = g->edge(g->out_edges(P.star())[0]).finish;
    auto vloops = loops_upto(*g, 4, v);
    r.run("theta1-multiplicative/" + name, [&](Outcome& o) {
      for (const auto& p : vloops)
        for (const auto& q : vloops) {
          Element x = Element::basis(g, p), y = Element::basis(g, q);
          o.see(distance(P.theta1(bullet(x, y), v), P.gr1_mul(P.theta1(x, v), P.theta1(y, v))));
        }
    }, tol);
    r.run("theta1-trace/" + name, [&](Outcome& o) {
      const double norm = P.gr1_trace(P.theta1(Element::vertex_unit(g, v), v));
      for (const auto& p : vloops) {
        Element x = Element::basis(g, p);
        o.see(std::abs(tau(x) / g->mu2(v) - P.gr1_trace(P.theta1(x, v)) / norm));
      }
    }, tol);
    r.run("cap-equivariance/" + name, [&](Outcome& o) {
      for (int n = 1; n <= 3; ++n)
        for (const auto& p : enumerate_paths(*g, 2 * n, P.star(), P.star())) {
          Element x = Element::basis(g, p);
          for (int i = 1; i < 2 * n; ++i) {
            Element sx = act(EpiMorphism::generator(2 * n, i), x);
            TowerElement lhs = sx.terms().empty() ? TowerElement(n - 1) : P.theta(sx);
            o.see(distance(lhs, P.annular_cap(i, P.theta(x))));
          }
        }
    }, tol);
  }
}

void run_one(const std::string& name, Runner& r, const VerifyOptions& opt) {
  if (name == "isomorphism") suite_isomorphism(r, opt);
  else if (name == "trace") suite_trace(r, opt);
  else if (name == "positivity") suite_positivity(r, opt);
  else if (name == "combinatorics") suite_combinatorics(r, opt);
  else if (name == "cdelta") suite_cdelta(r, opt);
  else if (name == "factor") suite_factor(r, opt);
  else if (name == "poisson") suite_poisson(r, opt);
  else if (name == "freeness") suite_freeness(r, opt);
  else if (name == "planar") suite_planar(r, opt);
  else throw InputError("unknown suite '" + name + "'");
}

}  // namespace

VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (opt.max_degree < 0) throw InputError("max degree must be non-negative");
  VerificationReport rep;
  rep.suite = name;
  Runner r(rep, opt.tol);
  if (name == "all") {
    for (const auto& s : suite_names()) {
      VerificationReport sub = run_suite(s, opt);
      for (auto& c : sub.checks) {
        c.id = s + "/" + c.id;
        rep.checks.push_back(std::move(c));
      }
    }
    return rep;
  }
  run_one(name, r, opt);
  return rep;
}

}  // namespace gjs
