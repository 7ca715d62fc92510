#include <doctest.h>

#include <cmath>
#include <functional>

#include "gjs/cdelta.hpp"
#include "gjs/errors.hpp"
#include "gjs/f_algebra.hpp"
#include "gjs/gr_algebra.hpp"
#include "test_util.hpp"

using namespace gjs;
using namespace gjs::testing;

namespace {

using Op = std::function<Element(const Element&)>;

Path tail(const Graph& g, const Path& p, int from) {
  std::vector<int> e(p.edges.begin() + from, p.edges.end());
  const int s = p.vertices[static_cast<std::size_t>(from)];
  return e.empty() ? trivial_path(s) : make_path(g, s, e);
}

Path head(const Graph& g, const Path& p, int len) {
  std::vector<int> e(p.edges.begin(), p.edges.begin() + len);
  return e.empty() ? trivial_path(p.start()) : make_path(g, p.start(), e);
}

// Generators written out path by path.
Element oracle_a(const Element& x, int v, bool left) {
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms()) {
    const int n2 = p.length();
    if (left) {
      if (p.edge_at(1) != g.reversal(p.edge_at(2))) continue;
      out.add(tail(g, p, 2), c * g.mu(p.vertices[1]) / g.mu(v));
    } else {
      if (p.edge_at(n2 - 1) != g.reversal(p.edge_at(n2))) continue;
      out.add(head(g, p, n2 - 2), c * g.mu(p.vertices[static_cast<std::size_t>(n2 - 1)]) / g.mu(v));
    }
  }
  return out;
}

Element oracle_c(const Element& x, int v, bool left) {
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms())
    for (int rho : g.out_edges(v)) {
      const int w = g.edge(rho).finish;
      Path bump = make_path(g, v, {rho, g.reversal(rho)});
      out.add(left ? concat(bump, p) : concat(p, bump), c * g.mu(w) / g.mu(v));
    }
  return out;
}

std::vector<GraphPtr> local_graphs() {
  return {graphs::a_n(3), graphs::double_edge(), graphs::omega(2, 0.8, 0.2), graphs::k1n(3),
          std::make_shared<const Graph>(graphs::a_n(4)->with_weights(std::vector<double>{0.1, 0.2, 0.3, 0.4}))};
}

Element random_loop(const GraphPtr& g, int v, int half, std::mt19937_64& rng) {
  auto pool = enumerate_paths(*g, 2 * half, v, v);
  return random_element(g, pool, rng, 4);
}

}  // namespace

TEST_CASE("interval helpers") {
  CHECK(Interval::closed(3, 2).empty());
  CHECK(Interval::closed(2, 4).hi() == 4);
  CHECK(intersect(Interval::closed(1, 3), Interval::closed(2, 5)) == Interval::closed(2, 3));
  CHECK(intersect(Interval::closed(1, 2), Interval::closed(4, 5)).empty());
}

TEST_CASE("composition examples") {
  auto amcm = tpq_compose(TPQMorphism::a_minus(3), TPQMorphism::c_minus(2));
  CHECK(amcm.delta_power == 1);
  CHECK(amcm.morphism == TPQMorphism::identity(2));
  auto apcp = tpq_compose(TPQMorphism::a_plus(4), TPQMorphism::c_plus(3));
  CHECK(apcp.delta_power == 1);
  CHECK(apcp.morphism == TPQMorphism::identity(3));
  for (int n = 0; n <= 4; ++n) {
    auto l = tpq_compose(TPQMorphism::c_minus(n + 1), TPQMorphism::c_plus(n));
    auto r = tpq_compose(TPQMorphism::c_plus(n + 1), TPQMorphism::c_minus(n));
    CHECK(l.delta_power == r.delta_power);
    CHECK(l.morphism == r.morphism);
  }
  CHECK(TPQMorphism::a_minus(3) == TPQMorphism(2, 3, Interval::closed(1, 2), Interval::closed(2, 3)));
  CHECK(TPQMorphism::c_minus(2) == TPQMorphism(3, 2, Interval::closed(2, 3), Interval::closed(1, 2)));
  CHECK(TPQMorphism::a_minus(1) == TPQMorphism::a_plus(1));
  CHECK(TPQMorphism::c_minus(0) == TPQMorphism::c_plus(0));
  CHECK_THROWS(tpq_compose(TPQMorphism::a_minus(3), TPQMorphism::a_minus(3)));
  CHECK_THROWS_AS(TPQMorphism(2, 3, Interval::closed(1, 2), Interval::closed(1, 1)), InputError);
}

TEST_CASE("the eight-point example") {
  // Pairs 4, 5 on top pass through to pairs 3, 4 below: f(p) = p - 1.
  const TPQMorphism t(8, 5, Interval::closed(4, 5), Interval::closed(3, 4));
  CHECK(t.p().lo - t.q().lo == 1);
  // Caps left to right and then cups, as a word in the generators.
  std::vector<TPQMorphism> word = {TPQMorphism::c_plus(7),  TPQMorphism::c_plus(6),  TPQMorphism::c_plus(5),
                                   TPQMorphism::c_minus(4), TPQMorphism::c_minus(3), TPQMorphism::c_minus(2),
                                   TPQMorphism::a_plus(3),  TPQMorphism::a_minus(4), TPQMorphism::a_minus(5)};
  TPQMorphism acc = word.back();
  int power = 0;
  for (std::size_t k = word.size() - 1; k-- > 0;) {
    auto r = tpq_compose(word[k], acc);
    power += r.delta_power;
    acc = r.morphism;
  }
  CHECK(power == 0);
  CHECK(acc == t);
}

TEST_CASE("generators match their path formulas") {
  for (const auto& g : local_graphs())
    for (int v = 0; v < g->vertex_count(); ++v)
      for (int n = 0; n <= 3; ++n)
        for (const auto& p : enumerate_paths(*g, 2 * n, v, v)) {
          auto x = Element::basis(g, p);
          CHECK(distance(apply_c_minus(x, v), oracle_c(x, v, true)) < 1e-13);
          CHECK(distance(apply_c_plus(x, v), oracle_c(x, v, false)) < 1e-13);
          if (n == 0) continue;
          CHECK(distance(apply_a_minus(x, v), oracle_a(x, v, true)) < 1e-13);
          CHECK(distance(apply_a_plus(x, v), oracle_a(x, v, false)) < 1e-13);
        }
}

TEST_CASE("generator relations hold on local path spaces") {
  for (const auto& g : local_graphs())
    for (int v = 0; v < g->vertex_count(); ++v) {
      const double d = delta_at(*g, v);
      auto am = [v](const Element& x) { return apply_a_minus(x, v); };
      auto ap = [v](const Element& x) { return apply_a_plus(x, v); };
      auto cm = [v](const Element& x) { return apply_c_minus(x, v); };
      auto cp = [v](const Element& x) { return apply_c_plus(x, v); };
      CHECK(distance(cm(Element::vertex_unit(g, v)), cp(Element::vertex_unit(g, v))) < 1e-13);
      for (int n = 0; n <= 3; ++n)
        for (const auto& p : enumerate_paths(*g, 2 * n, v, v)) {
          auto x = Element::basis(g, p);
          if (n == 1) CHECK(distance(am(x), ap(x)) < 1e-13);
          if (n >= 2) CHECK(distance(am(ap(x)), ap(am(x))) < 1e-13);
          CHECK(distance(am(cm(x)), d * x) < 1e-12);
          CHECK(distance(ap(cp(x)), d * x) < 1e-12);
          if (n >= 1) {
            CHECK(distance(am(cp(x)), cp(am(x))) < 1e-12);
            CHECK(distance(ap(cm(x)), cm(ap(x))) < 1e-12);
          }
          CHECK(distance(cm(cp(x)), cp(cm(x))) < 1e-12);
        }
      // Only-A and only-C identities with k = l = 1 and k = 2, l = 1.
      for (const auto& p : enumerate_paths(*g, 4, v, v)) {
        auto x = Element::basis(g, p);
        CHECK(distance(am(ap(x)), ap(ap(x))) < 1e-12);
      }
      for (const auto& p : enumerate_paths(*g, 6, v, v)) {
        auto x = Element::basis(g, p);
        CHECK(distance(am(am(ap(x))), ap(ap(ap(x)))) < 1e-12);
      }
      auto e = Element::vertex_unit(g, v);
      CHECK(distance(cp(cm(e)), cp(cp(e))) < 1e-12);
      CHECK(distance(cp(cm(cm(e))), cp(cp(cp(e)))) < 1e-12);
    }
}

TEST_CASE("action respects composition and the weight functional") {
  std::mt19937_64 rng(3);
  auto random_tpq = [&](int m, int n) {
    const int lo = std::min(m, n);
    std::uniform_int_distribution<int> size(0, lo);
    const int k = size(rng);
    std::uniform_int_distribution<int> ps(1, m - k + 1), qs(1, n - k + 1);
    return TPQMorphism(m, n, Interval{ps(rng), k}, Interval{qs(rng), k});
  };
  for (const auto& g : local_graphs()) {
    const int v = 0;
    const double d = delta_at(*g, v);
    std::uniform_int_distribution<int> obj(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
      const int p = obj(rng), n = obj(rng), m = obj(rng);
      auto f = random_tpq(m, n), h = random_tpq(n, p);
      auto r = tpq_compose(f, h);
      CHECK(r.morphism.source() == p);
      CHECK(r.morphism.target() == m);
      CHECK(weight_functional(f, d) * weight_functional(h, d) ==
            doctest::Approx(std::pow(d, r.delta_power) * weight_functional(r.morphism, d)).epsilon(1e-12));
      auto x = random_loop(g, v, p, rng);
      CHECK(distance(tpq_act(f, tpq_act(h, x, v), v), std::pow(d, r.delta_power) * tpq_act(r.morphism, x, v)) < 1e-11);
      auto mat = local_operator_matrix(g, v, n, m, [&](const Element& y) { return tpq_act(f, y, v); });
      if (mat.size() > 0) CHECK(operator_norm(mat) <= weight_functional(f, d) * (1 + 1e-12) + 1e-12);
    }
  }
  CHECK(weight_functional(TPQMorphism::c_minus(3), 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(weight_functional(TPQMorphism::identity(3), 2.0) == doctest::Approx(1.0));
}

TEST_CASE("creation and annihilation are adjoint") {
  for (const auto& g : local_graphs())
    for (int v = 0; v < g->vertex_count(); ++v)
      for (int n = 0; n <= 2; ++n) {
        auto c = local_operator_matrix(g, v, n, n + 1, [v](const Element& x) { return apply_c_minus(x, v); });
        auto a = local_operator_matrix(g, v, n + 1, n, [v](const Element& x) { return apply_a_minus(x, v); });
        CHECK((c - a.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        auto cp = local_operator_matrix(g, v, n, n + 1, [v](const Element& x) { return apply_c_plus(x, v); });
        auto ap = local_operator_matrix(g, v, n + 1, n, [v](const Element& x) { return apply_a_plus(x, v); });
        CHECK((cp - ap.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      }
}

TEST_CASE("the elements c, c_2n and d") {
  auto a2 = graphs::a_n(2);
  const int v = 0, w = 1;
  CHECK(distance(c_element(a2, v), path_element(a2, {v, w, v}) * (a2->mu(w) / a2->mu(v))) < 1e-14);
  CHECK(distance(apply_a_minus(c_element(a2, v), v), delta_at(*a2, v) * Element::vertex_unit(a2, v)) < 1e-13);
  CHECK(distance(d_element(a2, v), path_element(a2, {v, w, v, w, v})) < 1e-14);

  auto g = graphs::a_n(3);
  for (int u = 0; u < 3; ++u) {
    const double d = delta_at(*g, u);
    Element power = Element::vertex_unit(g, u);
    for (int n = 1; n <= 4; ++n) {
      auto cn = c_power(g, u, n);
      CHECK(local_inner(cn, cn, u) == doctest::Approx(std::pow(d, n)).epsilon(1e-12));
      power = sharp(power, c_element(g, u));
      CHECK(distance(power.degree_part(2 * n), cn) < 1e-12);
    }
  }

  auto de = graphs::double_edge();
  const int v1 = de->vertex_index("v1");
  auto dd = d_element(de, v1);
  // Two choices of rho, then two of zeta back to v1 and one to v2.
  CHECK(dd.size() == 2 * 3);
  for (const auto& [p, c] : dd.terms()) CHECK(c == doctest::Approx(de->mu(p.vertices[2]) / de->mu(v1)));
}

TEST_CASE("sharp with c on local spaces") {
  std::mt19937_64 rng(8);
  for (const auto& g : local_graphs()) {
    const int v = 0;
    auto c = c_element(g, v);
    for (int n = 0; n <= 3; ++n) {
      auto x = random_loop(g, v, n, rng);
      CHECK(distance(sharp(c, x).degree_part(2 * n + 2), apply_c_minus(x, v)) < 1e-12);
      CHECK(distance(sharp(x, c).degree_part(2 * n + 2), apply_c_plus(x, v)) < 1e-12);
    }
  }
}

TEST_CASE("commutator with c is inverted off c_2n") {
  std::mt19937_64 rng(13);
  for (const auto& g : local_graphs()) {
    const int v = 0;
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        auto x = random_loop(g, v, n, rng);
        auto cn = c_power(g, v, n);
        x -= (local_inner(x, cn, v) / local_inner(cn, cn, v)) * cn;
        CHECK(std::abs(local_inner(x, cn, v)) < 1e-12);
        auto z = apply_c_minus(x, v) - apply_c_plus(x, v);
        CHECK(distance(commutator_inverse(z, v, n), x) < 1e-10);
      }
  }
}

TEST_CASE("truncations of the central element") {
  auto g = graphs::omega(2, 0.8, 0.2);
  const int v = 0;
  const double d = delta_at(*g, v);
  CHECK(d == doctest::Approx(0.5));
  for (int m = 0; m <= 4; ++m) {
    auto xm = zv_truncation(g, v, m);
    Element want(g);
    for (int n = 0; n <= m; ++n) want += (n % 2 ? -1.0 : 1.0) * c_power(g, v, n);
    CHECK(distance(xm, want) < 1e-13);
    for (int e : g->out_edges(v)) {
      auto xi = Element::basis(g, make_path(*g, v, {e}));
      CHECK(distance(sharp(xm, xi), (m % 2 ? -1.0 : 1.0) * bullet(c_power(g, v, m), xi)) < 1e-11);
    }
  }
  double bound = 1;
  for (int t = 1; t < 200; ++t) bound += 2 * std::pow(d, t / 2.0);
  for (int m = 0; m <= 3; ++m) {
    auto op = truncated_left_mult(zv_truncation(g, v, m), 2 * m + 4, v);
    CHECK(operator_norm(op.matrix) <= bound);
  }
}

TEST_CASE("centre reports and atoms") {
  auto g = graphs::omega(2, 0.8, 0.2);
  auto r = center_report(*g, 0);
  CHECK(r.delta_v == doctest::Approx(0.5));
  CHECK(r.center_dim == 2);
  REQUIRE(r.atom_trace.has_value());
  CHECK(*r.atom_trace == doctest::Approx(0.4));

  auto h = graphs::omega(2, 2.0 / 3, 1.0 / 3);
  auto rw = center_report(*h, 1);
  CHECK(rw.delta_v == doctest::Approx(4.0));
  CHECK(rw.center_dim == 1);
  CHECK_FALSE(rw.atom_trace.has_value());
  auto rv = center_report(*h, 0);
  CHECK(rv.delta_v == doctest::Approx(1.0));
  CHECK(rv.center_dim == 1);

  auto a2 = std::make_shared<const Graph>(graphs::a_n(2)->with_weights(std::vector<double>{2.0 / 3, 1.0 / 3}));
  CHECK(delta_at(*a2, 0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(center_report(*a2, 0), PreconditionError);
  CHECK(zv_truncation(a2, 0, 3).size() == 4);

  auto atoms = atom_list(*g);
  REQUIRE(atoms.size() == 1);
  CHECK(atoms[0].vertex == 0);
  CHECK(atoms[0].trace == doctest::Approx(0.4));
  CHECK(atom_list(*graphs::a_n(3)).empty());
}
