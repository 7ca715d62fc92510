#include <doctest.h>

#include <cmath>

#include "gjs/epitl.hpp"
#include "gjs/f_algebra.hpp"
#include "gjs/gr_algebra.hpp"
#include "test_util.hpp"

using namespace gjs;
using namespace gjs::testing;

namespace {

// Product of two basis paths as a chain of middle caps on the concatenation.
Element sharp_chain(const GraphPtr& g, const Path& xi, const Path& eta) {
  Element out(g);
  if (xi.finish() != eta.start()) return out;
  const int m = xi.length(), n = eta.length();
  Element cur = Element::basis(g, concat(xi, eta));
  out += cur;
  for (int k = 1; k <= std::min(m, n); ++k) {
    const int len = m + n - 2 * (k - 1);
    cur = act(EpiMorphism::generator(len, m - k + 1), cur);
    out += cur;
  }
  return out;
}

Element sharp_oracle(const Element& x, const Element& y) {
  Element out(x.graph_ptr());
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) out += sharp_chain(x.graph_ptr(), p, q) * (a * b);
  return out;
}

}  // namespace

TEST_CASE("sharp product examples") {
  auto g = graphs::a_n(3);
  const int v = 0, w = 1;
  const double mv = g->mu(v), mw = g->mu(w);
  auto x = path_element(g, {v, w, v});
  auto want = path_element(g, {v, w, v, w, v}) + path_element(g, {v, w, v}) * (mv / mw) + Element::vertex_unit(g, v);
  CHECK(distance(sharp(x, x), want) < 1e-13);
  auto a = path_element(g, {v, w}), b = path_element(g, {w, v});
  CHECK(distance(sharp(a, b), path_element(g, {v, w, v}) + Element::vertex_unit(g, v) * (mw / mv)) < 1e-13);
  CHECK(distance(sharp(Element::vertex_unit(g, v), x), x) == 0.0);
  CHECK(distance(sharp(Element::unit(g), a), a) == 0.0);
  CHECK(sharp(x, b).is_zero());
}

TEST_CASE("sharp agrees with the cap chain on all short pairs") {
  for (auto g : {graphs::a_n(3), graphs::double_edge(), graphs::omega(2, 0.4, 0.6)}) {
    auto paths = enumerate_paths_upto(*g, 3);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        auto x = Element::basis(g, p), y = Element::basis(g, q);
        CHECK(distance(sharp(x, y), sharp_oracle(x, y)) < 1e-12);
      }
  }
}

TEST_CASE("sharp is associative and compatible with star") {
  std::mt19937_64 rng(5);
  for (auto g : {graphs::a_n(4), graphs::double_edge()}) {
    auto pool = enumerate_paths_upto(*g, 2);
    for (int k = 0; k < 40; ++k) {
      auto x = random_element(g, pool, rng, 3), y = random_element(g, pool, rng, 3), z = random_element(g, pool, rng, 3);
      CHECK(distance(sharp(sharp(x, y), z), sharp(x, sharp(y, z))) < 1e-11);
      CHECK(distance(star(sharp(x, y)), sharp(star(y), star(x))) < 1e-12);
      CHECK(t_functional(sharp(x, y)) == doctest::Approx(t_functional(sharp(y, x))).epsilon(1e-10));
    }
  }
}

TEST_CASE("t functional and inner product") {
  auto a2 = graphs::a_n(2);
  CHECK(t_functional(Element::unit(a2)) == doctest::Approx(1.0));
  CHECK(t_functional(path_element(a2, {0, 1, 0})) == 0.0);
  auto x = path_element(a2, {0, 1, 0});
  CHECK(inner(x, x) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(inner(x, path_element(a2, {0, 1, 0, 1, 0}))) < 1e-13);

  auto g = graphs::double_edge();
  auto paths = enumerate_paths_upto(*g, 4);
  for (const auto& p : paths)
    for (const auto& q : paths) {
      const double want = p == q ? g->mu(p.start()) * g->mu(p.finish()) : 0.0;
      CHECK(std::abs(inner(Element::basis(g, p), Element::basis(g, q)) - want) < 1e-12);
    }
}

TEST_CASE("phi and psi") {
  auto g = graphs::a_n(3);
  const auto xi = path_through(*g, {0, 1, 0});
  auto x = Element::basis(g, xi);
  auto cap = act(EpiMorphism::generator(2, 1), x);
  CHECK(distance(phi(x), x + cap) < 1e-14);
  CHECK(distance(psi(x), x - cap) < 1e-14);
  CHECK(distance(phi(Element::vertex_unit(g, 1)), Element::vertex_unit(g, 1)) == 0.0);
  for (const auto& p : enumerate_paths_upto(*g, 6)) {
    auto e = Element::basis(g, p);
    CHECK(distance(phi(psi(e)), e) < 1e-12);
    CHECK(distance(psi(phi(e)), e) < 1e-12);
    // Upper triangular with unit diagonal in degree.
    auto y = phi(e) - e;
    CHECK(y.degree_part(p.length()).sup_norm() < 1e-14);
    CHECK(y.max_degree() < p.length());
    CHECK(distance(phi(star(e)), star(phi(e))) < 1e-13);
    if (p.is_loop()) CHECK(tau(e) == doctest::Approx(t_functional(phi(e))).epsilon(1e-11));
  }
}

TEST_CASE("phi is multiplicative") {
  std::mt19937_64 rng(9);
  for (auto g : {graphs::a_n(3), graphs::k1n(3), graphs::double_edge()}) {
    auto pool = enumerate_paths_upto(*g, 3);
    for (int k = 0; k < 40; ++k) {
      auto x = random_element(g, pool, rng, 3), y = random_element(g, pool, rng, 3);
      CHECK(distance(phi(bullet(x, y)), sharp(phi(x), phi(y))) < 1e-11);
    }
  }
}

TEST_CASE("truncated left multiplication") {
  auto g = graphs::a_n(2);
  const int v = 0, w = 1;
  // The normalized basis vector {v->w}.
  auto a = path_element(g, {v, w}) * (1.0 / std::sqrt(g->mu(v) * g->mu(w)));
  auto op = truncated_left_mult(a, 6);
  const double bound = 3.0 * std::max(1.0, std::sqrt(max_delta(*g))) / g->mu(w);
  CHECK(operator_norm(op.matrix) <= bound + 1e-12);
  CHECK(left_mult_bound(a) == doctest::Approx(bound).epsilon(1e-12));

  auto e = truncated_left_mult(Element::vertex_unit(g, v), 6);
  CHECK(operator_norm(e.matrix) == doctest::Approx(1.0).epsilon(1e-12));

  auto g3 = graphs::a_n(3);
  auto s = path_element(g3, {0, 1, 2}) + path_element(g3, {2, 1, 0});
  auto sm = truncated_left_mult(s, 5).matrix;
  CHECK((sm - sm.transpose()).cwiseAbs().maxCoeff() < 1e-12);

  // The bound holds at every truncation level.
  auto b = path_element(g3, {1, 2});
  for (int n = 1; n <= 7; ++n) CHECK(operator_norm(truncated_left_mult(b, n).matrix) <= left_mult_bound(b) + 1e-12);
}

TEST_CASE("orthonormal coordinates") {
  auto g = graphs::a_n(3);
  auto basis = enumerate_paths_upto(*g, 2);
  auto x = path_element(g, {0, 1, 2}) * 2.0;
  auto c = orthonormal_coords(x, basis);
  const double norm2 = c.squaredNorm();
  CHECK(norm2 == doctest::Approx(inner(x, x)).epsilon(1e-12));
}
