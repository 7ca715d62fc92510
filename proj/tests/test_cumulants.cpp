#include <doctest.h>

#include <cmath>

#include "gjs/cumulants.hpp"
#include "gjs/epitl.hpp"
#include "gjs/gr_algebra.hpp"
#include "test_util.hpp"

using namespace gjs;
using namespace gjs::testing;

namespace {

std::vector<Element> basis_elements(const GraphPtr& g, const std::vector<Path>& ps) {
  std::vector<Element> out;
  for (const auto& p : ps) out.push_back(Element::basis(g, p));
  return out;
}

// Expectation straight from the cap morphisms on the concatenated path.
BElement moment_oracle(const GraphPtr& g, const std::vector<Path>& ps) {
  BElement out(static_cast<std::size_t>(g->vertex_count()), 0.0);
  Path all = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (all.finish() != ps[i].start()) return out;
    all = concat(all, ps[i]);
  }
  for (const auto& s : hom_set(all.length(), 0)) {
    Path img;
    double c = 0;
    if (act_on_path(*g, s, all, img, c)) out[static_cast<std::size_t>(img.start())] += c;
  }
  return out;
}

// All composable tuples of length-2 paths.
void tuples(const Graph& g, int n, const std::function<void(const std::vector<Path>&)>& f) {
  auto two = enumerate_paths(g, 2);
  std::vector<Path> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      f(cur);
      return;
    }
    for (const auto& p : two)
      if (cur.empty() || cur.back().finish() == p.start()) {
        cur.push_back(p);
        rec();
        cur.pop_back();
      }
  };
  rec();
}

double at(const BElement& b, int v) { return b[static_cast<std::size_t>(v)]; }

GraphPtr weighted_a3() {
  return std::make_shared<const Graph>(graphs::a_n(3)->with_weights(std::vector<double>{0.2, 0.5, 0.3}));
}

}  // namespace

TEST_CASE("first moments and cumulants") {
  auto g = weighted_a3();
  const int v = 0, w = 1, u = 2;
  auto xi = path_element(g, {v, w, v});
  std::vector<Element> one{xi};
  CHECK(at(moment(one), v) == doctest::Approx(g->mu(w) / g->mu(v)));
  CHECK(at(cumulant_mobius(one), v) == doctest::Approx(g->mu(w) / g->mu(v)));
  std::vector<Path> p1{path_through(*g, {v, w, v})};
  CHECK(at(cumulant_closed_form(*g, p1), v) == doctest::Approx(g->mu(w) / g->mu(v)));

  std::vector<Path> p2{path_through(*g, {v, w, u}), path_through(*g, {u, w, v})};
  auto x2 = basis_elements(g, p2);
  CHECK(at(cumulant_mobius(x2), v) == doctest::Approx(g->mu(u) / g->mu(v)).epsilon(1e-12));
  CHECK(at(cumulant_closed_form(*g, p2), v) == doctest::Approx(g->mu(u) / g->mu(v)).epsilon(1e-12));

  std::vector<Element> bad{path_element(g, {v, w, u}), path_element(g, {v, w, v})};
  CHECK(b_distance(moment(bad), b_zero(*g)) == 0.0);
}

TEST_CASE("mixed middle vertices give zero") {
  auto g = graphs::two_odd_line();
  const int v2 = g->vertex_index("v2"), w1 = g->vertex_index("w1"), w2 = g->vertex_index("w2");
  std::vector<Path> p{path_through(*g, {v2, w1, v2}), path_through(*g, {v2, w2, v2})};
  CHECK(b_distance(cumulant_mobius(basis_elements(g, p)), b_zero(*g)) < 1e-13);
  CHECK(b_distance(cumulant_closed_form(*g, p), b_zero(*g)) == 0.0);
  // The moment itself does not vanish.
  CHECK(at(moment(basis_elements(g, p)), v2) > 0.1);
}

TEST_CASE("moments agree with the cap expansion and the filtered picture") {
  for (auto g : {weighted_a3(), graphs::double_edge(), graphs::two_odd_line()})
    for (int n = 1; n <= 4; ++n)
      tuples(*g, n, [&](const std::vector<Path>& ps) {
        auto xs = basis_elements(g, ps);
        auto m = moment(xs);
        CHECK(b_distance(m, moment_oracle(g, ps)) < 1e-12);
        CHECK(b_distance(m, moment_fpicture(xs)) < 1e-11);
      });
}

TEST_CASE("moment-cumulant relation and the two cumulant routes") {
  const BMap kappa = [](std::span<const Element> xs) { return cumulant_mobius(xs); };
  for (auto g : {weighted_a3(), graphs::double_edge()})
    for (int n = 1; n <= 4; ++n)
      tuples(*g, n, [&](const std::vector<Path>& ps) {
        auto xs = basis_elements(g, ps);
        BElement sum = b_zero(*g);
        for (const auto& pi : nc_table(n)) {
          auto k = multiplicative_extension(kappa, pi, xs);
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k[i];
        }
        CHECK(b_distance(sum, moment(xs)) < 1e-11);
        CHECK(b_distance(cumulant_mobius(xs), cumulant_closed_form(*g, ps)) < 1e-11);
      });
}

TEST_CASE("multiplicative extension") {
  const BMap mom = [](std::span<const Element> xs) { return moment(xs); };
  auto g = graphs::double_edge();
  for (int n = 1; n <= 5; ++n)
    tuples(*g, n, [&](const std::vector<Path>& ps) {
      auto xs = basis_elements(g, ps);
      CHECK(b_distance(multiplicative_extension(mom, Partition::one(n), xs), moment(xs)) < 1e-13);
      for (const auto& pi : nc_table(n))
        CHECK(b_distance(multiplicative_extension(mom, pi, xs, IntervalChoice::First),
                         multiplicative_extension(mom, pi, xs, IntervalChoice::Last)) < 1e-12);
    });
  // All singletons on loops at one vertex: a product of first moments.
  auto a3 = weighted_a3();
  std::vector<Path> ps{path_through(*a3, {1, 0, 1}), path_through(*a3, {1, 2, 1}), path_through(*a3, {1, 0, 1})};
  auto xs = basis_elements(a3, ps);
  double want = 1;
  for (const auto& x : xs) want *= at(moment(std::vector<Element>{x}), 1);
  CHECK(at(multiplicative_extension(mom, Partition::zero(3), xs), 1) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("product formula for S(pi) over NC(3) and NC(4)") {
  for (auto g : {weighted_a3(), graphs::double_edge(), graphs::two_odd_line()})
    for (int n = 3; n <= 4; ++n)
      tuples(*g, n, [&](const std::vector<Path>& ps) {
        for (const auto& pi : nc_table(n))
          CHECK(b_distance(s_pi_product(*g, pi, ps), s_pi_action(*g, pi, ps)) < 1e-12);
      });
}

TEST_CASE("bimodule maps") {
  auto g = weighted_a3();
  auto x = path_element(g, {0, 1, 2});
  BElement b{2.0, 3.0, 5.0};
  CHECK(distance(right_mul(x, b), 5.0 * x) == 0.0);
  CHECK(distance(left_mul(b, x), 2.0 * x) == 0.0);
}

TEST_CASE("freeness certificates") {
  auto line = freeness_certificate(graphs::two_odd_line(), 4);
  CHECK(line.pass);
  CHECK(line.mixed_tuples > 0);
  CHECK(line.max_mixed < 1e-10);
  CHECK(line.max_closed_form_gap < 1e-10);

  auto a3 = freeness_certificate(graphs::a_n(3), 4);
  CHECK(a3.pass);
  CHECK(a3.mixed_tuples == 0);
  CHECK(a3.tuples_checked > 0);
}
