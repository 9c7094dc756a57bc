#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "weylfan/basis_ring.hpp"
#include "weylfan/fan_oracle.hpp"

using namespace weylfan;

namespace {

WeylElement el(const RootSystem& sys, const std::string& text) {
  return parse_element(sys, text);
}

BasisCombination combo(const RootSystem& sys,
                       std::vector<std::pair<std::string, long long>> terms) {
  BasisCombination out;
  for (auto& [name, c] : terms) out.add(el(sys, name), c);
  return out;
}

}  // namespace

TEST_CASE("pairing matrix basics") {
  auto a1 = make_system(Family::A, 1);
  CohomologyRing ring(a1);
  auto mat = ring.pairing_matrix();
  REQUIRE(mat.entries.size() == 2);  // the 2x2 identity
  for (const auto& e : mat.entries) {
    CHECK(e.row == e.col);
    CHECK(e.value == 1);
  }

  for (const auto& sys :
       {make_system(Family::A, 3), make_system(Family::B, 2),
        make_system(Family::C, 2), make_system(Family::D, 3),
        make_system(Family::G2, 2)}) {
    CohomologyRing ring2(sys);
    const auto& group = ring2.group();
    for (std::size_t u = 0; u < group.size(); ++u) {
      CHECK(ring2.pairing(u, u) == 1);
      for (std::size_t v = 0; v < group.size(); ++v) {
        long long value = ring2.pairing(u, v);
        if (group.descent_count(u) != group.descent_count(v)) CHECK(value == 0);
        if (group.length(u) < group.length(v)) CHECK(value == 0);
      }
    }
  }
}

TEST_CASE("G2 pairing block structure") {
  CohomologyRing ring(make_system(Family::G2, 2));
  const auto& group = ring.group();
  int by_degree[3] = {0, 0, 0};
  for (std::size_t idx = 0; idx < group.size(); ++idx)
    ++by_degree[group.descent_count(idx)];
  CHECK(by_degree[0] == 1);
  CHECK(by_degree[1] == 10);
  CHECK(by_degree[2] == 1);
  auto mat = ring.pairing_matrix();
  for (const auto& e : mat.entries)
    CHECK(group.descent_count(e.row) == group.descent_count(e.col));
}

TEST_CASE("the A3 square of [X_2134]") {
  auto a3 = make_system(Family::A, 3);
  CohomologyRing ring(a3);
  auto result = ring.structure_constants(el(a3, "2134"), el(a3, "2134"));
  CHECK(result == combo(a3, {{"2431", 1},
                             {"4213", -1},
                             {"3421", -1},
                             {"3241", -1},
                             {"3214", -1}}));
}

TEST_CASE("simple reflection products") {
  for (int n = 2; n <= 5; ++n) {
    auto sys = make_system(Family::A, n);
    CohomologyRing ring(sys);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto si = simple_reflection(sys, i);
        auto sj = simple_reflection(sys, j);
        auto product = ring.structure_constants(si, sj);
        if (std::abs(i - j) >= 2) {
          CHECK(product == combo(sys, {{format_element(compose(si, sj)), 1}}));
        } else {
          CHECK(product.terms.empty());
        }
      }
  }
}

TEST_CASE("multiplying by the unit class") {
  auto b2 = make_system(Family::B, 2);
  CohomologyRing ring(b2);
  auto id = identity_element(b2);
  for (const auto& u : enumerate_weyl(b2)) {
    auto product = ring.structure_constants(u, id);
    CHECK(product == combo(b2, {{format_element(u), 1}}));
  }
}

TEST_CASE("structure constants are graded and symmetric") {
  for (const auto& sys :
       {make_system(Family::A, 2), make_system(Family::A, 3),
        make_system(Family::B, 2), make_system(Family::C, 2),
        make_system(Family::D, 3), make_system(Family::G2, 2)}) {
    CohomologyRing ring(sys);
    auto all = enumerate_weyl(sys);
    for (const auto& u : all)
      for (const auto& v : all) {
        auto cuv = ring.structure_constants(u, v);
        CHECK(cuv == ring.structure_constants(v, u));
        for (const auto& [w, c] : cuv.terms) {
          CHECK(c != 0);
          CHECK(descent_count(w) == descent_count(u) + descent_count(v));
          // the length-level shadow of upper-triangularity
          CHECK(length(w) >= std::max(length(u), length(v)));
        }
      }
  }
}

TEST_CASE("duality: the pairing transforms constants back to triples") {
  for (const auto& sys :
       {make_system(Family::A, 1), make_system(Family::A, 2),
        make_system(Family::A, 3), make_system(Family::G2, 2)}) {
    CohomologyRing ring(sys);
    auto all = enumerate_weyl(sys);
    for (const auto& u : all)
      for (const auto& v : all) CHECK(ring.duality_check(u, v));
  }
}

TEST_CASE("expand_product folds associatively") {
  auto a5 = make_system(Family::A, 5);
  CohomologyRing ring(a5);
  CHECK(ring.expand_product({}) ==
        combo(a5, {{format_element(identity_element(a5)), 1}}));
  auto u = el(a5, "214365");
  CHECK(ring.expand_product({u}) == combo(a5, {{"214365", 1}}));

  auto s1 = simple_reflection(a5, 1);
  auto s3 = simple_reflection(a5, 3);
  auto s5 = simple_reflection(a5, 5);
  CHECK(ring.expand_product({s1, s3, s5}) == combo(a5, {{"214365", 1}}));

  // reassociation across a small sweep
  auto a2 = make_system(Family::A, 2);
  CohomologyRing small(a2);
  auto all = enumerate_weyl(a2);
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) {
        BasisCombination left;
        for (const auto& [w, c] : small.structure_constants(x, y).terms)
          for (const auto& [t, c2] : small.structure_constants(w, z).terms)
            left.add(t, c * c2);
        BasisCombination right;
        for (const auto& [w, c] : small.structure_constants(y, z).terms)
          for (const auto& [t, c2] : small.structure_constants(x, w).terms)
            right.add(t, c * c2);
        CHECK(left == right);
        CHECK(left == small.expand_product({x, y, z}));
      }
}

TEST_CASE("pairing entries replay against the localization oracle") {
  for (const auto& sys :
       {make_system(Family::B, 2), make_system(Family::D, 3),
        make_system(Family::G2, 2)}) {
    CohomologyRing ring(sys);
    FanModel fan = FanModel::build(sys);
    LocalizationOracle oracle(fan);
    const auto& group = ring.group();
    for (std::size_t u = 0; u < group.size(); ++u)
      for (std::size_t v = 0; v < group.size(); ++v) {
        auto m = monomial_product(class_Y(group.element(u)),
                                  class_X(group.element(v)));
        if (m.degree() != sys.rank) {
          CHECK(ring.pairing(u, v) == 0);
          continue;
        }
        CHECK(ring.pairing(u, v) == oracle.integral(m));
      }
  }
}

TEST_CASE("structure constants survive an oracle-driven recomputation") {
  // redo the unitriangular solve with every triple number taken from the
  // localization oracle instead of the closed formula
  for (const auto& sys : {make_system(Family::A, 2), make_system(Family::C, 2),
                          make_system(Family::G2, 2)}) {
    CohomologyRing ring(sys);
    const auto& group = ring.group();
    FanModel fan = FanModel::build(sys);
    LocalizationOracle oracle(fan);
    auto oracle_triple = [&](const WeylElement& u, const WeylElement& v,
                             const WeylElement& w) -> long long {
      auto m = monomial_product(monomial_product(class_X(u), class_X(v)),
                                class_Y(w));
      if (m.degree() != sys.rank) return 0;
      return oracle.integral(m);
    };
    for (const auto& u : enumerate_weyl(sys))
      for (const auto& v : enumerate_weyl(sys)) {
        const int degree = descent_count(u) + descent_count(v);
        BasisCombination expected = ring.structure_constants(u, v);
        if (degree > sys.rank) {
          CHECK(expected.terms.empty());
          continue;
        }
        // elements of the degree block in (length, one-line) order
        std::vector<std::size_t> order;
        for (std::size_t idx = 0; idx < group.size(); ++idx)
          if (group.descent_count(idx) == degree) order.push_back(idx);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          if (group.length(a) != group.length(b))
            return group.length(a) < group.length(b);
          return group.element(a) < group.element(b);
        });
        BasisCombination got;
        std::vector<long long> c(order.size(), 0);
        for (std::size_t r = 0; r < order.size(); ++r) {
          long long value = oracle_triple(u, v, group.element(order[r]));
          for (std::size_t p = 0; p < r; ++p) {
            if (c[p] == 0) continue;
            value -= oracle_triple(group.element(order[p]),
                                   identity_element(sys),
                                   group.element(order[r])) *
                     c[p];
          }
          c[r] = value;
          got.add(group.element(order[r]), c[r]);
        }
        CHECK(got == expected);
      }
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(CohomologyRing(make_system(Family::A, 3), 10), SizeCapError);
  CHECK(CohomologyRing::default_size_cap() == 50000);
}

TEST_CASE("combination formatting") {
  auto a3 = make_system(Family::A, 3);
  CHECK(format_combination(BasisCombination{}) == "0");
  CHECK(format_combination(combo(a3, {{"2431", 1}, {"3214", -1}, {"4321", 2}})) ==
        "[X_2431] - [X_3214] + 2*[X_4321]");
}
