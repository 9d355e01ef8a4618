#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vira/witt.hpp"

using namespace vira;
using vira::testing::Gen;

TEST_SUITE("witt") {
  TEST_CASE("bracket examples") {
    CHECK(witt_bracket(ell(2), ell(3)) == WittVector::basis(5, Scalar{-1}));
    for (Index n = -5; n <= 5; ++n) CHECK(witt_bracket(ell(n), ell(n)).is_zero());

    const WittVector got = witt_bracket(ell(1) + ell(2), ell(-1));
    CHECK(got == vira::testing::witt_bracket_termwise(ell(1) + ell(2), ell(-1)));
    CHECK(got == WittVector::basis(0, Scalar{2}) + WittVector::basis(1, Scalar{3}));
  }

  TEST_CASE("bracket agrees with the term-by-term oracle") {
    Gen gen(21);
    for (int i = 0; i < 300; ++i) {
      const WittVector x = gen.witt_vector(10);
      const WittVector y = gen.witt_vector(10);
      CHECK(witt_bracket(x, y) == vira::testing::witt_bracket_termwise(x, y));
    }
  }

  TEST_CASE("antisymmetry and alternating on random vectors") {
    Gen gen(22);
    for (int i = 0; i < 300; ++i) {
      const WittVector x = gen.witt_vector(10);
      const WittVector y = gen.witt_vector(10);
      CHECK(witt_bracket(x, y) == -witt_bracket(y, x));
      CHECK(witt_bracket(x, x).is_zero());
    }
  }

  TEST_CASE("grading") {
    for (Index m = -6; m <= 6; ++m) {
      for (Index n = -6; n <= 6; ++n) {
        const WittVector b = witt_bracket_basis(m, n);
        if (m == n) {
          CHECK(b.is_zero());
        } else {
          REQUIRE(b.size() == 1);
          CHECK(b.begin()->first == m + n);
        }
      }
    }
  }

  TEST_CASE("check_jacobi examples") {
    // By hand: [l1,[l2,l3]] = -[l1,l5] = 4 l6, [l2,[l3,l1]] = 2[l2,l4] = -4 l6,
    // [l3,[l1,l2]] = -[l3,l3] = 0.
    CHECK(witt_bracket(ell(1), witt_bracket(ell(2), ell(3))) == WittVector::basis(6, Scalar{4}));
    CHECK(witt_bracket(ell(2), witt_bracket(ell(3), ell(1))) == WittVector::basis(6, Scalar{-4}));
    CHECK(check_jacobi(ell(1), ell(2), ell(3)));

    Gen gen(23);
    for (int i = 0; i < 200; ++i) {
      const WittVector x = gen.witt_vector(10);
      const WittVector y = gen.witt_vector(10);
      const WittVector z = gen.witt_vector(10);
      CHECK(check_jacobi(x, x, y));
      CHECK(check_jacobi(x, y, z));
    }
  }

  TEST_CASE("exhaustive basis sweep") {
    const auto report = check_witt_jacobi_basis(8);
    CHECK(report.passed());
    CHECK(report.checked_count == 17 * 17 * 17);
  }

  TEST_CASE("rendering") {
    CHECK(render_witt(WittVector{}) == "0");
    CHECK(render_witt(ell(3) + WittVector::basis(-1, Scalar(1, 2))) == "1/2*l(-1) + 1*l(3)");
  }
}
