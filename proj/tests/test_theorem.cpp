#include "fglab/errors.hpp"
#include "fglab/theorem.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace fglab;

namespace {

Word xy(const char *text) { return parse_word(text, xy_alphabet()); }

PVector pv(std::initializer_list<long long> v) {
  PVector p;
  for (auto x : v)
    p.entries.emplace_back(x);
  return p;
}

// v_{n+1} = A v_n written out entrywise: (A v)_k = v_k - v_{k-1 mod d}.
PVector step_by_hand(const PVector &v) {
  const auto d = v.entries.size();
  PVector out;
  for (std::size_t k = 0; k < d; ++k)
    out.entries.push_back(v.entries[k] - v.entries[(k + d - 1) % d]);
  return out;
}

// det(A - lambda I) at an integer lambda by permutation expansion.
long long leibniz_det(std::int64_t d, long long lambda) {
  auto a = transition_matrix(d);
  std::vector<std::size_t> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < perm.size() && term != 0; ++i)
      term *= a.at(i, perm[i]).convert_to<long long>() - (i == perm[i] ? lambda : 0);
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

} // namespace

TEST_CASE("KernelSpec") {
  CHECK_THROWS_AS(KernelSpec(1), std::invalid_argument);
  CHECK(KernelSpec(4).images() == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("canonical_basis") {
  auto words = [](const SchreierBasis &b) {
    std::vector<std::string> out;
    for (const auto &e : b.elements)
      out.push_back(to_string(e.word));
    return out;
  };
  CHECK(words(canonical_basis(KernelSpec(3))) ==
        std::vector<std::string>{"x^3", "y", "x y x^-1", "x^2 y x^-2"});
  CHECK(words(canonical_basis(KernelSpec(2))) == std::vector<std::string>{"x^2", "y", "x y x^-1"});
  auto b5 = canonical_basis(KernelSpec(5));
  CHECK(b5.size() == 6);
  CHECK(to_string(b5.elements[0].word) == "x^5");
  CHECK(to_string(b5.elements[5].word) == "x^4 y x^-4");
}

TEST_CASE("conjugation_table") {
  for (std::int64_t d = 2; d <= 7; ++d) {
    auto table = conjugation_table(KernelSpec(d));
    REQUIRE(table.size() == static_cast<std::size_t>(d + 1));
    CHECK(table[0].letter == "a");
    CHECK(to_string(table[0].image) == "a");
    for (std::int64_t k = 1; k < d; ++k)
      CHECK(to_string(table[k].image) == "b" + std::to_string(k + 1));
    CHECK(table.back().letter == "b" + std::to_string(d));
    CHECK(to_string(table.back().image) == "a b1 a^-1");
  }
}

TEST_CASE("p_vector") {
  CHECK(p_vector(KernelSpec(3), omega(0)).p == pv({-1, 1, 0}));
  // Frozen from the residue-counting oracle in tests/oracles/freeze_values.py.
  CHECK(p_vector(KernelSpec(3), omega(1)).p == pv({-1, 2, -1}));
  CHECK(p_vector(KernelSpec(2), omega(1)).p == pv({-2, 2}));
  CHECK(p_vector(KernelSpec(5), omega(3)).p == pv({-1, 4, -6, 4, -1}));
  auto r = p_vector(KernelSpec(3), xy("x^3 y x^-3"));
  CHECK(r.p == pv({1, 0, 0}));
  CHECK(r.a_sum == 0);
  CHECK(p_vector(KernelSpec(3), xy("x^6")).a_sum == 2);
  CHECK_THROWS_AS(p_vector(KernelSpec(3), xy("x")), DomainError);
}

TEST_CASE("transition_matrix") {
  auto a2 = transition_matrix(2);
  CHECK(a2.at(0, 0) == 1);
  CHECK(a2.at(0, 1) == -1);
  CHECK(a2.at(1, 0) == -1);
  CHECK(a2.at(1, 1) == 1);
  auto a3 = transition_matrix(3);
  const long long expected[3][3] = {{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(a3.at(i, j) == expected[i][j]);
  for (std::int64_t d = 2; d <= 20; ++d) {
    auto a = transition_matrix(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
      BigInt row = 0, col = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        row += a.at(i, j);
        col += a.at(j, i);
      }
      CHECK(row == 0);
      CHECK(col == 0);
    }
  }
  CHECK_THROWS_AS(transition_matrix(1), std::invalid_argument);
  CHECK(initial_vector(4) == pv({-1, 1, 0, 0}));
}

TEST_CASE("iterate") {
  CHECK(iterate(3, 0) == pv({-1, 1, 0}));
  CHECK(iterate(2, 5) == pv({-32, 32}));
  CHECK(iterate(3, 2) == pv({0, 3, -3}));

  for (std::int64_t d = 2; d <= 9; ++d) {
    PVector v = initial_vector(d);
    for (unsigned n = 0; n <= 40; ++n) {
      REQUIRE(iterate(d, n) == v);
      REQUIRE(v.sum() == 0);
      v = step_by_hand(v);
    }
  }
  for (unsigned n = 0; n <= 200; n += 7)
    CHECK(iterate(2, n).max_norm() == BigInt(1) << n);

  // Large exponent stays exact: v_n = 2^n (-1, 1) for d = 2.
  auto big = iterate(2, 10000);
  CHECK(big.entries[1] == BigInt(1) << 10000);
  CHECK(big.entries[0] == -(BigInt(1) << 10000));
  CHECK(iterate(12, 10000).sum() == 0);
}

TEST_CASE("verify_recurrence") {
  for (auto [d, n_max] : {std::pair{3, 6u}, {2, 8u}, {5, 5u}}) {
    auto report = verify_recurrence(KernelSpec(d), n_max);
    REQUIRE(report.rows.size() == n_max + 1);
    for (const auto &row : report.rows) {
      CHECK(row.by_rewriting == row.by_matrix);
      CHECK(row.a_sum == 0);
    }
  }
}

TEST_CASE("char_poly_check") {
  auto r2 = char_poly_report(2);
  CHECK(r2.determinant.to_string("L") == "L^2 - 2*L");
  CHECK(r2.holds);
  CHECK(char_poly_check(3));
  CHECK(char_poly_check(7));
  CHECK_THROWS_AS(char_poly_check(1), std::invalid_argument);
  CHECK_THROWS_AS(char_poly_check(13), std::invalid_argument);
  CHECK(char_poly_check(13, 13));

  // Pointwise against permutation expansion.
  for (std::int64_t d = 2; d <= 7; ++d) {
    auto r = char_poly_report(d);
    for (long long lam = -3; lam <= 3; ++lam) {
      CHECK(leibniz_det(d, lam) == ipow(1 - lam, static_cast<int>(d)) - 1);
      CHECK(r.determinant.evaluate(lam) == leibniz_det(d, lam));
    }
  }
}

TEST_CASE("eigen_check") {
  auto pairs = eigen_check(3);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[2].eigenvalue.is_zero());
  for (const auto &c : pairs[2].eigenvector)
    CHECK(c == CyclotomicElement::constant(3, 1));
  CHECK(pairs[0].holds);
  CHECK(pairs[0].eigenvector[1] == CyclotomicElement::t_power(3, 2));
  CHECK(pairs[0].eigenvector[2] == CyclotomicElement::t_power(3, 1));
  for (std::int64_t d = 2; d <= 12; ++d)
    for (const auto &p : eigen_check(d)) {
      CHECK(p.holds);
      if (p.j == d)
        CHECK(p.eigenvalue.is_zero());
    }
}

TEST_CASE("spectral_certificate") {
  auto s2 = spectral_certificate(2, 20);
  CHECK(s2.alpha[0].real() == doctest::Approx(-1.0));
  CHECK(std::abs(s2.alpha[0].imag()) < 1e-12);
  CHECK(std::abs(s2.alpha[1]) < 1e-12);

  auto s3 = spectral_certificate(3, 20);
  CHECK(s3.max_alpha_off_kernel > kAlphaFloor);
  for (std::int64_t d = 2; d <= 7; ++d) {
    auto s = spectral_certificate(d, 20);
    CHECK(s.max_relative_error <= kReconstructionTolerance);
    CHECK(std::abs(s.alpha.back()) < 1e-12); // v_0 sums to zero
  }
  CHECK(spectral_certificate(12, 100).max_relative_error <= kReconstructionTolerance);
}

TEST_CASE("nonvanishing_check") {
  CHECK(nonvanishing_check(3, 100));
  CHECK(nonvanishing_check(2, 60));
  CHECK(nonvanishing_check(6, 100));
}

TEST_CASE("witness") {
  auto c = witness(3, 2);
  CHECK(c.witness == omega(0));
  CHECK(c.p == pv({-1, 1, 0}));
  CHECK(c.lcs == LcsWeight::exactly(2));
  CHECK(c.in_Fm);
  CHECK_FALSE(c.in_G2);
  CHECK(verify_certificate(c).empty());

  auto c24 = witness(2, 4);
  CHECK(c24.witness == omega(2));
  CHECK(c24.p == pv({-4, 4}));
  CHECK(c24.lcs == LcsWeight::exactly(4));

  auto c53 = witness(5, 3);
  CHECK(c53.p == pv({-1, 2, -1, 0, 0}));
  CHECK(c53.lcs == LcsWeight::exactly(3));
  CHECK(c53.transversal.size() == 5);
  CHECK(c53.basis_names.front() == "a");

  // A cap of exactly m still certifies membership.
  auto tight = witness(3, 5, 5);
  CHECK(tight.lcs == LcsWeight::exactly(5));
  CHECK(verify_certificate(tight).empty());

  CHECK_THROWS_AS(witness(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(witness(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(witness(3, 5, 4), std::invalid_argument);
}

TEST_CASE("verify_certificate rejects tampering") {
  auto c = witness(4, 3);
  REQUIRE(verify_certificate(c).empty());

  auto bad_p = c;
  bad_p.p.entries[0] += 1;
  CHECK_FALSE(verify_certificate(bad_p).empty());

  auto bad_word = c;
  bad_word.witness = omega(0);
  CHECK_FALSE(verify_certificate(bad_word).empty());

  auto bad_verdict = c;
  bad_verdict.in_G2 = true;
  CHECK_FALSE(verify_certificate(bad_verdict).empty());

  auto bad_basis = c;
  bad_basis.basis.pop_back();
  CHECK_FALSE(verify_certificate(bad_basis).empty());
}
