// Acceptance suite: one PASS/FAIL line per criterion, each under its time bound.

#include "fglab/errors.hpp"
#include "fglab/magnus.hpp"
#include "fglab/serialization.hpp"
#include "fglab/stallings.hpp"
#include "fglab/theorem.hpp"
#include "fglab/word.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace fglab;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string &what) {
  if (!ok)
    throw Failure{what};
}

PVector pv(std::initializer_list<long long> xs) {
  PVector p;
  for (long long x : xs)
    p.entries.emplace_back(x);
  return p;
}

// P_k counts signed y-edges read at residue k-1 while tracking x-exponent mod d.
PVector path_count(const Word &w, std::int64_t d) {
  PVector p;
  p.entries.assign(static_cast<std::size_t>(d), BigInt(0));
  std::int64_t r = 0;
  for (const auto &l : w.letters()) {
    if (l.gen == 0)
      r = ((r + l.sign) % d + d) % d;
    else
      p.entries[static_cast<std::size_t>(r)] += l.sign;
  }
  return p;
}

SubgroupGraph kernel_of(std::int64_t d) {
  const std::vector<std::int64_t> images{1, 0};
  return kernel_graph(xy_alphabet(), images, d);
}

void ac1() {
  for (std::int64_t d : {2, 3, 5, 7, 12}) {
    auto r = p_vector(KernelSpec(d), omega(0));
    PVector expected;
    expected.entries.assign(static_cast<std::size_t>(d), BigInt(0));
    expected.entries[0] = -1;
    expected.entries[1] = 1;
    require(r.p == expected, "d=" + std::to_string(d) + " got " + r.p.to_string());
    require(r.a_sum == 0, "nonzero a-exponent at d=" + std::to_string(d));
  }
}

void ac2() {
  auto k = canonical_kernel(KernelSpec(3));
  auto rewritten = to_string(rewrite(k.graph, k.transversal, k.basis, omega(0)));
  require(rewritten == "b2 b1^-1", "rewrite gave '" + rewritten + "'");
  for (std::int64_t d = 2; d <= 7; ++d) {
    auto table = conjugation_table(KernelSpec(d));
    require(table.size() == static_cast<std::size_t>(d + 1), "table size at d=" + std::to_string(d));
    const auto &last = table.back();
    require(last.letter == "b" + std::to_string(d) &&
                to_string(last.image) == "a b1 a^-1",
            "x bd x^-1 at d=" + std::to_string(d) + " is " + to_string(last.image));
  }
}

void ac3() {
  for (std::int64_t d : {2, 3, 5}) {
    auto k = canonical_kernel(KernelSpec(d));
    for (unsigned n = 0; n <= 8; ++n) {
      auto w = omega(n);
      auto by_rewriting = p_vector(k, w).p;
      auto by_matrix = iterate(d, n);
      auto by_paths = path_count(w, d);
      const auto tag = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      require(by_rewriting == by_matrix, tag + " rewriting " + by_rewriting.to_string() +
                                             " vs matrix " + by_matrix.to_string());
      require(by_rewriting == by_paths, tag + " rewriting vs path count " + by_paths.to_string());
    }
  }
}

void ac4() {
  for (std::int64_t d = 2; d <= 12; ++d) {
    require(char_poly_check(d), "characteristic polynomial at d=" + std::to_string(d));
    auto pairs = eigen_check(d);
    require(pairs.size() == static_cast<std::size_t>(d), "eigenpair count at d=" + std::to_string(d));
    for (const auto &e : pairs)
      require(e.holds, "eigenpair j=" + std::to_string(e.j) + " at d=" + std::to_string(d));
  }
}

void ac5() {
  for (std::int64_t d = 2; d <= 12; ++d)
    require(nonvanishing_check(d, 100), "A^n v0 vanished at d=" + std::to_string(d));
  BigInt power = 1;
  for (unsigned n = 0; n <= 100; ++n) {
    auto v = iterate(2, n);
    for (const auto &x : v.entries)
      require(x == power || x == -power, "d=2 n=" + std::to_string(n) + " entry is not +-2^n");
    power *= 2;
  }
}

void ac6() {
  for (std::int64_t d = 2; d <= 7; ++d) {
    auto g = kernel_of(d);
    auto t = schreier_transversal(g, GenIndex{0});
    auto b = schreier_basis(g, t);
    for (unsigned m = 2; m <= 8; ++m) {
      const auto tag = "d=" + std::to_string(d) + " m=" + std::to_string(m);
      auto cert = witness(d, m);
      require(cert.in_Fm && !cert.in_G2, tag + " certificate verdicts");
      auto w = omega(m - 2);
      require(cert.witness == w, tag + " witness differs from omega_(m-2)");
      require(in_lcs(w, m, m + 1), tag + " witness not in F_m");
      require(!in_derived_subgroup(g, t, b, w), tag + " witness lies in G_2");
      auto problem = verify_certificate(cert);
      require(problem.empty(), tag + " " + problem);
    }
  }
}

void ac7() {
  auto fixture = load_subgroup(FGLAB_FIXTURES "/index3.json");
  auto g = fixture.graph();
  require(index(g) == SubgroupIndex::finite(3), "fixture index " + index(g).to_string());
  require(!is_normal(g), "fixture reported normal");
  for (std::int64_t d = 2; d <= 12; ++d) {
    auto k = kernel_of(d);
    require(index(k) == SubgroupIndex::finite(static_cast<std::size_t>(d)),
            "kernel index at d=" + std::to_string(d));
    require(is_normal(k), "kernel not normal at d=" + std::to_string(d));
  }
}

void ac8() {
  std::mt19937_64 rng(20261017);
  std::vector<SubgroupGraph> graphs;
  for (std::int64_t d : {2, 3, 5, 7, 12})
    graphs.push_back(kernel_of(d));
  graphs.push_back(load_subgroup(FGLAB_FIXTURES "/index3.json").graph());
  for (const auto &g : graphs) {
    auto t = schreier_transversal(g);
    auto b = schreier_basis(g, t);
    for (int i = 0; i < 1000; ++i) {
      auto w = testing::random_subgroup_element(g, 40, rng);
      require(w.length() <= 40, "walk longer than 40");
      auto back = evaluate(b, rewrite(g, t, b, w));
      require(back == w, "round trip failed for " + to_string(w));
    }
  }
}

void ac9() {
  constexpr unsigned cap = 6;
  std::mt19937_64 rng(6);
  const auto &ab = xy_alphabet();
  const auto one = NoncommSeries::one(cap);
  for (int i = 0; i < 1000; ++i) {
    auto u = testing::random_word(ab, 16, rng);
    auto v = testing::random_word(ab, 16, rng);
    auto mu = magnus_expand(u, cap);
    auto mv = magnus_expand(v, cap);
    require(magnus_expand(u * v, cap) == series_mul(mu, mv),
            "multiplicativity for " + to_string(u) + " , " + to_string(v));
    auto mui = magnus_expand(inverse(u), cap);
    require(series_mul(mu, mui) == one && series_mul(mui, mu) == one,
            "inverse law for " + to_string(u));
  }
  for (unsigned n = 0; n <= 5; ++n) {
    auto w = lcs_weight(omega(n), n + 3);
    require(w == LcsWeight::exactly(n + 2),
            "weight of omega_" + std::to_string(n) + " is " + w.to_string());
  }
}

void ac10() {
  std::mt19937_64 rng(10);
  for (std::int64_t d : {2, 3, 5, 7, 12}) {
    auto k = canonical_kernel(KernelSpec(d));
    std::uniform_int_distribution<int> count(1, 5);
    for (int i = 0; i < 300; ++i) {
      Word w(xy_alphabet());
      for (int c = count(rng); c > 0; --c) {
        auto u = testing::random_subgroup_element(k.graph, 20, rng);
        auto v = testing::random_subgroup_element(k.graph, 20, rng);
        w = w * commutator(u, v);
      }
      require(in_derived_subgroup(k.graph, k.transversal, k.basis, w),
              "commutator product rejected at d=" + std::to_string(d));
      require(p_vector(k, w).p.is_zero(), "nonzero P-vector at d=" + std::to_string(d));
    }
  }
}

struct Criterion {
  const char *name;
  double limit_seconds;
  std::function<void()> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1  omega_0 P-vector (-1, 1, 0, ...)", 1, ac1},
      {"AC2  omega_0 = b2 b1^-1 and conjugation table", 1, ac2},
      {"AC3  rewriting = matrix power = path count", 10, ac3},
      {"AC4  characteristic polynomial and eigenpairs", 10, ac4},
      {"AC5  A^n v0 nonvanishing for n <= 100", 30, ac5},
      {"AC6  witness soundness", 60, ac6},
      {"AC7  subgroup graph fixtures", 1, ac7},
      {"AC8  rewrite/evaluate round trip", 30, ac8},
      {"AC9  Magnus laws and omega_n weights", 60, ac9},
      {"AC10 commutator products lie in G_2", 30, ac10},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body();
    } catch (const Failure &f) {
      detail = f.what;
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && elapsed > c.limit_seconds)
      detail = "exceeded time bound";
    bool ok = detail.empty();
    failures += ok ? 0 : 1;
    std::printf("%s  %-48s %8.3fs (limit %gs)%s%s\n", ok ? "PASS" : "FAIL", c.name, elapsed,
                c.limit_seconds, ok ? "" : "  ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
