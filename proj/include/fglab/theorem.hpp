#pragma once

#include "fglab/bigint.hpp"
#include "fglab/cyclotomic.hpp"
#include "fglab/magnus.hpp"
#include "fglab/polynomial.hpp"
#include "fglab/stallings.hpp"
#include "fglab/word.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fglab {

/// G = ker(F(x, y) -> Z_d) with x -> 1, y -> 0.
class KernelSpec {
public:
  /// Throws std::invalid_argument for d < 2.
  explicit KernelSpec(std::int64_t d);

  std::int64_t d() const { return d_; }
  const Alphabet &alphabet() const { return xy_alphabet(); }
  std::vector<std::int64_t> images() const { return {1, 0}; }

private:
  std::int64_t d_;
};

/// Kernel graph with its x-preferred transversal and the basis
/// (a, b1, ..., bd), a = x^d, bk = x^(k-1) y x^-(k-1).
struct CanonicalKernel {
  KernelSpec spec;
  SubgroupGraph graph;
  Transversal transversal;
  SchreierBasis basis;
};

CanonicalKernel canonical_kernel(const KernelSpec &spec);
SchreierBasis canonical_basis(const KernelSpec &spec);

struct ConjugationEntry {
  std::string letter; // basis letter s
  Word image;         // x s x^-1 rewritten over the basis
};

/// x s x^-1 for every basis letter s, computed by rewriting. Throws
/// VerificationFailure unless the table is a -> a, bk -> b(k+1),
/// bd -> a b1 a^-1.
std::vector<ConjugationEntry> conjugation_table(const KernelSpec &spec);

/// Exponent sums (P_1, ..., P_d) of b1..bd; entry k-1 holds P_k.
struct PVector {
  std::vector<BigInt> entries;

  bool is_zero() const;
  BigInt sum() const;
  BigInt max_norm() const;
  std::string to_string() const;
  friend bool operator==(const PVector &, const PVector &) = default;
};

struct PVectorReport {
  PVector p;
  BigInt a_sum;
};

/// Throws DomainError when w is not in the kernel.
PVectorReport p_vector(const CanonicalKernel &kernel, const Word &w);
PVectorReport p_vector(const KernelSpec &spec, const Word &w);

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt &at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const BigInt &at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  PVector apply(const PVector &v) const;
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// 1 on the diagonal, -1 on the subdiagonal and in the top-right corner.
/// Throws std::invalid_argument for d < 2.
IntMatrix transition_matrix(std::int64_t d);

/// v_0 = (-1, 1, 0, ..., 0).
PVector initial_vector(std::int64_t d);

/// A^n v_0 by binary exponentiation of A.
PVector iterate(std::int64_t d, std::uint64_t n);

struct RecurrenceRow {
  unsigned n;
  PVector by_rewriting;
  PVector by_matrix;
  BigInt a_sum;
};

struct RecurrenceReport {
  std::int64_t d;
  std::vector<RecurrenceRow> rows;
};

/// Compares p_vector(omega_n), obtained by rewriting, against iterate(d, n)
/// for 0 <= n <= n_max. Throws VerificationFailure naming the first n where
/// they differ or the a-exponent is nonzero.
RecurrenceReport verify_recurrence(const KernelSpec &spec, unsigned n_max);

struct CharPolyReport {
  std::int64_t d;
  Polynomial determinant; // det(A - lambda I)
  Polynomial expected;    // (1 - lambda)^d - 1
  bool holds;
};

inline constexpr std::int64_t kDefaultSpectralBound = 12;

/// Symbolic det(A - lambda I) against (1 - lambda)^d - 1. Throws
/// std::invalid_argument unless 2 <= d <= bound.
CharPolyReport char_poly_report(std::int64_t d, std::int64_t bound = kDefaultSpectralBound);
bool char_poly_check(std::int64_t d, std::int64_t bound = kDefaultSpectralBound);

struct EigenPair {
  std::int64_t j;
  CyclotomicElement eigenvalue;                // 1 - t^j
  std::vector<CyclotomicElement> eigenvector;  // (1, t^((d-1)j), ..., t^(2j), t^j)
  bool holds;                                  // A x_j == lambda_j x_j
};

std::vector<EigenPair> eigen_check(std::int64_t d);

inline constexpr double kAlphaFloor = 1e-9;
inline constexpr double kReconstructionTolerance = 1e-6;

struct SpectralReport {
  std::int64_t d;
  unsigned n_max;
  std::vector<std::complex<double>> alpha; // alpha_1 .. alpha_d
  double max_alpha_off_kernel;             // max |alpha_j| over j != d
  double max_relative_error;               // over 0 <= n <= n_max
  unsigned worst_n;
};

/// Decomposes v_0 over the eigenvectors x_j (floating point) and rebuilds
/// v_n = sum_j alpha_j lambda_j^n x_j, comparing with the exact iterates.
/// The error at n is max_i |rebuilt_i - v_n,i| / max(1, |v_n|_inf). Throws
/// VerificationFailure when max_{j != d} |alpha_j| <= 1e-9 or the error
/// exceeds 1e-6.
SpectralReport spectral_certificate(std::int64_t d, unsigned n_max);

/// A^n v_0 != 0 for every 1 <= n <= n_max, in exact arithmetic.
bool nonvanishing_check(std::int64_t d, unsigned n_max);

struct WitnessCertificate {
  std::int64_t d;
  unsigned m;
  Word witness; // omega_(m-2)
  PVector p;
  BigInt a_sum;
  unsigned lcs_cap;
  LcsWeight lcs;
  std::vector<Word> basis;
  std::vector<std::string> basis_names;
  std::vector<Word> transversal;
  bool in_Fm;
  bool in_G2;
};

/// Issues omega_(m-2) with its P-vector and Magnus weight. The Magnus cap
/// defaults to m + 1. Throws std::invalid_argument for d < 2, m < 2 or a cap
/// below m.
WitnessCertificate witness(std::int64_t d, unsigned m, std::optional<unsigned> cap = {});

/// Re-derives every claim of a certificate through calls that do not share
/// the issuing code path: the witness is regenerated, F_m membership is
/// checked with in_lcs, G_2 non-membership with in_derived_subgroup on a
/// freshly built kernel graph, and the P-vector against the matrix iterate.
/// Returns an empty string on success, otherwise the first failed check.
std::string verify_certificate(const WitnessCertificate &cert);

} // namespace fglab
