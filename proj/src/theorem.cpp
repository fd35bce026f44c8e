#include "fglab/theorem.hpp"

#include "fglab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fglab {

KernelSpec::KernelSpec(std::int64_t d) : d_(d) {
  if (d < 2)
    throw std::invalid_argument("modulus must be at least 2");
}

CanonicalKernel canonical_kernel(const KernelSpec &spec) {
  auto images = spec.images();
  auto graph = kernel_graph(spec.alphabet(), images, spec.d());
  auto transversal = schreier_transversal(graph, GenIndex{0});
  auto basis = schreier_basis(graph, transversal);
  return {spec, std::move(graph), std::move(transversal), std::move(basis)};
}

SchreierBasis canonical_basis(const KernelSpec &spec) { return canonical_kernel(spec).basis; }

namespace {

std::string b_name(std::int64_t k) { return "b" + std::to_string(k); }

GenIndex basis_index(const SchreierBasis &b, const std::string &name) {
  auto i = b.find(name);
  if (!i)
    throw std::logic_error("basis has no letter " + name);
  return static_cast<GenIndex>(*i);
}

} // namespace

std::vector<ConjugationEntry> conjugation_table(const KernelSpec &spec) {
  auto k = canonical_kernel(spec);
  const Word x = Word::generator(spec.alphabet(), 0);
  const Word x_inv = inverse(x);
  const Alphabet &letters = k.basis.letters;

  std::vector<ConjugationEntry> table;
  for (const auto &e : k.basis.elements)
    table.push_back({e.name, rewrite(k.graph, k.transversal, k.basis,
                                     multiply(multiply(x, e.word), x_inv))});

  auto letter = [&](const std::string &name, int sign = 1) {
    return Word::generator(letters, basis_index(k.basis, name), sign);
  };
  for (const auto &[name, image] : table) {
    Word expected(letters);
    if (name == "a") {
      expected = letter("a");
    } else {
      auto idx = std::stoll(name.substr(1));
      expected = idx < spec.d() ? letter(b_name(idx + 1))
                                : letter("a") * letter("b1") * letter("a", -1);
    }
    if (!(image == expected))
      throw VerificationFailure("x " + name + " x^-1 rewrites to " + to_string(image) +
                                ", expected " + to_string(expected));
  }
  return table;
}

bool PVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const BigInt &v) { return v == 0; });
}

BigInt PVector::sum() const {
  BigInt s = 0;
  for (const auto &v : entries)
    s += v;
  return s;
}

BigInt PVector::max_norm() const {
  BigInt m = 0;
  for (const auto &v : entries)
    m = std::max(m, BigInt(abs(v)));
  return m;
}

std::string PVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i)
    s += (i ? ", " : "") + entries[i].str();
  return s + ")";
}

PVectorReport p_vector(const CanonicalKernel &kernel, const Word &w) {
  if (!contains(kernel.graph, w))
    throw DomainError("word '" + to_string(w) + "' is not in the kernel of Z_" +
                      std::to_string(kernel.spec.d()));
  auto sums = exponent_sums(rewrite(kernel.graph, kernel.transversal, kernel.basis, w));
  PVectorReport r;
  r.a_sum = sums[basis_index(kernel.basis, "a")];
  for (std::int64_t k = 1; k <= kernel.spec.d(); ++k)
    r.p.entries.push_back(sums[basis_index(kernel.basis, b_name(k))]);
  return r;
}

PVectorReport p_vector(const KernelSpec &spec, const Word &w) {
  return p_vector(canonical_kernel(spec), w);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("matrix sizes differ");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const BigInt &aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

PVector IntMatrix::apply(const PVector &v) const {
  if (v.entries.size() != n_)
    throw std::invalid_argument("vector length differs from matrix size");
  PVector out;
  out.entries.assign(n_, BigInt(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != 0)
        out.entries[i] += at(i, j) * v.entries[j];
  return out;
}

IntMatrix transition_matrix(std::int64_t d) {
  if (d < 2)
    throw std::invalid_argument("modulus must be at least 2");
  const auto n = static_cast<std::size_t>(d);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.at(i, i) += 1;
    a.at(i, (i + n - 1) % n) -= 1;
  }
  return a;
}

PVector initial_vector(std::int64_t d) {
  if (d < 2)
    throw std::invalid_argument("modulus must be at least 2");
  PVector v;
  v.entries.assign(static_cast<std::size_t>(d), BigInt(0));
  v.entries[0] = -1;
  v.entries[1] = 1;
  return v;
}

PVector iterate(std::int64_t d, std::uint64_t n) {
  IntMatrix base = transition_matrix(d);
  IntMatrix acc = IntMatrix::identity(base.size());
  for (; n > 0; n >>= 1) {
    if (n & 1)
      acc = acc * base;
    if (n > 1)
      base = base * base;
  }
  return acc.apply(initial_vector(d));
}

RecurrenceReport verify_recurrence(const KernelSpec &spec, unsigned n_max) {
  auto kernel = canonical_kernel(spec);
  const Word x = Word::generator(spec.alphabet(), 0);
  RecurrenceReport report{spec.d(), {}};
  Word w = omega(0);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0)
      w = commutator(w, x);
    auto rewritten = p_vector(kernel, w);
    auto expected = iterate(spec.d(), n);
    if (!(rewritten.p == expected))
      throw VerificationFailure("d=" + std::to_string(spec.d()) + " n=" + std::to_string(n) +
                                ": rewriting gives " + rewritten.p.to_string() +
                                ", matrix power gives " + expected.to_string());
    if (rewritten.a_sum != 0)
      throw VerificationFailure("d=" + std::to_string(spec.d()) + " n=" + std::to_string(n) +
                                ": nonzero a-exponent " + rewritten.a_sum.str());
    report.rows.push_back({n, std::move(rewritten.p), std::move(expected), rewritten.a_sum});
  }
  return report;
}

CharPolyReport char_poly_report(std::int64_t d, std::int64_t bound) {
  if (d < 2 || d > bound)
    throw std::invalid_argument("char_poly_check needs 2 <= d <= " + std::to_string(bound));
  const auto a = transition_matrix(d);
  const auto n = a.size();
  const Polynomial lambda = Polynomial::variable();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Polynomial(std::vector<Rational>{Rational(a.at(i, j))});
      if (i == j)
        m[i][j] -= lambda;
    }
  CharPolyReport r{d, determinant(std::move(m)),
                   Polynomial::binomial_power(1, -1, static_cast<unsigned>(d)) - Polynomial(1),
                   false};
  r.holds = r.determinant == r.expected;
  return r;
}

bool char_poly_check(std::int64_t d, std::int64_t bound) {
  return char_poly_report(d, bound).holds;
}

std::vector<EigenPair> eigen_check(std::int64_t d) {
  const auto a = transition_matrix(d);
  const auto n = a.size();
  std::vector<EigenPair> out;
  for (std::int64_t j = 1; j <= d; ++j) {
    EigenPair pair{j,
                   CyclotomicElement::constant(n, 1) - CyclotomicElement::t_power(n, j),
                   {},
                   true};
    for (std::size_t i = 0; i < n; ++i)
      pair.eigenvector.push_back(
          CyclotomicElement::t_power(n, -static_cast<long long>(i) * j));
    for (std::size_t i = 0; i < n && pair.holds; ++i) {
      CyclotomicElement row(n);
      for (std::size_t k = 0; k < n; ++k)
        if (a.at(i, k) != 0)
          row += Rational(a.at(i, k)) * pair.eigenvector[k];
      pair.holds = row == pair.eigenvalue * pair.eigenvector[i];
    }
    out.push_back(std::move(pair));
  }
  return out;
}

SpectralReport spectral_certificate(std::int64_t d, unsigned n_max) {
  using cd = std::complex<double>;
  const auto n = static_cast<std::size_t>(d);
  const auto a = transition_matrix(d);
  PVector exact = initial_vector(d);

  // zeta^k for k mod d, evaluated once so every use agrees bit for bit.
  std::vector<cd> zeta(n);
  for (std::size_t k = 0; k < n; ++k)
    zeta[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                  static_cast<double>(d));
  auto zeta_pow = [&](long long k) {
    auto md = static_cast<long long>(d);
    return zeta[static_cast<std::size_t>(((k % md) + md) % md)];
  };

  // The x_j are the columns of a DFT matrix: X_ij = zeta^(-ij), so
  // alpha_j = (1/d) sum_i zeta^(ij) v0_i.
  SpectralReport r{d, n_max, {}, 0.0, 0.0, 0};
  std::vector<cd> lambda(n), term(n);
  for (std::size_t j = 1; j <= n; ++j) {
    cd alpha = 0;
    for (std::size_t i = 0; i < n; ++i)
      alpha += zeta_pow(static_cast<long long>(i * j)) * exact.entries[i].convert_to<double>();
    alpha /= static_cast<double>(d);
    r.alpha.push_back(alpha);
    lambda[j - 1] = 1.0 - zeta_pow(static_cast<long long>(j));
    term[j - 1] = alpha;
    if (j != n)
      r.max_alpha_off_kernel = std::max(r.max_alpha_off_kernel, std::abs(alpha));
  }
  if (!(r.max_alpha_off_kernel > kAlphaFloor))
    throw VerificationFailure("d=" + std::to_string(d) +
                              ": v_0 has no component off the kernel eigenvector");

  for (unsigned step = 0; step <= n_max; ++step) {
    if (step > 0) {
      exact = a.apply(exact);
      for (std::size_t j = 0; j < n; ++j)
        term[j] *= lambda[j];
    }
    double scale = std::max(1.0, exact.max_norm().convert_to<double>());
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd rebuilt = 0;
      for (std::size_t j = 1; j <= n; ++j)
        rebuilt += term[j - 1] * zeta_pow(-static_cast<long long>(i * j));
      err = std::max(err, std::abs(rebuilt - exact.entries[i].convert_to<double>()) / scale);
    }
    if (err > r.max_relative_error) {
      r.max_relative_error = err;
      r.worst_n = step;
    }
  }
  if (!(r.max_relative_error <= kReconstructionTolerance))
    throw VerificationFailure("d=" + std::to_string(d) + " n=" + std::to_string(r.worst_n) +
                              ": spectral reconstruction error " +
                              std::to_string(r.max_relative_error));
  return r;
}

bool nonvanishing_check(std::int64_t d, unsigned n_max) {
  const auto a = transition_matrix(d);
  PVector v = initial_vector(d);
  for (unsigned step = 1; step <= n_max; ++step) {
    v = a.apply(v);
    if (v.is_zero())
      return false;
  }
  return true;
}

WitnessCertificate witness(std::int64_t d, unsigned m, std::optional<unsigned> cap) {
  KernelSpec spec(d);
  if (m < 2)
    throw std::invalid_argument("witnesses exist for m >= 2 only");
  const unsigned magnus_cap = cap.value_or(m + 1);
  if (magnus_cap < m)
    throw std::invalid_argument("magnus cap must be at least m");

  auto kernel = canonical_kernel(spec);
  Word w = omega(m - 2);
  auto pv = p_vector(kernel, w);
  auto weight = lcs_weight(w, magnus_cap);

  WitnessCertificate cert{d, m, w, pv.p, pv.a_sum, magnus_cap, weight, {}, {}, {},
                          weight.reaches(m), pv.p.is_zero() && pv.a_sum == 0};
  for (const auto &e : kernel.basis.elements) {
    cert.basis.push_back(e.word);
    cert.basis_names.push_back(e.name);
  }
  cert.transversal = kernel.transversal.representatives;
  return cert;
}

std::string verify_certificate(const WitnessCertificate &cert) {
  if (cert.m < 2 || cert.d < 2)
    return "parameters out of range";
  if (!(cert.witness == omega(cert.m - 2)))
    return "witness is not omega_" + std::to_string(cert.m - 2);
  if (!cert.in_Fm || cert.in_G2)
    return "verdicts do not refute containment";

  if (cert.lcs_cap < cert.m || !in_lcs(cert.witness, cert.m, cert.lcs_cap))
    return "witness not certified in F_" + std::to_string(cert.m);

  const std::vector<std::int64_t> images{1, 0};
  auto graph = kernel_graph(cert.witness.alphabet(), images, cert.d);
  auto t = schreier_transversal(graph, GenIndex{0});
  auto b = schreier_basis(graph, t);
  if (!contains(graph, cert.witness))
    return "witness not in the kernel";
  if (in_derived_subgroup(graph, t, b, cert.witness))
    return "witness lies in G_2";

  std::vector<Word> basis;
  for (const auto &e : b.elements)
    basis.push_back(e.word);
  if (basis != cert.basis || t.representatives != cert.transversal)
    return "recorded basis or transversal differs";

  if (!(cert.p == iterate(cert.d, cert.m - 2)))
    return "P-vector differs from the matrix iterate";
  if (cert.p.is_zero())
    return "P-vector vanishes";
  return {};
}

} // namespace fglab
