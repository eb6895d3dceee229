#include "srf/pencil.hpp"

#include "srf/errors.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace srf {

HPReal to_hp(const Rational& q, Bits bits) {
  HPReal r = HPReal::zero(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Matrix<Rational> hilbert_matrix(int n) {
  if (n < 0 || n > kMaxExactHilbertOrder) {
    throw DomainError("hilbert_matrix order must lie in [0, " + std::to_string(kMaxExactHilbertOrder) + "]");
  }
  const auto size = static_cast<std::size_t>(n + 1);
  Matrix<Rational> h(size, size, Rational(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) h(i, j) = Rational(1, static_cast<unsigned long>(i + j + 1));
  return h;
}

Matrix<Rational> exact_inverse(const Matrix<Rational>& m) {
  if (!m.square()) throw DomainError("exact_inverse requires a square matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> a = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n, Rational(0), Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularSystem("matrix is singular at column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> vandermonde_lastrow_exact(const std::vector<long>& offsets) {
  const std::size_t size = offsets.size();
  if (size == 0) throw DomainError("vandermonde_lastrow requires a nonempty support");
  // Row i of the system holds tau_j^i; the unknowns are the m_j.
  Matrix<Rational> v(size, size, Rational(0));
  for (std::size_t j = 0; j < size; ++j) {
    Rational power(1);
    for (std::size_t i = 0; i < size; ++i) {
      v(i, j) = power;
      power *= offsets[j];
    }
  }
  const Matrix<Rational> inv = exact_inverse(v);
  // m = V^{-1} e_n
  std::vector<Rational> m(size);
  for (std::size_t j = 0; j < size; ++j) m[j] = inv(j, size - 1);
  return m;
}

std::vector<HPReal> vandermonde_lastrow(const SupportSet& support, Bits bits) {
  const std::vector<Rational> exact = vandermonde_lastrow_exact(support.offsets());
  std::vector<HPReal> m;
  m.reserve(exact.size());
  for (const auto& q : exact) m.push_back(to_hp(q, bits));
  return m;
}

std::vector<Rational> vieta_magnitudes(const std::vector<long>& offsets) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    Rational prod(1);
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if (i == j) continue;
      const long d = offsets[i] - offsets[j];
      if (d == 0) throw SingularSystem("duplicate offsets");
      prod /= std::labs(d);
    }
    out.push_back(prod);
  }
  return out;
}

PencilData pencil_mu(const SupportSet& support, Bits bits) {
  if (support.size() < 2) throw DomainError("pencil_mu requires at least two offsets");
  PencilData p;
  p.n = static_cast<int>(support.size()) - 1;
  p.hilbert = hilbert_matrix(p.n);
  p.hilbert_inverse = exact_inverse(p.hilbert);
  p.m_exact = vandermonde_lastrow_exact(support.offsets());
  for (const auto& q : p.m_exact) p.m.push_back(to_hp(q, bits));

  Rational form(0);
  const std::size_t size = support.size();
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) form += p.m_exact[i] * p.hilbert_inverse(i, j) * p.m_exact[j];
  p.quadratic_form = form;

  HPReal factorial = HPReal::one(bits);
  for (int i = 2; i <= p.n; ++i) factorial *= static_cast<double>(i);
  p.c_n = pow(HPReal::pi(bits) * 2.0, 2L * p.n) / (factorial * factorial);
  p.mu = HPReal::one(bits) / (p.c_n * to_hp(form, bits));

  // As y -> 0 the norm |v|^2 = |M^-1 D^-1 p|^2 is dominated by the top moment,
  // so the Rayleigh quotient reduces to min p*H p / |p_n|^2 = 1 / (H^-1)_nn.
  Rational norm(0);
  for (const auto& q : p.m_exact) norm += q * q;
  p.limit_mu = p.c_n / to_hp(p.hilbert_inverse(size - 1, size - 1) * norm, bits);
  return p;
}

}  // namespace srf
