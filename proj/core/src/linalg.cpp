#include "srf/linalg.hpp"

#include "srf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace srf {

Matrix<HPReal> at_precision(const Matrix<HPReal>& m, Bits bits) {
  Matrix<HPReal> out(m.rows(), m.cols(), HPReal::zero(bits));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).at_precision(bits);
  return out;
}

Matrix<HPReal> hp_cholesky(const Matrix<HPReal>& m, Bits bits) {
  if (!m.square()) throw DomainError("hp_cholesky requires a square matrix");
  const std::size_t n = m.rows();
  Matrix<HPReal> l(n, n, HPReal::zero(bits));
  for (std::size_t j = 0; j < n; ++j) {
    HPReal s = m(j, j).at_precision(bits);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    if (!(s > 0.0)) {
      throw NotPositiveDefinite(j, "matrix is not positive definite at pivot " + std::to_string(j) + " (" +
                                       std::to_string(bits) + " bits)");
    }
    l(j, j) = sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      HPReal t = m(i, j).at_precision(bits);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = t / l(j, j);
    }
  }
  return l;
}

namespace {

template <typename V>
std::vector<V> solve_lower_then_upper(const Matrix<HPReal>& l, std::span<const V> b) {
  const std::size_t n = l.rows();
  if (b.size() != n) throw DomainError("right-hand side length mismatch");
  std::vector<V> y(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= y[k] * l(i, k);
    y[i] /= l(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= y[k] * l(k, ii);
    y[ii] /= l(ii, ii);
  }
  return y;
}

}  // namespace

std::vector<HPReal> cholesky_solve(const Matrix<HPReal>& lower, std::span<const HPReal> b) {
  return solve_lower_then_upper(lower, b);
}

std::vector<HPComplex> cholesky_solve(const Matrix<HPReal>& lower, std::span<const HPComplex> b) {
  return solve_lower_then_upper(lower, b);
}

Matrix<HPReal> lower_inverse(const Matrix<HPReal>& lower) {
  const std::size_t n = lower.rows();
  const Bits bits = lower(0, 0).precision();
  Matrix<HPReal> inv(n, n, HPReal::zero(bits));
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = HPReal::one(bits) / lower(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      HPReal s = HPReal::zero(bits);
      for (std::size_t k = j; k < i; ++k) s += lower(i, k) * inv(k, j);
      inv(i, j) = -s / lower(i, i);
    }
  }
  return inv;
}

namespace {

struct JacobiRun {
  Matrix<HPReal> a;
  Matrix<HPReal> v;
  int sweeps = 0;
  long rotations = 0;
};

JacobiRun jacobi(const Matrix<HPReal>& m, Bits bits, int max_sweeps) {
  const std::size_t n = m.rows();
  JacobiRun run{at_precision(m, bits), Matrix<HPReal>::identity(n, HPReal::zero(bits), HPReal::one(bits))};
  auto& a = run.a;
  auto& v = run.v;
  // Rotate only when the pair is not already decoupled relative to its own
  // diagonal scale (the Demmel-Veselic criterion).
  const HPReal tol = ldexp(HPReal::one(bits), -(bits - 4));

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    long rotated = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q).is_zero()) continue;
        if (abs(a(p, q)) <= tol * sqrt(abs(a(p, p) * a(q, q)))) continue;
        const HPReal apq = a(p, q);
        const HPReal theta = (a(q, q) - a(p, p)) / (apq * 2.0);
        HPReal t = HPReal::one(bits) / (abs(theta) + sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const HPReal c = HPReal::one(bits) / sqrt(t * t + 1.0);
        const HPReal s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = HPReal::zero(bits);
        a(q, p) = HPReal::zero(bits);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const HPReal arp = a(r, p);
          const HPReal arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = a(r, p);
          a(q, r) = a(r, q);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const HPReal vrp = v(r, p);
          const HPReal vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
        ++rotated;
      }
    }
    run.rotations += rotated;
    run.sweeps = sweep;
    if (rotated == 0) return run;
  }
  throw NoConvergence("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
}

HPReal condition_of(const std::vector<HPReal>& values, Bits bits) {
  HPReal lo = abs(values.front());
  HPReal hi = lo;
  for (const auto& x : values) {
    lo = min(lo, abs(x));
    hi = max(hi, abs(x));
  }
  if (lo.is_zero()) {
    HPReal inf = HPReal::one(bits);
    mpfr_set_inf(inf.get(), 1);
    return inf;
  }
  return hi / lo;
}

}  // namespace

EigenDecomposition hp_symmetric_eigen(const Matrix<HPReal>& m, Bits bits, int max_sweeps) {
  if (!m.square() || m.rows() == 0) throw DomainError("hp_symmetric_eigen requires a nonempty square matrix");
  const std::size_t n = m.rows();
  JacobiRun run = jacobi(m, bits, max_sweeps);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return run.a(i, i) < run.a(j, j); });

  EigenDecomposition out;
  out.bits = bits;
  out.sweeps = run.sweeps;
  out.rotations = run.rotations;
  out.vectors = Matrix<HPReal>(n, n, HPReal::zero(bits));
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(run.a(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = run.v(r, order[k]);
  }

  bool positive_diagonal = true;
  bool unit_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    positive_diagonal = positive_diagonal && m(i, i) > 0.0;
    unit_diagonal = unit_diagonal && m(i, i) == 1.0;
  }
  if (positive_diagonal && !unit_diagonal) {
    Matrix<HPReal> h(n, n, HPReal::zero(bits));
    std::vector<HPReal> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(HPReal::one(bits) / sqrt(m(i, i).at_precision(bits)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = m(i, j) * d[i] * d[j];
    JacobiRun scaled = jacobi(h, bits, max_sweeps);
    std::vector<HPReal> hv;
    for (std::size_t i = 0; i < n; ++i) hv.push_back(scaled.a(i, i));
    out.scaled_condition = condition_of(hv, bits);
  } else {
    out.scaled_condition = condition_of(out.values, bits);
  }
  out.relative_error_bound = ulp_scale(bits / 2) * out.scaled_condition;
  return out;
}

MinEigResult min_eig_adaptive(const MatrixBuilder& build, const LadderOptions& options) {
  MinEigResult result;
  std::optional<HPReal> previous;
  for (Bits bits = options.start_bits; bits <= options.cap_bits; bits *= 2) {
    const Matrix<HPReal> m = build(bits);
    const EigenDecomposition eig = hp_symmetric_eigen(m, bits);
    const HPReal& lambda = eig.values.front();
    result.ladder.push_back({bits, lambda});

    const bool exact = eig.rotations == 0;
    const bool stable = previous && !lambda.is_zero() &&
                        abs(lambda - *previous) <= abs(lambda) * options.reltol;
    if (exact || stable) {
      result.value = lambda;
      result.vector = eig.vectors.column(0);
      result.bits_used = bits;
      // Sign convention: first nonzero component positive.
      for (const auto& x : result.vector) {
        if (x.is_zero()) continue;
        if (x < 0.0)
          for (auto& y : result.vector) y = -y;
        break;
      }
      return result;
    }
    previous = lambda;
  }
  throw PrecisionError("precision ladder reached " + std::to_string(options.cap_bits) +
                       " bits without a stable smallest eigenvalue");
}

}  // namespace srf
