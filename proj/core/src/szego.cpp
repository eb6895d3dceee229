#include "srf/szego.hpp"

#include "srf/errors.hpp"
#include "srf/linalg.hpp"
#include "srf/parallel.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace srf {

namespace {

HPComplex czero(Bits bits) { return {HPReal::zero(bits), HPReal::zero(bits)}; }

HPComplex at_bits(const HPComplex& z, Bits bits) { return {z.re.at_precision(bits), z.im.at_precision(bits)}; }

Bits width(const HPReal& c, const HPComplex& z) { return std::max({c.precision(), z.re.precision(), z.im.precision()}); }

// -c +- i sqrt(1 - c^2): the zeros of phi', on the unit circle.
HPComplex critical_point(const HPReal& c, int sign) {
  const HPReal s = sqrt(1.0 - c * c);
  return {-c, sign > 0 ? s : -s};
}

}  // namespace

ArcGeometry ArcGeometry::from(const SystemParams& params) {
  const Bits bits = params.bits();
  const HPReal pi = HPReal::pi(bits);
  return {params, pi * params.y(), pi * 2.0 * (params.y() * 2.0 + 1.0)};
}

HPComplex ArcGeometry::endpoint(int sign) const {
  const HPReal one = HPReal::one(half_angle.precision());
  return HPComplex::polar(one, sign > 0 ? half_angle : -half_angle);
}

HPComplex phi_map(const HPReal& c, const HPComplex& w) {
  const Bits bits = width(c, w);
  const HPComplex denom = w + c;
  if (denom.re.is_zero() && denom.im.is_zero()) throw PoleError("phi has a pole at w = -c");
  return at_bits(w, bits) * (w * c + HPReal::one(bits)) / denom;
}

HPComplex phi_prime(const HPReal& c, const HPComplex& w) {
  const HPComplex denom = w + c;
  if (denom.re.is_zero() && denom.im.is_zero()) throw PoleError("phi has a pole at w = -c");
  return c * (w * w + w * (c * 2.0) + HPReal::one(width(c, w))) / (denom * denom);
}

HPComplex Phi_map(const HPReal& c, const HPComplex& z) {
  const Bits bits = width(c, z);
  const HPComplex b = at_bits(z, bits) - HPReal::one(bits);
  const HPComplex root = sqrt(b * b + z * (c * c * 4.0));
  // Add the square root in the direction that avoids cancellation; that is
  // the larger root, and the other one is -z / w.
  const bool same_side = !((b.re * root.re + b.im * root.im) < 0.0);
  const HPComplex w = (same_side ? b + root : b - root) / (c * 2.0);
  if (abs(abs(w) - 1.0) < 1e-12) throw OnArcError("point lies on the arc; Phi is undefined there");
  return w;
}

HPComplex Phi_prime(const HPReal& c, const HPComplex& z) {
  const HPComplex w = Phi_map(c, z);
  return HPReal::one(width(c, z)) / phi_prime(c, w);
}

HPComplex sqrt_Phi_prime_at(const HPReal& c, const HPComplex& w) {
  const Bits bits = width(c, w);
  const HPComplex one(HPReal::one(bits), HPReal::zero(bits));
  const HPComplex f1 = sqrt(one - critical_point(c, 1) / w);
  const HPComplex f2 = sqrt(one - critical_point(c, -1) / w);
  return (w + c) / (w * sqrt(c) * f1 * f2);
}

HPComplex sqrt_Phi_prime(const HPReal& c, const HPComplex& z) { return sqrt_Phi_prime_at(c, Phi_map(c, z)); }

namespace {

// K with zeta given through w = Phi(zeta), which may lie on |w| = 1.
HPComplex kernel_from_w(const SystemParams& params, const HPComplex& w_zeta, const ExteriorPoint& z) {
  const HPReal& c = params.capacity();
  const HPReal scale = params.arc_length() / HPReal::pi(params.bits());
  const HPComplex s_zeta = sqrt_Phi_prime_at(c, w_zeta);
  if (!z) return s_zeta * (scale / sqrt(c));
  const HPComplex w_z = Phi_map(c, *z);
  const HPComplex a = w_zeta * conj(w_z);
  if (abs(a - HPReal::one(params.bits())) < 1e-30) throw DegeneracyError("Phi(zeta) conj(Phi(z)) = 1");
  return s_zeta * conj(sqrt_Phi_prime_at(c, w_z)) * (a / (a - HPReal::one(params.bits()))) * scale;
}

}  // namespace

HPComplex szego_kernel(const SystemParams& params, const ExteriorPoint& zeta, const ExteriorPoint& z) {
  const HPReal& c = params.capacity();
  const HPReal scale = params.arc_length() / HPReal::pi(params.bits());
  if (!zeta && !z) return {scale / c, HPReal::zero(params.bits())};
  if (!zeta) return conj(sqrt_Phi_prime(c, *z)) * (scale / sqrt(c));
  return kernel_from_w(params, Phi_map(c, *zeta), z);
}

QuadratureResult<HPComplex> reproduce(const SystemParams& params, const BoundaryFunction& f, const ExteriorPoint& z,
                                      double reltol, Bits bits) {
  const SystemParams p = params.at_precision(bits);
  const HPReal& c = p.capacity();
  const HPReal pi = HPReal::pi(bits);
  const HPReal alpha = acos(c);
  const HPReal cuts[] = {HPReal::zero(bits), pi - alpha, pi + alpha, pi * 2.0};
  const HPReal norm = HPReal::one(bits) / (p.arc_length() * 2.0);

  QuadratureResult<HPComplex> total{czero(bits), 0, HPReal::zero(bits)};
  for (int panel = 0; panel < 3; ++panel) {
    const HPReal& a = cuts[panel];
    const HPReal len = cuts[panel + 1] - a;
    // t = a + len (1 - cos(pi s)) / 2 clusters nodes at both panel ends,
    // where |phi'| vanishes like a square root.
    auto integrand = [&](const HPReal& s) {
      const HPReal t = a + len * (1.0 - cos(pi * s)) * 0.5;
      const HPReal jac = len * pi * 0.5 * sin(pi * s);
      const HPComplex w = HPComplex::polar(HPReal::one(bits), t);
      return f(w) * conj(kernel_from_w(p, w, z)) * (abs(phi_prime(c, w)) * jac * norm);
    };
    const auto part = integrate_doubling(integrand, HPReal::zero(bits), HPReal::one(bits), reltol, bits);
    total.value += part.value;
    total.nodes += part.nodes;
    total.abs_integral += part.abs_integral;
  }
  return total;
}

OrthoPolyTable leading_coeffs(const SystemParams& params, int n_max, Bits bits) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const GramMatrix g = build_gram(params, SupportSet::contiguous(static_cast<std::size_t>(n_max) + 1), bits);
  OrthoPolyTable t;
  t.n_max = n_max;
  t.lower = hp_cholesky(g.entries, bits);
  t.coefficients = lower_inverse(t.lower);
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.cholesky_diag.push_back(t.lower(i, i));
    t.k_values.push_back(HPReal::one(bits) / t.lower(i, i));
  }
  return t;
}

QuadratureResult<HPComplex> arc_inner_product(const std::vector<HPComplex>& f, const std::vector<HPComplex>& g,
                                              const SystemParams& params, Bits bits, std::size_t start_nodes,
                                              double reltol) {
  const SystemParams p = params.at_precision(bits);
  const HPReal half = HPReal::pi(bits) * p.y();
  const HPReal inv_len = HPReal::one(bits) / p.arc_length();
  auto integrand = [&](const HPReal& theta) {
    const HPComplex z = HPComplex::polar(HPReal::one(bits), theta);
    return poly_eval(f, z) * conj(poly_eval(g, z)) * inv_len;
  };
  return integrate_doubling(integrand, -half, half, reltol, bits, start_nodes);
}

std::vector<HPComplex> faber_poly(const SystemParams& params, int n, long truncation, Bits bits) {
  if (n < 0) throw DomainError("Faber degree must be nonnegative");
  if (truncation < n + 10) {
    throw DomainError("truncation " + std::to_string(truncation) + " is below n + 10 = " + std::to_string(n + 10));
  }
  const HPReal c = params.capacity().at_precision(bits);
  const LaurentSeries power = pow(exterior_map_series(c, truncation), n);
  if (power.low_degree() > 0) {
    throw TruncationError("tail estimate " + power.truncation_bound().to_string(6) +
                          " reaches the constant coefficient of Phi^" + std::to_string(n));
  }
  return power.polynomial_part();
}

namespace {

struct Sampler {
  std::mt19937_64 rng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  // Uniform direction on the unit sphere of C^{size}.
  std::vector<HPComplex> sphere(std::size_t size, Bits bits) {
    std::vector<HPComplex> v;
    HPReal norm = HPReal::zero(bits);
    for (std::size_t i = 0; i < size; ++i) {
      v.emplace_back(HPReal(normal(rng), bits), HPReal(normal(rng), bits));
      norm += norm2(v.back());
    }
    norm = sqrt(norm);
    for (auto& x : v) x = x / norm;
    return v;
  }

  // w = rho e^{i psi} with rho uniform in [lo, hi].
  HPComplex annulus(double lo, double hi, Bits bits) {
    const double rho = lo + (hi - lo) * unit(rng);
    const double psi = 2.0 * 3.14159265358979323846 * unit(rng);
    return HPComplex::polar(HPReal(rho, bits), HPReal(psi, bits));
  }
};

std::string indexed(const char* name, int n) { return std::string(name) + "[n=" + std::to_string(n) + "]"; }

// Keeps the sample with the largest lhs/rhs ratio.
struct Worst {
  std::string name;
  std::optional<BoundCheck> check;
  HPReal ratio;

  void offer(const HPReal& lhs, const HPReal& rhs) {
    const HPReal r = lhs / rhs;
    if (!check || r > ratio) {
      check = BoundCheck::less_equal(name, lhs, rhs);
      ratio = r;
    }
  }
};

}  // namespace

SzegoSuite bound_suite(const SystemParams& params, const SuiteOptions& options) {
  if (options.n_max < 0) throw DomainError("n_max must be nonnegative");
  const Bits bits = options.bits;
  const SystemParams p = params.at_precision(bits);
  const HPReal& c = p.capacity();
  const HPReal& y = p.y();
  const HPReal scale = p.arc_length() / HPReal::pi(bits);
  const HPReal phi_prime_const = HPReal::one(bits) / (c * sqrt(1.0 - c * c));
  const HPReal faber_bound = (y * 2.0 + 1.0) * 2.0;

  SzegoSuite suite;
  const OrthoPolyTable table = leading_coeffs(p, options.n_max, bits);

  // (a) two-sided bracket on k_n^-2, (f) the asymptotic ratio.
  for (int n = 0; n <= options.n_max; ++n) {
    const HPReal k = table.k_values[static_cast<std::size_t>(n)];
    const HPReal kinv2 = HPReal::one(bits) / (k * k);
    const HPReal c2n = pow(c, 2L * n);
    suite.checks.push_back(BoundCheck::less_equal(indexed("kn_bracket_lower", n), c / (y * 2.0) * c2n, kinv2));
    const HPReal upper = (y * 2.0 + 1.0) * (y * 2.0 + 1.0) * 4.0 * c2n;
    suite.checks.push_back(BoundCheck::less_equal(indexed("kn_bracket_upper", n), kinv2, upper));
    suite.trend.push_back({n, kinv2, kinv2 / (c / y * c2n)});
  }

  // (b) Faber polynomials on the arc.
  const HPReal half = HPReal::pi(bits) * y;
  const std::size_t m = std::max<std::size_t>(options.arc_samples, 2);
  for (int n = 0; n <= options.n_max; ++n) {
    const std::vector<HPComplex> faber = faber_poly(p, n, n + 12, bits);
    std::vector<HPReal> values(m);
    parallel_for(m, [&](std::size_t j) {
      const HPReal theta = -half + half * 2.0 * HPReal::ratio(static_cast<long>(j), static_cast<long>(m - 1), bits);
      values[j] = abs(poly_eval(faber, HPComplex::polar(HPReal::one(bits), theta)));
    });
    HPReal worst = values.front();
    for (const auto& v : values) worst = max(worst, v);
    suite.checks.push_back(BoundCheck::less_equal(indexed("faber_arc_max", n), worst, faber_bound));
  }

  // (c), (d), (e) with random arc-unit-norm polynomials.
  Sampler sampler(options.seed);
  for (int n = 0; n <= options.n_max; ++n) {
    const auto size = static_cast<std::size_t>(n) + 1;
    const GramMatrix g = build_gram(p, SupportSet::contiguous(size), bits);
    Worst exterior{indexed("growth_exterior", n), {}, {}};
    Worst christoffel{indexed("christoffel_exterior", n), {}, {}};
    Worst banana{indexed("growth_banana", n), {}, {}};
    Worst derivative{indexed("phi_prime_bound", n), {}, {}};
    const HPReal banana_rhs = scale * 4.0 * phi_prime_const * pow(HPReal(2L, bits), 2L * n);

    for (std::size_t trial = 0; trial < options.polynomials; ++trial) {
      std::vector<HPComplex> a = sampler.sphere(size, bits);
      const HPReal arc_norm = sqrt(quadratic_form(g.entries, a));
      for (auto& x : a) x = x / arc_norm;

      for (std::size_t k = 0; k < options.points; ++k) {
        const HPComplex z = phi_map(c, sampler.annulus(1.1, 4.0, bits));
        const HPComplex w = Phi_map(c, z);
        const HPReal r2 = norm2(w);
        const HPReal dphi = abs(Phi_prime(c, z));
        const HPReal rhs = scale * dphi * r2 / (r2 - 1.0) * pow(r2, static_cast<long>(n));
        exterior.offer(norm2(poly_eval(a, z)), rhs);
        const HPReal r = sqrt(r2);
        derivative.offer(dphi, phi_prime_const * (r + c) * (r + c) / (r2 - 1.0));
        if (trial == 0) {
          HPReal sum = HPReal::zero(bits);
          for (std::size_t j = 0; j < size; ++j) {
            std::vector<HPComplex> pj(table.coefficients.row(j).begin(), table.coefficients.row(j).begin() + j + 1);
            for (auto& x : pj) x = at_bits(x, bits);
            sum += norm2(poly_eval(pj, z));
          }
          christoffel.offer(sum, rhs);
        }
        const HPComplex zb = phi_map(c, sampler.annulus(1.0 + 1e-3, 2.0, bits));
        banana.offer(norm2(poly_eval(a, zb)), banana_rhs);
      }
    }
    for (Worst* w : {&exterior, &christoffel, &banana, &derivative})
      if (w->check) suite.checks.push_back(*w->check);
  }
  suite.polynomials = options.polynomials;
  suite.exterior_points = options.points;
  return suite;
}

}  // namespace srf
