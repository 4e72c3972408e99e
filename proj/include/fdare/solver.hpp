#pragma once

// Galerkin solver for
//   -D[k (alpha aD^mu u - beta xD^mu u)] + p Du + q u = f,  u(a) = u(b) = 0
// on a power-weighted Legendre basis.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fdare/error.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

/// Smooth coefficient in z = x - a:
///   polynomial:  sum c_j z^j
///   exp_poly:    exp(sum c_j z^j)
///   trig:        c_0 + sum_k c_{2k-1} cos(k pi z/L) + c_{2k} sin(k pi z/L)
struct CoefficientFunction {
  enum class Kind { polynomial, exp_poly, trig };

  Kind kind = Kind::polynomial;
  std::vector<double> params{0.0};

  static CoefficientFunction constant(double v) { return {Kind::polynomial, {v}}; }
  static CoefficientFunction polynomial(std::vector<double> c) {
    return {Kind::polynomial, std::move(c)};
  }
  static CoefficientFunction exp_poly(std::vector<double> c) {
    return {Kind::exp_poly, std::move(c)};
  }
  static CoefficientFunction trig(std::vector<double> c) { return {Kind::trig, std::move(c)}; }

  bool is_zero() const {
    if (kind == Kind::exp_poly)
      return false;
    for (double v : params)
      if (v != 0.0)
        return false;
    return true;
  }

  /// value and first derivative at x
  std::pair<double, double> eval(double x, const Interval& iv) const {
    const double z = x - iv.a;
    switch (kind) {
    case Kind::polynomial:
    case Kind::exp_poly: {
      double v = 0.0, d = 0.0;
      for (std::size_t j = params.size(); j-- > 0;) {
        d = d * z + v;
        v = v * z + params[j];
      }
      if (kind == Kind::polynomial)
        return {v, d};
      double e = std::exp(v);
      return {e, e * d};
    }
    case Kind::trig: {
      const double w = pi / iv.length();
      double v = params.empty() ? 0.0 : params[0], d = 0.0;
      for (std::size_t j = 1; j < params.size(); ++j) {
        double k = static_cast<double>((j + 1) / 2);
        if (j % 2 == 1) {
          v += params[j] * std::cos(k * w * z);
          d -= params[j] * k * w * std::sin(k * w * z);
        } else {
          v += params[j] * std::sin(k * w * z);
          d += params[j] * k * w * std::cos(k * w * z);
        }
      }
      return {v, d};
    }
    }
    return {0.0, 0.0};
  }

  double operator()(double x, const Interval& iv) const { return eval(x, iv).first; }

  std::string describe() const {
    std::ostringstream os;
    os << (kind == Kind::polynomial ? "poly:" : kind == Kind::exp_poly ? "exp-poly:" : "trig:");
    for (std::size_t j = 0; j < params.size(); ++j)
      os << (j ? "," : "") << params[j];
    return os.str();
  }
};

struct ProblemSpec {
  Interval interval{0.0, 1.0};
  double mu = 0.5;
  double alpha = 0.5;
  double beta = 0.5;
  CoefficientFunction k = CoefficientFunction::constant(1.0);
  CoefficientFunction adv = CoefficientFunction::constant(0.0);
  CoefficientFunction reac = CoefficientFunction::constant(0.0);
  PowerWeightedFunction source = PowerWeightedFunction({-1.0}, 0.0, 0.0, Interval{0.0, 1.0});

  /// weight power of the basis
  double s() const { return 0.5 * (1.0 + mu); }
};

struct ConditionCheck {
  std::string name;
  double slack; // >= 0 when satisfied
  bool pass;
};

struct ConditionReport {
  bool pass = true;
  double margin = std::numeric_limits<double>::infinity();
  std::string failing_condition;
  std::vector<ConditionCheck> checks;
};

inline double scalar_condition_value(double mu, double L, double max_dlogk) {
  return pi * (1.0 - mu * mu) / std::tan(0.5 * (1.0 + mu) * pi) + 4.0 * L * max_dlogk;
}

inline ConditionReport check_wellposedness(const ProblemSpec& pb) {
  ConditionReport rep;
  auto add = [&](std::string name, double slack) {
    bool ok = std::isfinite(slack) && slack >= 0.0;
    rep.checks.push_back({name, slack, ok});
    if (!(slack >= rep.margin))
      rep.margin = std::isfinite(slack) ? slack : -std::numeric_limits<double>::infinity();
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.failing_condition = name;
    }
  };
  const Interval& iv = pb.interval;
  add("order: mu must lie in (0,1)", std::min(pb.mu, 1.0 - pb.mu));
  add("skew: alpha, beta in [0,1] with alpha + beta = 1",
      std::min({pb.alpha, pb.beta, 1e-12 - std::fabs(pb.alpha + pb.beta - 1.0)}));
  const int M = 2001;
  double kmin = std::numeric_limits<double>::infinity();
  double sign_min = std::numeric_limits<double>::infinity();
  double dlogk = 0.0;
  bool finite = true;
  for (int i = 0; i < M; ++i) {
    double x = iv.a + iv.length() * i / (M - 1.0);
    auto [k, dk] = pb.k.eval(x, iv);
    auto [p, dp] = pb.adv.eval(x, iv);
    auto [q, dq] = pb.reac.eval(x, iv);
    (void)dq;
    finite = finite && std::isfinite(k) && std::isfinite(dk) && std::isfinite(p) &&
             std::isfinite(dp) && std::isfinite(q);
    kmin = std::min(kmin, k);
    if (k > 0.0) {
      double dpk = dp / k - p * dk / (k * k);
      sign_min = std::min(sign_min, q / k - 0.5 * dpk);
      dlogk = std::max(dlogk, std::fabs(dk / k));
    }
  }
  add("regularity: coefficients finite with finite derivatives", finite ? 0.0 : -1.0);
  add("positivity: k(x) > 0 on [a,b]", kmin);
  add("sign: q/k - (p/k)'/2 >= 0 on [a,b]", sign_min + 1e-12);
  add("scalar: pi(1-mu^2)cot((1+mu)pi/2) + 4(b-a)max|k'/k| < 0",
      -scalar_condition_value(pb.mu, iv.length(), dlogk));
  return rep;
}

inline void require_wellposed(const ProblemSpec& pb) {
  auto rep = check_wellposedness(pb);
  if (!rep.pass)
    throw condition_error(rep.failing_condition,
                          "problem violates condition: " + rep.failing_condition);
}

// ---------------------------------------------------------------------------

/// phi_n = omega^s P_n(y), omega = 4(x-a)(b-x)/L^2, y = ((x-a)-(b-x))/L.
/// phi_n' = omega^(s-1) R_n with R_n = s omega' P_n + omega (2/L) P_n'(y).
class WeightedLegendreBasis {
public:
  WeightedLegendreBasis(int n, double s, const Interval& iv) : n_(n), s_(s), iv_(iv) {
    if (n < 1 || n > 64)
      throw domain_error("basis size must lie in [1, 64]");
  }

  int size() const { return n_; }
  double weight_power() const { return s_; }
  const Interval& interval() const { return iv_; }
  /// omega^e = scale(e) * ((x-a)(b-x))^e
  double scale(double e) const { return std::pow(4.0 / (iv_.length() * iv_.length()), e); }

  /// P_n(y) and R_n from endpoint distances
  void eval(double da, double db, double* P, double* R) const {
    const double L = iv_.length();
    const double y = (da - db) / L;
    const double om = 4.0 * da * db / (L * L);
    const double dom = 4.0 * (db - da) / (L * L);
    double p0 = 1.0, p1 = y, d0 = 0.0, d1 = 1.0;
    for (int k = 0; k < n_; ++k) {
      double pk, dk;
      if (k == 0) {
        pk = p0;
        dk = d0;
      } else if (k == 1) {
        pk = p1;
        dk = d1;
      } else {
        double m = k - 1.0;
        double pn = ((2.0 * m + 1.0) * y * p1 - m * p0) / (m + 1.0);
        double dn = d0 + (2.0 * m + 1.0) * p1;
        p0 = p1;
        p1 = pn;
        d0 = d1;
        d1 = dn;
        pk = pn;
        dk = dn;
      }
      if (P)
        P[k] = pk;
      if (R)
        R[k] = s_ * dom * pk + om * (2.0 / L) * dk;
    }
  }

  /// I_side^sigma of phi_n' (derivative = true) or of phi_n, for every n.
  std::vector<double> fractional(Side side, double sigma, double da, double db,
                                 bool derivative, int nodes) const {
    std::vector<double> out(n_, 0.0);
    std::vector<double> P(n_), R(n_);
    const double e = derivative ? s_ - 1.0 : s_;
    const double c = scale(e);
    GradedOptions opt;
    opt.nodes = nodes;
    opt.max_panel = 0.25 * iv_.length();
    auto accum = [&](double dA, double dB, double w) {
      eval(dA, dB, P.data(), R.data());
      const double* v = derivative ? R.data() : P.data();
      for (int k = 0; k < n_; ++k)
        out[k] += w * v[k];
    };
    if (side == Side::left) {
      if (!(da > 0.0))
        return out;
      graded_nodes(iv_.a, iv_.a + da, EndSpec{e}, EndSpec{sigma - 1.0, db}, opt,
                   [&](double, double dlo, double dhi, double w) {
                     double dB = db + dhi;
                     accum(dlo, dB, w * std::pow(dB, e));
                   });
    } else {
      if (!(db > 0.0))
        return out;
      graded_nodes(iv_.b - db, iv_.b, EndSpec{sigma - 1.0, da}, EndSpec{e}, opt,
                   [&](double, double dlo, double dhi, double w) {
                     double dA = da + dlo;
                     accum(dA, dhi, w * std::pow(dA, e));
                   });
    }
    const double f = c * rgamma(sigma);
    for (double& v : out)
      v *= f;
    return out;
  }

private:
  int n_;
  double s_;
  Interval iv_;
};

inline int inner_nodes(int N) { return std::max(20, N / 2 + 16); }
inline int outer_nodes(int N) { return std::max(20, N / 2 + 20); }

/// Node data shared by the matrix assemblies.  w already carries omega^(s-1).
struct AssemblyNodes {
  std::vector<double> x, da, db, w;
  std::vector<double> ws; // omega^(s-1) at the node
  Eigen::MatrixXd P;      // omega P_n = phi_n / omega^(s-1)
  Eigen::MatrixXd R;      // phi_n' / omega^(s-1)
  Eigen::MatrixXd Gl, Gr; // I_left/right^sigma phi_n'
};

inline AssemblyNodes assembly_nodes(const WeightedLegendreBasis& basis, double sigma) {
  const Interval& iv = basis.interval();
  const int N = basis.size();
  const double s = basis.weight_power();
  const double L2 = iv.length() * iv.length();
  GradedOptions opt;
  opt.nodes = outer_nodes(N);
  opt.max_panel = 0.125 * iv.length();
  AssemblyNodes an;
  const double g = 1e-12 * iv.length();
  graded_nodes(iv.a, iv.b, EndSpec{s - 1.0, g}, EndSpec{s - 1.0, g}, opt,
               [&](double t, double dlo, double dhi, double w) {
                 an.x.push_back(t);
                 an.da.push_back(dlo);
                 an.db.push_back(dhi);
                 an.w.push_back(w * basis.scale(s - 1.0));
                 an.ws.push_back(std::pow(4.0 * dlo * dhi / L2, s - 1.0));
               });
  const int M = static_cast<int>(an.x.size());
  an.P.resize(M, N);
  an.R.resize(M, N);
  an.Gl.resize(M, N);
  an.Gr.resize(M, N);
  std::vector<double> P(N), R(N);
  const int ni = inner_nodes(N);
  for (int m = 0; m < M; ++m) {
    basis.eval(an.da[m], an.db[m], P.data(), R.data());
    double om = 4.0 * an.da[m] * an.db[m] / L2;
    auto gl = basis.fractional(Side::left, sigma, an.da[m], an.db[m], true, ni);
    auto gr = basis.fractional(Side::right, sigma, an.da[m], an.db[m], true, ni);
    for (int k = 0; k < N; ++k) {
      an.P(m, k) = om * P[k];
      an.R(m, k) = R[k];
      an.Gl(m, k) = gl[k];
      an.Gr(m, k) = gr[k];
    }
  }
  return an;
}

/// Entry (i,j) = B2[phi_j, phi_i], after integrating the leading terms by parts:
///   (G_j, phi_i') - (k'/k G_j, phi_i) + (p/k phi_j', phi_i) + (q/k phi_j, phi_i)
/// with G = alpha I_left^(1-mu) phi' + beta I_right^(1-mu) phi'.
inline Eigen::MatrixXd assemble_b2(const ProblemSpec& pb, const AssemblyNodes& an) {
  const Interval& iv = pb.interval;
  const int M = static_cast<int>(an.x.size());
  Eigen::VectorXd w(M), wk(M), wp(M), wq(M);
  for (int m = 0; m < M; ++m) {
    auto [k, dk] = pb.k.eval(an.x[m], iv);
    w[m] = an.w[m];
    wk[m] = an.w[m] * dk / k;
    wp[m] = an.w[m] * an.ws[m] * pb.adv(an.x[m], iv) / k;
    wq[m] = an.w[m] * an.ws[m] * pb.reac(an.x[m], iv) / k;
  }
  Eigen::MatrixXd G = pb.alpha * an.Gl + pb.beta * an.Gr;
  Eigen::MatrixXd B = an.R.transpose() * w.asDiagonal() * G;
  B -= an.P.transpose() * wk.asDiagonal() * G;
  if (!pb.adv.is_zero())
    B += an.P.transpose() * wp.asDiagonal() * an.R;
  if (!pb.reac.is_zero())
    B += an.P.transpose() * wq.asDiagonal() * an.P;
  return B;
}

inline Eigen::MatrixXd assemble_b2(const ProblemSpec& pb, int N) {
  require_wellposed(pb);
  WeightedLegendreBasis basis(N, pb.s(), pb.interval);
  return assemble_b2(pb, assembly_nodes(basis, 1.0 - pb.mu));
}

/// entry i = integral of (f/k) phi_i
inline Eigen::VectorXd assemble_rhs(const ProblemSpec& pb, int N) {
  const Interval& iv = pb.interval;
  const PowerWeightedFunction& f = pb.source;
  const double s = pb.s();
  WeightedLegendreBasis basis(N, s, iv);
  const double ea = f.exp_a() + s, eb = f.exp_b() + s;
  if (!(ea > -1.0) || !(eb > -1.0))
    throw domain_error("assemble_rhs: f/k times the basis is not integrable");
  GradedOptions opt;
  opt.nodes = outer_nodes(N);
  opt.max_panel = 0.125 * iv.length();
  const double g = 1e-12 * iv.length();
  Eigen::VectorXd F = Eigen::VectorXd::Zero(N);
  std::vector<double> P(N);
  const double c = basis.scale(s);
  graded_nodes(iv.a, iv.b, EndSpec{ea, g}, EndSpec{eb, g}, opt,
               [&](double t, double dlo, double dhi, double w) {
                 basis.eval(dlo, dhi, P.data(), nullptr);
                 double v = c * f.smooth(dlo) / pb.k(t, iv);
                 for (int k = 0; k < N; ++k)
                   F[k] += w * v * P[k];
               });
  return F;
}

/// Gram matrix of aD^s phi_n (the H^s semi-norm)
inline Eigen::MatrixXd gram_hs(const WeightedLegendreBasis& basis, const Interval& iv,
                               double sprime) {
  const int N = basis.size();
  const double s = basis.weight_power();
  GradedOptions opt;
  opt.nodes = outer_nodes(N);
  opt.max_panel = 0.125 * iv.length();
  // aD^s phi ~ dist^(s-1+s') = dist^(-1/2 + ...) near a, bounded near b
  const double g = 1e-12 * iv.length();
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(N, N);
  const int ni = inner_nodes(N);
  graded_nodes(iv.a, iv.b, EndSpec{2.0 * (s - 1.0 + sprime), g}, EndSpec{0.0, g}, opt,
               [&](double, double dlo, double dhi, double w) {
                 auto d = basis.fractional(Side::left, sprime, dlo, dhi, true, ni);
                 Eigen::Map<Eigen::VectorXd> v(d.data(), N);
                 double sc = std::pow(dlo, -(s - 1.0 + sprime));
                 G += (w * sc * sc) * v * v.transpose();
               });
  return G;
}

// ---------------------------------------------------------------------------

class GalerkinSolution {
public:
  GalerkinSolution(std::shared_ptr<const ProblemSpec> pb, Eigen::VectorXd c,
                   double residual)
      : pb_(std::move(pb)), basis_(static_cast<int>(c.size()), pb_->s(), pb_->interval),
        c_(std::move(c)), residual_(residual) {}

  int basis_size() const { return basis_.size(); }
  const Eigen::VectorXd& coefficients() const { return c_; }
  double basis_exponent() const { return basis_.weight_power(); }
  const ProblemSpec& problem() const { return *pb_; }
  const WeightedLegendreBasis& basis() const { return basis_; }
  double residual_norm() const { return residual_; }

  double u_d(double da, double db) const {
    std::vector<double> P(basis_size());
    basis_.eval(da, db, P.data(), nullptr);
    double om = 4.0 * da * db / sq(pb_->interval.length());
    return std::pow(om, basis_exponent()) * dot(P);
  }
  double du_d(double da, double db) const {
    std::vector<double> R(basis_size());
    basis_.eval(da, db, nullptr, R.data());
    double om = 4.0 * da * db / sq(pb_->interval.length());
    return std::pow(om, basis_exponent() - 1.0) * dot(R);
  }
  /// I_side^sigma u' (derivative = true) or I_side^sigma u
  double fractional_d(Side side, double sigma, double da, double db,
                      bool derivative = true) const {
    auto v = basis_.fractional(side, sigma, da, db, derivative, inner_nodes(basis_size()));
    return dot(v);
  }
  double left_dmu_d(double da, double db) const {
    return fractional_d(Side::left, 1.0 - pb_->mu, da, db);
  }
  double right_dmu_d(double da, double db) const {
    return -fractional_d(Side::right, 1.0 - pb_->mu, da, db);
  }

  double u(double x) const { return u_d(x - a(), b() - x); }
  double du(double x) const { return du_d(x - a(), b() - x); }
  double left_dmu(double x) const { return left_dmu_d(x - a(), b() - x); }
  double right_dmu(double x) const { return right_dmu_d(x - a(), b() - x); }

  /// aD^t u for t in [0, 2)
  double left_derivative_d(double t, double da, double db) const {
    if (!(t >= 0.0 && t < 2.0))
      throw domain_error("left_derivative: order must lie in [0, 2)");
    if (t == 0.0)
      return u_d(da, db);
    if (t < 1.0)
      return fractional_d(Side::left, 1.0 - t, da, db);
    if (t == 1.0)
      return du_d(da, db);
    // D I_left^(2-t) u', five-point stencil
    const double h = 1e-2 * std::min(da, db);
    auto g = [&](double off) { return fractional_d(Side::left, 2.0 - t, da + off, db - off); };
    return (g(-2 * h) - 8 * g(-h) + 8 * g(h) - g(2 * h)) / (12.0 * h);
  }

private:
  static double sq(double v) { return v * v; }
  double a() const { return pb_->interval.a; }
  double b() const { return pb_->interval.b; }
  template <class V>
  double dot(const V& v) const {
    double r = 0.0;
    for (int k = 0; k < basis_size(); ++k)
      r += c_[k] * v[k];
    return r;
  }

  std::shared_ptr<const ProblemSpec> pb_;
  WeightedLegendreBasis basis_;
  Eigen::VectorXd c_;
  double residual_;
};

struct WeakSystem {
  Eigen::MatrixXd B;
  Eigen::VectorXd F;
};

inline WeakSystem assemble_system(const ProblemSpec& pb, int N) {
  return {assemble_b2(pb, N), assemble_rhs(pb, N)};
}

inline GalerkinSolution solve_system(const ProblemSpec& pb, const WeakSystem& sys) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.B);
  Eigen::VectorXd c = lu.solve(sys.F);
  if (!c.allFinite())
    throw numeric_error("solve_weak: singular Galerkin system");
  double fn = sys.F.norm();
  double res = (sys.B * c - sys.F).norm() / (fn > 0.0 ? fn : 1.0);
  if (res > 1e-10)
    throw numeric_error("solve_weak: Galerkin orthogonality residual too large", res);
  return {std::make_shared<const ProblemSpec>(pb), std::move(c), res};
}

inline GalerkinSolution solve_weak(const ProblemSpec& pb, int N) {
  return solve_system(pb, assemble_system(pb, N));
}

// ---------------------------------------------------------------------------

struct RayleighBounds {
  double min;
  double max;
};

/// extreme eigenvalues of sym(B) v = lambda G v, G the H^s semi-norm Gram matrix
inline RayleighBounds rayleigh_bounds(const ProblemSpec& pb, int N) {
  WeightedLegendreBasis basis(N, pb.s(), pb.interval);
  Eigen::MatrixXd B = assemble_b2(pb, N);
  Eigen::MatrixXd S = 0.5 * (B + B.transpose());
  Eigen::MatrixXd G = gram_hs(basis, pb.interval, 0.5 * (1.0 - pb.mu));
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(S, G);
  if (es.info() != Eigen::Success)
    throw numeric_error("rayleigh_bounds: generalized eigenproblem failed");
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

/// ||aD^s u_N||_L2
inline double hs_seminorm(const GalerkinSolution& u) {
  const ProblemSpec& pb = u.problem();
  Eigen::MatrixXd G = gram_hs(u.basis(), pb.interval, 0.5 * (1.0 - pb.mu));
  return std::sqrt(std::max(0.0, u.coefficients().dot(G * u.coefficients())));
}

/// ||aD^-s (f/k)||_L2
inline double source_norm(const ProblemSpec& pb) {
  const Interval& iv = pb.interval;
  const PowerWeightedFunction& f = pb.source;
  const double s = pb.s();
  WeightedCallable g{[&](double x) { return f.smooth(x - iv.a) / pb.k(x, iv); }, f.exp_a(),
                     f.exp_b(), iv};
  GradedOptions opt;
  opt.nodes = 24;
  opt.max_panel = 0.125 * iv.length();
  const double g0 = 1e-10 * iv.length();
  // I^s(f/k) ~ dist^(ea+s) at a
  const double e = 2.0 * std::min(0.0, f.exp_a() + s);
  double sum = graded_integrate(iv.a, iv.b, EndSpec{e, g0}, EndSpec{0.0, g0}, opt,
                                [&](double t, double dlo, double) {
                                  double v = rl_integral_numeric(Side::left, s, g, t);
                                  return v * v * std::pow(dlo, -e);
                                });
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------

/// Strong residuals of the computed solution at interior points.
///   L:  -D(k G) + p u' + q u - f with G = (alpha I_left + beta I_right)^(1-mu) u'
///   Lt: the same with G replaced by D H, H = (alpha I_left + beta I_right)^(1-mu) u
struct OperatorResiduals {
  std::vector<double> x;
  std::vector<double> l;
  std::vector<double> ltilde;
};

inline OperatorResiduals operator_residuals(const GalerkinSolution& u,
                                            const std::vector<double>& xs) {
  const ProblemSpec& pb = u.problem();
  const Interval& iv = pb.interval;
  const double sig = 1.0 - pb.mu;
  auto kG = [&](double x) {
    double da = x - iv.a, db = iv.b - x;
    double g = pb.alpha * u.fractional_d(Side::left, sig, da, db) +
               pb.beta * u.fractional_d(Side::right, sig, da, db);
    return pb.k(x, iv) * g;
  };
  auto H = [&](double x) {
    double da = x - iv.a, db = iv.b - x;
    return pb.alpha * u.fractional_d(Side::left, sig, da, db, false) +
           pb.beta * u.fractional_d(Side::right, sig, da, db, false);
  };
  OperatorResiduals r;
  for (double x : xs) {
    const double d = std::min(x - iv.a, iv.b - x);
    const double h = 1e-3 * d;
    double lower = pb.adv(x, iv) * u.du(x) + pb.reac(x, iv) * u.u(x) - pb.source(x);
    double dkG = (kG(x - 2 * h) - 8 * kG(x - h) + 8 * kG(x + h) - kG(x + 2 * h)) / (12 * h);
    // k D H at x +- h by central differences, then the outer derivative
    const double h2 = 1e-2 * d;
    auto kDH = [&](double y) {
      double hh = 0.25 * h2;
      return pb.k(y, iv) *
             (H(y - 2 * hh) - 8 * H(y - hh) + 8 * H(y + hh) - H(y + 2 * hh)) / (12 * hh);
    };
    double dkDH = (kDH(x - 2 * h2) - 8 * kDH(x - h2) + 8 * kDH(x + h2) - kDH(x + 2 * h2)) /
                  (12 * h2);
    r.x.push_back(x);
    r.l.push_back(-dkG + lower);
    r.ltilde.push_back(-dkDH + lower);
  }
  return r;
}

} // namespace fdare
