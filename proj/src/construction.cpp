#include "specgap/construction.hpp"

#include <cmath>

namespace specgap {

namespace {

bool perfect_square_root(Eigen::Index n, long& m) {
  long r = static_cast<long>(std::llround(std::sqrt(double(n))));
  for (long c = std::max(1L, r - 2); c <= r + 2; ++c) {
    if (c * c == n) {
      m = c;
      return true;
    }
  }
  return false;
}

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

ConstructionCoefficients construction_coefficients(Eigen::Index n, ArithmeticMode mode) {
  if (n < 4) throw DomainError("construction needs n >= 4");
  ConstructionCoefficients co;
  const double m = std::sqrt(double(n));
  co.m = m;
  co.a = (m * m + m - 1) / (m * (m + 2));
  co.b = (m + 1) / (m * (m + 2));
  co.c = 1 / (m * (m + 1));
  co.d = (m * m * m + 2 * m * m + m + 1) / (m * (m + 1) * (m + 2));
  co.e = 1 / (m * (m + 1) * (m + 2));
  co.f = (2 * m + 3) / (m * (m + 1) * (m + 2));
  co.r = 1 - 1 / (m + 2);
  co.alpha = -1 + 1 / (m * (m + 1));
  co.beta = 1 / (m * (m + 1));

  if (mode == ArithmeticMode::ExactRational) {
    long mi = 0;
    if (!perfect_square_root(n, mi))
      throw DomainError("exact-rational construction needs n to be a perfect square");
    const Rational mq(mi);
    co.a_q = (mq * mq + mq - 1) / (mq * (mq + 2));
    co.b_q = (mq + 1) / (mq * (mq + 2));
    co.c_q = Rational(1) / (mq * (mq + 1));
    co.d_q = (mq * mq * mq + 2 * mq * mq + mq + 1) / (mq * (mq + 1) * (mq + 2));
    co.e_q = Rational(1) / (mq * (mq + 1) * (mq + 2));
    co.f_q = (2 * mq + 3) / (mq * (mq + 1) * (mq + 2));
    co.r_q = 1 - Rational(1) / (mq + 2);
    co.alpha_q = -1 + Rational(1) / (mq * (mq + 1));
    co.beta_q = Rational(1) / (mq * (mq + 1));
    co.inv_m_q = Rational(1) / mq;
  }
  return co;
}

NonnegMatrix rogue_matrix(Eigen::Index n, ArithmeticMode mode) {
  ConstructionCoefficients co = construction_coefficients(n, mode);
  const std::size_t un = static_cast<std::size_t>(n);

  if (mode == ArithmeticMode::ExactRational) {
    RationalMatrix m(un);
    m(0, 0) = *co.a_q;
    m(0, 1) = *co.b_q;
    for (std::size_t i = 1; i + 1 < un; ++i) {
      m(i, 1) = *co.c_q;
      for (std::size_t j = 2; j < un; ++j) m(i, j) = (j == i + 1) ? *co.d_q : *co.e_q;
    }
    m(un - 1, 0) = *co.b_q;
    m(un - 1, 1) = *co.f_q;
    for (std::size_t j = 2; j < un; ++j) m(un - 1, j) = *co.c_q;
    NonnegMatrix out = NonnegMatrix::from_rational(std::move(m));
    out.tags.doubly_stochastic = true;
    return out;
  }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(0, 0) = co.a;
  m(0, 1) = co.b;
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    m(i, 1) = co.c;
    for (Eigen::Index j = 2; j < n; ++j) m(i, j) = (j == i + 1) ? co.d : co.e;
  }
  m(n - 1, 0) = co.b;
  m(n - 1, 1) = co.f;
  for (Eigen::Index j = 2; j < n; ++j) m(n - 1, j) = co.c;
  NonnegMatrix out = NonnegMatrix::from_dense(std::move(m));
  out.tags.doubly_stochastic = true;
  return out;
}

SchurWitness schur_witness(Eigen::Index n, ArithmeticMode mode) {
  ConstructionCoefficients co = construction_coefficients(n, mode);
  SchurWitness out;
  const double inv_m = 1.0 / co.m;

  out.u = Eigen::MatrixXd::Constant(n, n, co.beta);
  out.u.row(0).setConstant(inv_m);
  out.u.col(0).setConstant(inv_m);
  for (Eigen::Index i = 1; i < n; ++i) out.u(i, i) = co.alpha;

  out.t = Eigen::MatrixXd::Zero(n, n);
  out.t(0, 0) = 1.0;
  for (Eigen::Index i = 1; i + 1 < n; ++i) out.t(i, i + 1) = co.r;

  if (mode == ArithmeticMode::ExactRational) {
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix uq(un), tq(un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        if (i == 0 || j == 0)
          uq(i, j) = *co.inv_m_q;
        else
          uq(i, j) = (i == j) ? *co.alpha_q : *co.beta_q;
      }
    tq(0, 0) = 1;
    for (std::size_t i = 1; i + 1 < un; ++i) tq(i, i + 1) = *co.r_q;
    out.u_exact = std::move(uq);
    out.t_exact = std::move(tq);
  }
  return out;
}

NonnegMatrix perturbed_rogue(Eigen::Index n) {
  ConstructionCoefficients co = construction_coefficients(n, ArithmeticMode::Float64);
  NonnegMatrix out = rogue_matrix(n, ArithmeticMode::Float64);
  out.entries(0, 0) = co.a + co.b;  // = 1: vertex 1 decouples
  out.entries(0, 1) = 0.0;
  out.entries(n - 1, 0) = 0.0;
  out.entries(n - 1, 1) = co.f + co.b;
  return out;
}

NonnegMatrix de_bruijn(int k) {
  if (k < 1) throw DomainError("de Bruijn construction needs k >= 1");
  if (k > 20) throw CapacityError("de Bruijn construction capped at 2^20 vertices");
  const Eigen::Index n = Eigen::Index(1) << k;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const Eigen::Index mask = n - 1;
  for (Eigen::Index v = 0; v < n; ++v) {
    // Drop the leading bit, append 0 or 1.
    Eigen::Index shifted = (v << 1) & mask;
    m(v, shifted) += 0.5;
    m(v, shifted | 1) += 0.5;
  }
  NonnegMatrix out = NonnegMatrix::from_dense(std::move(m));
  out.tags.doubly_stochastic = true;
  return out;
}

NonnegMatrix klawe_vazirani(long p) {
  if (!is_odd_prime(p)) throw DomainError("Klawe-Vazirani construction needs an odd prime");
  const auto n = static_cast<Eigen::Index>(p);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (long v = 0; v < p; ++v) {
    m(v, (v + 1) % p) += 0.5;
    m(v, (2 * v) % p) += 0.5;
  }
  NonnegMatrix out = NonnegMatrix::from_dense(std::move(m));
  out.tags.doubly_stochastic = true;
  return out;
}

}  // namespace specgap
