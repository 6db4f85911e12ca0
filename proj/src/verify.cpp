#include "yosp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "yosp/hopf.hpp"

namespace yosp {

namespace {

std::vector<int> standard_parity() { return {index_parity(0), index_parity(1), index_parity(2)}; }

std::vector<int> doubled_parity() {
  std::vector<int> p;
  for (int a : standard_parity())
    for (int b : standard_parity()) p.push_back((a + b) % 2);
  return p;
}

// sum_ij (-1)^{|i||j|+|j|} E_ij (x) T_ij, with E_ij placed on leg 1 or leg 2.
SpMat leg_operator(const std::array<SpMat, 9>& t, int leg) {
  const GradedMatrix id3 = graded_identity(standard_parity());
  const auto par9 = doubled_parity();
  const Index n = t[0].rows();
  SpMat out(9 * n, 9 * n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const GradedMatrix e = matrix_unit(i, j);
      const GradedMatrix placed = leg == 1 ? super_kron(e, id3) : super_kron(id3, e);
      const int s = sign_power(index_parity(i) * index_parity(j) + index_parity(j));
      out += super_kron(placed.entries, par9, t[static_cast<std::size_t>(3 * i + j)],
                        generator_parity(i, j)) *
             Rational(s);
    }
  prune(out);
  return out;
}

std::array<SpMat, 9> evaluate_all(const ModuleRep& m, const Rational& u) {
  std::array<SpMat, 9> out;
  for (std::size_t k = 0; k < 9; ++k) out[k] = m.T[k](u);
  return out;
}

bool avoids(const UniPoly& p, const Rational& x) { return p(x) != 0; }

std::optional<EntryWitness> first_difference(const SpMat& lhs, const SpMat& rhs,
                                             const std::vector<Index>& cols) {
  const Mat diff = Mat(SpMat(lhs - rhs));
  const Mat l = Mat(lhs);
  const Mat r = Mat(rhs);
  for (Index c = 0; c < diff.cols(); ++c)
    for (Index row = 0; row < diff.rows(); ++row)
      if (diff(row, c) != 0)
        return EntryWitness{0, 0, row, cols[static_cast<std::size_t>(c)], l(row, c), r(row, c)};
  return std::nullopt;
}

}  // namespace

void expect_passed(const CheckReport& report) {
  if (report.passed) return;
  std::string msg = report.check + " relation violated";
  if (report.witness) {
    const auto& w = *report.witness;
    msg += " at u = " + w.u.str();
    if (report.check == "rtt") msg += ", v = " + w.v.str();
    msg += ", entry (" + std::to_string(w.entry.row) + "," + std::to_string(w.entry.col) +
           "): " + w.entry.lhs.str() + " != " + w.entry.rhs.str();
  }
  throw RelationViolation(msg);
}

CheckReport verify_rtt(const ModuleRep& m, int n_samples, std::uint64_t seed, int jobs) {
  CheckReport report;
  report.check = "rtt";
  const int deg = m.denom.degree();
  report.degree_bound_u = report.degree_bound_v = deg + 2;
  const int need = deg + 3;
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(n_samples, 1)))));
  report.grid = std::max(need, side);
  report.certified = report.grid >= need;

  std::mt19937_64 rng(seed);
  std::vector<Rational> us, vs;
  auto fresh = [&](const std::vector<Rational>& taken) {
    for (;;) {
      const Rational x = random_rational(rng, 60, 7);
      if (!avoids(m.denom, x)) continue;
      if (std::find(taken.begin(), taken.end(), x) != taken.end()) continue;
      return x;
    }
  };
  while (static_cast<int>(us.size()) < report.grid) us.push_back(fresh(us));
  while (static_cast<int>(vs.size()) < report.grid) {
    const Rational v = fresh(vs);
    bool ok = true;
    for (const Rational& u : us)
      if (u == v || u - v == kappa()) ok = false;
    if (ok) vs.push_back(v);
  }

  const Index n = m.dim();
  std::vector<Index> cols;
  const auto inner = m.interior_indices();
  for (Index a = 0; a < 9; ++a)
    for (Index x : inner) cols.push_back(a * n + x);
  SpMat sel(9 * n, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sel.insert(cols[k], static_cast<Index>(k)) = 1;

  std::vector<SpMat> t1(us.size()), t2(vs.size());
  for (std::size_t k = 0; k < us.size(); ++k) t1[k] = leg_operator(evaluate_all(m, us[k]), 1);
  for (std::size_t k = 0; k < vs.size(); ++k) t2[k] = leg_operator(evaluate_all(m, vs[k]), 2);

  const OperatorPoly r = r_matrix_cleared();
  const auto par9 = doubled_parity();
  const SpMat idn = sparse_identity<Rational>(n);

  const std::size_t total = us.size() * vs.size();
  report.samples.resize(total);
  std::vector<std::optional<EntryWitness>> witnesses(total);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t idx = begin; idx < total; idx += step) {
      const std::size_t a = idx / vs.size();
      const std::size_t b = idx % vs.size();
      const SpMat rr = super_kron(r(us[a] - vs[b]), par9, idn, 0);
      const SpMat lhs = rr * (t1[a] * (t2[b] * sel));
      const SpMat rhs = t2[b] * (t1[a] * (rr * sel));
      witnesses[idx] = first_difference(lhs, rhs, cols);
      report.samples[idx] = {us[a], vs[b], !witnesses[idx].has_value()};
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
    for (auto& t : pool) t.join();
  }
  for (std::size_t idx = 0; idx < total; ++idx)
    if (witnesses[idx] && report.passed) {
      report.passed = false;
      report.witness = CheckWitness{report.samples[idx].u, report.samples[idx].v, *witnesses[idx]};
    }
  return report;
}

CheckReport verify_central(const ModuleRep& m, int n_samples, std::uint64_t seed) {
  CheckReport report;
  report.check = "central";
  const int deg = m.denom.degree();
  report.degree_bound_u = 2 * deg + m.c.den().degree();
  report.grid = std::max(n_samples, report.degree_bound_u + 1);
  report.certified = true;

  std::mt19937_64 rng(seed);
  std::vector<Rational> us;
  while (static_cast<int>(us.size()) < report.grid) {
    const Rational x = random_rational(rng, 60, 7);
    if (m.c.den()(x) == 0 || m.c.num()(x) == 0) continue;
    if (m.denom(x) == 0 || m.denom(x - kappa()) == 0) continue;
    if (std::find(us.begin(), us.end(), x) != us.end()) continue;
    us.push_back(x);
  }
  for (const Rational& u : us) {
    const auto w = central_defect(m, u);
    report.samples.push_back({u, Rational(0), !w.has_value()});
    if (w && report.passed) {
      report.passed = false;
      report.witness = CheckWitness{u, Rational(0), *w};
    }
  }
  return report;
}

GaussReport gauss_diagonal_check(const ModuleRep& m, const Rational& u0) {
  if (m.truncated())
    throw TruncatedInput("Gaussian generators need inverses, unavailable under truncation");
  const Index n = m.dim();
  auto t_at = [&](const Rational& u) {
    const Rational d = m.denom(u);
    if (d == 0) throw SingularMatrix("d(u) vanishes at u = " + u.str());
    std::array<Mat, 9> t;
    for (std::size_t k = 0; k < 9; ++k) t[k] = Mat(m.T[k](u)) / d;
    return t;
  };
  struct Gauss {
    Mat h1, h2, h3, e12, e23, f21, f32;
  };
  auto gauss_at = [&](const Rational& u) {
    const auto t = t_at(u);
    auto T = [&](int i, int j) -> const Mat& { return t[static_cast<std::size_t>(3 * i + j)]; };
    Gauss g;
    g.h1 = T(0, 0);
    const Mat h1i = inverse(g.h1);
    g.h2 = T(1, 1) - T(1, 0) * h1i * T(0, 1);
    const Mat h2i = inverse(g.h2);
    Mat block(2 * n, 2 * n);
    block << T(0, 0), T(0, 1), T(1, 0), T(1, 1);
    Mat row(n, 2 * n), col(2 * n, n);
    row << T(2, 0), T(2, 1);
    col << T(0, 2), T(1, 2);
    g.h3 = T(2, 2) - row * inverse(block) * col;
    g.e12 = h1i * T(0, 1);
    g.e23 = h2i * (T(1, 2) - T(1, 0) * h1i * T(0, 2));
    g.f21 = T(1, 0) * h1i;
    g.f32 = (T(2, 1) - T(2, 0) * h1i * T(0, 1)) * h2i;
    return g;
  };
  const Rational half(1, 2);
  const Gauss g0 = gauss_at(u0);
  const Gauss gh = gauss_at(u0 + half);
  const Gauss g1 = gauss_at(u0 + 1);
  const Gauss g32 = gauss_at(u0 + Rational(3, 2));

  GaussReport rep;
  rep.u0 = u0;
  rep.ef_e = g0.e12 == Mat(-gh.e23);
  rep.ef_f = g0.f21 == gh.f32;
  rep.hoht = Mat(g0.h1 * gh.h3) == Mat(g0.h2 * gh.h2);
  const Mat cu = g0.h1 * inverse(g1.h1) * g1.h2 * g32.h2;
  rep.cu = cu == Mat(Mat::Identity(n, n) * m.c(u0));

  const HighestWeight hw = highest_weight_of(m);
  Vec xi = Vec::Zero(n);
  xi(m.highest_index) = 1;
  rep.highest = Vec(g0.h1 * xi) == Vec(xi * hw.l1(u0)) && Vec(g0.h2 * xi) == Vec(xi * hw.l2(u0)) &&
                Vec(g0.h3 * xi) == Vec(xi * hw.l3(u0));
  return rep;
}

}  // namespace yosp
