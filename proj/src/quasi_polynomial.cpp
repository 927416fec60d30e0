#include "contact_index/quasi_polynomial.hpp"

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

void trim(QuasiPolynomial::Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long residue(long m, int period) {
  const long r = m % period;
  return r < 0 ? r + period : r;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(int period) : QuasiPolynomial(period, {}) {}

QuasiPolynomial::QuasiPolynomial(int period, std::vector<Poly> polys) : period_(period), polys_(std::move(polys)) {
  if (period < 1) throw DomainError("quasi-polynomial period must be positive");
  polys_.resize(static_cast<std::size_t>(period));
  for (auto& p : polys_) trim(p);
}

bool QuasiPolynomial::is_zero() const {
  for (const auto& p : polys_) {
    if (!p.empty()) return false;
  }
  return true;
}

ExactScalar evaluate_poly(const QuasiPolynomial::Poly& p, const Rational& x) {
  ExactScalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * ExactScalar(x) + *it;
  return acc;
}

ExactScalar QuasiPolynomial::evaluate(long m) const {
  return evaluate_poly(polys_[static_cast<std::size_t>(residue(m, period_))], Rational(m));
}

QuasiPolynomial QuasiPolynomial::lift(int period) const {
  if (period % period_ != 0) throw DomainError("can only lift a quasi-polynomial to a multiple of its period");
  std::vector<Poly> polys(static_cast<std::size_t>(period));
  for (int r = 0; r < period; ++r) polys[static_cast<std::size_t>(r)] = polys_[static_cast<std::size_t>(r % period_)];
  return {period, std::move(polys)};
}

QuasiPolynomial QuasiPolynomial::canonical() const {
  for (int d = 1; d < period_; ++d) {
    if (period_ % d != 0) continue;
    bool ok = true;
    for (int r = d; r < period_ && ok; ++r) {
      ok = polys_[static_cast<std::size_t>(r)] == polys_[static_cast<std::size_t>(r % d)];
    }
    if (ok) return {d, std::vector<Poly>(polys_.begin(), polys_.begin() + d)};
  }
  return *this;
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  const int l = static_cast<int>(lcm(period_, o.period_));
  QuasiPolynomial a = lift(l);
  const QuasiPolynomial b = o.lift(l);
  for (std::size_t r = 0; r < a.polys_.size(); ++r) {
    auto& p = a.polys_[r];
    const auto& q = b.polys_[r];
    if (p.size() < q.size()) p.resize(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) p[j] += q[j];
    trim(p);
  }
  return *this = std::move(a);
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const int l = static_cast<int>(lcm(a.period_, b.period_));
  return a.lift(l).polys_ == b.lift(l).polys_;
}

QuasiPolynomial fit_quasi_polynomial(const std::map<long, ExactScalar>& samples, int period, int max_degree) {
  if (period < 1 || max_degree < 0) throw DomainError("fit needs a positive period and a nonnegative degree");
  std::vector<std::vector<std::pair<long, ExactScalar>>> classes(static_cast<std::size_t>(period));
  for (const auto& [m, v] : samples) classes[static_cast<std::size_t>(residue(m, period))].emplace_back(m, v);

  const auto need = static_cast<std::size_t>(max_degree) + 2;
  std::vector<QuasiPolynomial::Poly> polys(static_cast<std::size_t>(period));
  std::string residuals;
  int bad = 0;
  for (int r = 0; r < period; ++r) {
    const auto& pts = classes[static_cast<std::size_t>(r)];
    if (pts.size() < need) {
      throw FitError("residue class " + std::to_string(r) + " mod " + std::to_string(period) + " has " +
                     std::to_string(pts.size()) + " samples, need " + std::to_string(need) +
                     " (degree " + std::to_string(max_degree) + " plus one held out)");
    }
    // Newton divided differences on the first max_degree+1 nodes.
    const auto n = static_cast<std::size_t>(max_degree) + 1;
    std::vector<ExactScalar> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = n - 1; i >= j; --i) {
        const Rational gap(pts[i].first - pts[i - j].first);
        dd[i] = (dd[i] - dd[i - 1]) * ExactScalar(Rational(1) / gap);
      }
    }
    QuasiPolynomial::Poly p{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
      // p ← p·(m − x_i) + dd[i]
      QuasiPolynomial::Poly q(p.size() + 1);
      const ExactScalar xi(Rational(pts[i].first));
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= p[j] * xi;
      }
      q[0] += dd[i];
      p = std::move(q);
    }
    trim(p);
    for (std::size_t i = n; i < pts.size(); ++i) {
      const ExactScalar fitted = evaluate_poly(p, Rational(pts[i].first));
      if (fitted == pts[i].second) continue;
      if (++bad <= 10) {
        residuals += "\n  m=" + std::to_string(pts[i].first) + " sample=" + pts[i].second.to_text() +
                     " fitted=" + fitted.to_text();
      }
    }
    polys[static_cast<std::size_t>(r)] = std::move(p);
  }
  if (bad > 0) {
    throw FitError(std::to_string(bad) + " held-out samples disagree with a degree-" + std::to_string(max_degree) +
                   " quasi-polynomial of period " + std::to_string(period) + ":" + residuals);
  }
  return {period, std::move(polys)};
}

}  // namespace contact_index
