#include "contact_index/delta_germ.hpp"

#include <regex>

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

Rational falling_factorial(int j, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= j - t;
  return r;
}

std::string fraction_text(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

std::string location_text(const Rational& angle) { return "e^{2πi·" + fraction_text(angle) + "}"; }

Rational parse_location(const std::string& text) {
  static const std::regex pattern(R"(e\^\{2πi·(-?\d+(?:/\d+)?)\})");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("malformed germ location '" + text + "'");
  return parse_rational(m[1].str());
}

}  // namespace

TorsionPoint make_torsion_point(std::vector<Rational> angles) {
  for (auto& a : angles) {
    // Reduce into [0,1).
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    a -= Rational(fl);
  }
  return angles;
}

TorsionPoint parse_torsion_point(std::string_view text) {
  std::vector<Rational> angles;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    angles.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_torsion_point(std::move(angles));
}

std::string torsion_point_text(const TorsionPoint& t) {
  std::string out;
  for (const auto& a : t) {
    if (!out.empty()) out += ",";
    out += fraction_text(a);
  }
  return out;
}

long torsion_order(const TorsionPoint& t) {
  long order = 1;
  for (const auto& a : t) order = lcm(order, a.get_den().get_si());
  return order;
}

DeltaGerm::DeltaGerm(int vars, TorsionPoint location) : vars_(vars), location_(std::move(location)) {
  if (vars < 1 || vars > 2) throw DomainError("germs support 1 or 2 variables, got " + std::to_string(vars));
  if (location_.empty()) location_.assign(static_cast<std::size_t>(vars), Rational(0));
  if (location_.size() != static_cast<std::size_t>(vars)) throw DomainError("germ location does not match its variables");
  location_ = make_torsion_point(std::move(location_));
}

DeltaGerm DeltaGerm::delta(int vars, const MultiIndex& order, const ExactScalar& c, TorsionPoint location) {
  DeltaGerm g(vars, std::move(location));
  if (order[0] < 0 || order[1] < 0 || (vars == 1 && order[1] != 0)) throw DomainError("invalid derivative order");
  g.add_term(order, c);
  return g;
}

ExactScalar DeltaGerm::coefficient(const MultiIndex& order) const {
  const auto it = terms_.find(order);
  return it == terms_.end() ? ExactScalar() : it->second;
}

int DeltaGerm::max_order() const {
  int m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, total_degree(k));
  return m;
}

DeltaGerm DeltaGerm::at(TorsionPoint location) const {
  DeltaGerm g(vars_, std::move(location));
  g.terms_ = terms_;
  return g;
}

void DeltaGerm::check_compatible(const DeltaGerm& o) const {
  if (vars_ != o.vars_ || location_ != o.location_) {
    throw DomainError("germs at different points or in different variables cannot be added");
  }
}

void DeltaGerm::add_term(const MultiIndex& k, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DeltaGerm DeltaGerm::operator-() const {
  DeltaGerm g = *this;
  for (auto& [k, c] : g.terms_) c = -c;
  return g;
}

DeltaGerm& DeltaGerm::operator+=(const DeltaGerm& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DeltaGerm& DeltaGerm::operator-=(const DeltaGerm& o) { return *this += -o; }

DeltaGerm& DeltaGerm::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string DeltaGerm::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_text() + "]·δ^(" + std::to_string(k[0]);
    if (vars_ == 2) out += "," + std::to_string(k[1]);
    out += ")";
  }
  return out;
}

nlohmann::json DeltaGerm::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::json order = vars_ == 1 ? nlohmann::json(k[0]) : nlohmann::json::array({k[0], k[1]});
    terms.push_back({{"derivative_order", order}, {"scalar", c.to_text()}});
  }
  nlohmann::json location;
  if (vars_ == 1) {
    location = location_text(location_[0]);
  } else {
    location = nlohmann::json::array({location_text(location_[0]), location_text(location_[1])});
  }
  return {{"vars", vars_}, {"location", location}, {"terms", terms}};
}

DeltaGerm DeltaGerm::from_json(const nlohmann::json& doc) {
  try {
    const int vars = doc.at("vars").get<int>();
    TorsionPoint loc;
    if (vars == 1) {
      loc.push_back(parse_location(doc.at("location").get<std::string>()));
    } else {
      for (const auto& l : doc.at("location")) loc.push_back(parse_location(l.get<std::string>()));
    }
    DeltaGerm g(vars, std::move(loc));
    for (const auto& t : doc.at("terms")) {
      MultiIndex k{0, 0};
      if (vars == 1) {
        k[0] = t.at("derivative_order").get<int>();
      } else {
        k = {t.at("derivative_order").at(0).get<int>(), t.at("derivative_order").at(1).get<int>()};
      }
      if (k[0] < 0 || k[1] < 0) throw ParseError("negative derivative order in germ document");
      g.add_term(k, ExactScalar::parse(t.at("scalar").get<std::string>()));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed germ document: ") + e.what());
  }
}

DeltaGerm scale_variable(const DeltaGerm& g, const Rational& a, int var) {
  if (a == 0) throw EllipticityError("cannot pull a delta back through the zero map");
  if (var < 0 || var >= g.vars()) throw DomainError("variable index out of range");
  DeltaGerm out(g.vars(), g.location());
  const ExactScalar inv_a(Rational(1) / a);
  for (const auto& [k, c] : g.terms()) {
    const int j = k[static_cast<std::size_t>(var)];
    ExactScalar f = pow(inv_a, j + 1);
    if (a < 0) f = -f;
    out += DeltaGerm::delta(g.vars(), k, c * f, g.location());
  }
  return out;
}

DeltaGerm multiply_smooth(const DeltaGerm& g, const SmoothJet& s) {
  if (s.space().vars != g.vars()) throw DomainError("jet and germ have different variables");
  if (s.space().order < g.max_order()) {
    throw TruncationError("jet truncated at order " + std::to_string(s.space().order) +
                          " cannot meet δ-derivatives of order " + std::to_string(g.max_order()) +
                          "; raise the jet order to at least " + std::to_string(g.max_order()));
  }
  DeltaGerm out(g.vars(), g.location());
  for (const auto& [j, c] : g.terms()) {
    for (const auto& [k, v] : s.terms()) {
      if (k[0] > j[0] || k[1] > j[1]) continue;
      Rational f = falling_factorial(j[0], k[0]) * falling_factorial(j[1], k[1]);
      if ((k[0] + k[1]) % 2 == 1) f = -f;
      out += DeltaGerm::delta(g.vars(), {j[0] - k[0], j[1] - k[1]}, c * v * ExactScalar(f), g.location());
    }
  }
  return out;
}

DeltaGerm tensor(const DeltaGerm& g, const DeltaGerm& h) {
  if (g.vars() != 1 || h.vars() != 1) throw DomainError("tensor product needs two one-variable germs");
  DeltaGerm out(2, {g.location()[0], h.location()[0]});
  for (const auto& [a, ca] : g.terms()) {
    for (const auto& [b, cb] : h.terms()) out += DeltaGerm::delta(2, {a[0], b[0]}, ca * cb, out.location());
  }
  return out;
}

DeltaGerm differentiate(const DeltaGerm& g, int j) {
  if (g.vars() != 1) throw UnsupportedError("differentiation is implemented for one-variable germs");
  if (j < 0) throw DomainError("negative derivative order");
  DeltaGerm out(1, g.location());
  for (const auto& [k, c] : g.terms()) out += DeltaGerm::delta(1, {k[0] + j, 0}, c, g.location());
  return out;
}

DeltaGerm pullback_affine(const DeltaGerm& u, const AffineForm& a) {
  if (u.vars() != 1 || a.w.size() != 1) {
    throw UnsupportedError("delta pullback is implemented for one-variable affine arguments");
  }
  if (a.w[0] == 0 && a.c == 0) {
    throw EllipticityError("ellipticity violated: the delta argument vanishes identically (w = 0, const = 0)");
  }
  // δ is supported at 0, so a nonzero constant moves the support away.
  if (a.c != 0) return DeltaGerm(1, u.location());
  return scale_variable(u, a.w[0]);
}

QuasiPolynomial fourier_contribution(const DeltaGerm& g, int poisson_sign) {
  if (g.vars() != 1) throw UnsupportedError("Fourier conversion is implemented for one-variable germs");
  if (poisson_sign != 1 && poisson_sign != -1) throw DomainError("Poisson sign must be +1 or -1");
  const Rational angle = g.location()[0];
  const int period = static_cast<int>(angle.get_den().get_si());
  const ExactScalar si = ExactScalar(poisson_sign) * ExactScalar::i();
  const ExactScalar inv_two_pi = ExactScalar(Rational(1, 2)) * ExactScalar::pi(-1);
  std::vector<QuasiPolynomial::Poly> polys(static_cast<std::size_t>(period));
  for (int r = 0; r < period; ++r) {
    const ExactScalar phase = ExactScalar::root_of_unity(Rational(-poisson_sign * r) * angle) * inv_two_pi;
    auto& p = polys[static_cast<std::size_t>(r)];
    for (const auto& [k, c] : g.terms()) {
      const auto j = static_cast<std::size_t>(k[0]);
      if (p.size() <= j) p.resize(j + 1);
      p[j] += phase * c * pow(si, k[0]);
    }
  }
  return {period, std::move(polys)};
}

ExactScalar pair_with_trig(const DeltaGerm& g, const std::map<long, ExactScalar>& trig) {
  if (g.vars() != 1) throw UnsupportedError("trigonometric pairing is implemented for one-variable germs");
  ExactScalar total;
  for (const auto& [k, c] : g.terms()) {
    ExactScalar inner;
    for (const auto& [m, a] : trig) inner += a * pow(ExactScalar(m) * ExactScalar::i(), k[0]);
    total += (k[0] % 2 == 0 ? c : -c) * inner;
  }
  return total;
}

}  // namespace contact_index
