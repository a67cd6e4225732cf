#include "superpoint/localized.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "superpoint/exact_matrix.hpp"

namespace superpoint {

namespace {

// Common monomial divisor of all terms (exponentwise minimum; odd part only
// divides when shared by every term, which for an even denominator never
// happens, so we track the even part only).
std::vector<int> even_content(const SuperElement& a) {
  std::vector<int> content;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (first) {
      content = m.even;
      first = false;
    } else {
      for (std::size_t i = 0; i < content.size(); ++i)
        content[i] = std::min(content[i], m.even[i]);
    }
  }
  return content;
}

SuperElement divide_even_monomial(const SuperElement& a, const std::vector<int>& exps) {
  SuperElement out(a.n());
  for (const auto& [m, c] : a.terms()) {
    Monomial q = m;
    for (std::size_t i = 0; i < exps.size(); ++i) q.even[i] -= exps[i];
    out += SuperElement::monomial(std::move(q), c);
  }
  return out;
}

}  // namespace

LocalizedElement::LocalizedElement(SuperElement num, SuperElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.n() != den_.n()) throw std::invalid_argument("ambient dimension mismatch");
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (!den_.is_xi_free())
    throw std::invalid_argument("denominator must be an even polynomial in the x's");
  if (num_.is_zero()) {
    den_ = SuperElement::one(num_.n());
    return;
  }
  // Cancel the common even monomial content.
  std::vector<int> cn = even_content(num_);
  std::vector<int> cd = even_content(den_);
  std::vector<int> common(cn.size());
  bool any = false;
  for (std::size_t i = 0; i < cn.size(); ++i) {
    common[i] = std::min(cn[i], cd[i]);
    any = any || common[i] > 0;
  }
  if (any) {
    num_ = divide_even_monomial(num_, common);
    den_ = divide_even_monomial(den_, common);
  }
  // Normalize the denominator's leading coefficient to 1.
  Rational lead = den_.terms().rbegin()->second;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

LocalizedElement LocalizedElement::from(SuperElement a) {
  int n = a.n();
  return LocalizedElement(std::move(a), SuperElement::one(n));
}

bool LocalizedElement::operator==(const LocalizedElement& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

LocalizedElement LocalizedElement::operator-() const {
  return LocalizedElement(-num_, den_);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.den() == b.den()) return LocalizedElement(a.num() + b.num(), a.den());
  return LocalizedElement(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
  return a + (-b);
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  return LocalizedElement(a.num() * b.num(), a.den() * b.den());
}

LocalizedElement operator*(const Rational& c, const LocalizedElement& a) {
  return LocalizedElement(c * a.num(), a.den());
}

LocalizedElement operator/(const LocalizedElement& a, const LocalizedElement& b) {
  if (b.is_zero()) throw std::domain_error("division by zero localized element");
  if (!b.num().is_xi_free())
    throw std::domain_error("can only divide by even localized elements");
  return LocalizedElement(a.num() * b.den(), a.den() * b.num());
}

bool LocalizedElement::is_stalk_homogeneous() const {
  auto dd = den_.bidegree();
  if (!dd) return false;
  int target = dd->x_degree;
  for (const auto& [m, c] : num_.terms())
    if (m.x_degree() != target) return false;
  return true;
}

Rational LocalizedElement::den_value(std::span<const Rational> p) const {
  SuperElement v = den_.evaluate_even(p);
  return v.coefficient(Monomial::one(num_.n()));
}

SuperElement LocalizedElement::evaluate(std::span<const Rational> p) const {
  Rational d = den_value(p);
  if (d == 0) throw std::domain_error("denominator vanishes at the sample point");
  return (1 / d) * num_.evaluate_even(p);
}

std::string LocalizedElement::to_text() const {
  if (den_ == SuperElement::one(num_.n())) return num_.to_text();
  return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

LocalizedElement d_localized(const LocalizedElement& u) {
  // d kills every even polynomial, so the quotient rule collapses to
  // d(num)/den.
  return LocalizedElement(apply(koszul_d(u.n()), u.num()), u.den());
}

LocalizedElement apply_localized(const SuperDerivation& gamma, const LocalizedElement& u) {
  if (gamma.n() != u.n()) throw std::invalid_argument("ambient dimension mismatch");
  auto parity = gamma.parity();
  if (!parity) throw std::invalid_argument("cannot apply a mixed-parity derivation");
  SuperElement gf = apply(gamma, u.num());
  SuperElement gg = apply(gamma, u.den());
  // gamma(f/g) = (g gamma(f) - (-1)^{p(gamma) p(f)} f gamma(g)) / g^2, applied
  // to each parity component of the numerator.
  SuperElement signed_num = u.num();
  if (*parity == 1)
    signed_num = u.num().parity_component(0) - u.num().parity_component(1);
  return LocalizedElement(u.den() * gf - signed_num * gg, u.den() * u.den());
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(),
                           [](const Rational& c) { return c != 0; });
  if (lead == coords_.end())
    throw std::invalid_argument("projective point needs a nonzero coordinate");
  Rational inv = 1 / *lead;
  for (auto& c : coords_) c *= inv;
}

std::string ProjectivePoint::to_text() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << " : ";
    os << rational_text(coords_[i]);
  }
  os << ")";
  return os.str();
}

const char* to_string(StalkVerdict v) {
  switch (v) {
    case StalkVerdict::InRegular: return "in O^a_z";
    case StalkVerdict::InAmbientOnly: return "in Ô^a_z only";
    case StalkVerdict::NotInAmbient: return "not in Ô^a_z";
  }
  return "?";
}

StalkVerdict stalk_membership(const LocalizedElement& u, const ProjectivePoint& z) {
  if (u.n() != z.n()) throw std::invalid_argument("ambient dimension mismatch");
  if (!u.is_stalk_homogeneous()) return StalkVerdict::NotInAmbient;
  if (u.den_value(z.coords()) == 0) return StalkVerdict::NotInAmbient;
  if (d_localized(u).is_zero()) return StalkVerdict::InRegular;
  return StalkVerdict::InAmbientOnly;
}

LocalizedElement frame_section(int n, int chart, int j) {
  if (chart < 1 || chart > n || j < 1 || j > n || j == chart)
    throw std::invalid_argument("frame section needs j != chart within range");
  SuperElement num = SuperElement::variable_x(n, chart) * SuperElement::variable_xi(n, j) -
                     SuperElement::variable_x(n, j) * SuperElement::variable_xi(n, chart);
  return LocalizedElement(std::move(num), SuperElement::variable_x(n, chart));
}

std::vector<FrameSection> frame_sections(int n, int chart) {
  std::vector<FrameSection> out;
  for (int j = 1; j <= n; ++j)
    if (j != chart) out.push_back(FrameSection{chart, j, frame_section(n, chart, j)});
  return out;
}

LocalizedElement chart_coordinate(int n, int chart, int j) {
  if (chart < 1 || chart > n || j < 1 || j > n)
    throw std::invalid_argument("chart coordinate index out of range");
  return LocalizedElement(SuperElement::variable_x(n, j),
                          SuperElement::variable_x(n, chart));
}

SuperElement apply_pointwise_d(std::span<const Rational> p, const SuperElement& v) {
  int n = v.n();
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("point has wrong length");
  std::vector<SuperElement> xi, x;
  for (int i = 0; i < n; ++i) {
    xi.push_back(SuperElement::constant(n, p[static_cast<std::size_t>(i)]));
    x.push_back(SuperElement::zero(n));
  }
  return apply(SuperDerivation(n, std::move(xi), std::move(x)), v);
}

PointwiseReport pointwise_annihilator_check(
    const LocalizedElement& u, std::span<const std::vector<Rational>> samples) {
  PointwiseReport rep;
  rep.symbolic_zero = d_localized(u).is_zero();
  for (const auto& p : samples) {
    if (u.den_value(p) == 0) {
      ++rep.skipped;
      std::ostringstream os;
      os << "skipped sample (";
      for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << rational_text(p[i]);
      os << "): denominator vanishes";
      rep.notes.push_back(os.str());
      continue;
    }
    ++rep.tested;
    SuperElement dv = apply_pointwise_d(p, u.evaluate(p));
    if (dv.is_zero()) continue;
    rep.pointwise_all_zero = false;
    rep.witness_found = true;
  }
  return rep;
}

namespace {

Rational random_coordinate(Rng& rng) { return Rational(rng.uniform(-5, 5)); }

std::vector<Rational> random_point(int n, Rng& rng) {
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) p.push_back(random_coordinate(rng));
  return p;
}

// Random stalk-homogeneous element on the given chart: denominator a power of
// x_chart, numerator terms of matching x-degree with arbitrary xi-part.
LocalizedElement random_chart_element(int n, int chart, Rng& rng) {
  int m = rng.uniform(0, 2);
  SuperElement num = SuperElement::zero(n);
  int terms = rng.uniform(1, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int total = 0; total < m; ++total)
      exps[static_cast<std::size_t>(rng.uniform(0, n - 1))] += 1;
    Monomial mono;
    mono.even = std::move(exps);
    mono.odd = static_cast<std::uint32_t>(rng.next() % (1u << n));
    int c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    num += SuperElement::monomial(std::move(mono), Rational(c));
  }
  if (num.is_zero()) num = SuperElement::monomial(Monomial::x(n, chart, m));
  return LocalizedElement(std::move(num),
                          SuperElement::monomial(Monomial::x(n, chart, m)));
}

// Random element of the span of frame-section products (hence in ker d).
LocalizedElement random_frame_combination(int n, int chart, Rng& rng) {
  auto frames = frame_sections(n, chart);
  LocalizedElement acc = LocalizedElement::from(SuperElement::zero(n));
  int terms = rng.uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    LocalizedElement prod =
        Rational(rng.uniform(1, 3)) *
        frames[static_cast<std::size_t>(rng.uniform(0, n - 2))].value;
    if (rng.coin())
      prod = prod * frames[static_cast<std::size_t>(rng.uniform(0, n - 2))].value;
    if (rng.coin()) prod = chart_coordinate(n, chart, rng.uniform(1, n)) * prod;
    acc = acc + prod;
  }
  return acc;
}

}  // namespace

Report verify_lemma_2_1(int n, int samples, int random_elements, std::uint64_t seed) {
  if (n < 2 || n > 8) throw std::invalid_argument("verify lemma21 supports 2 <= n <= 8");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  Report rep;
  rep.title = "Lemma 2.1: O^a_z = Ô^a_z ∩ ker d (pointwise sampling)";
  rep.n = n;
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);

  for (int chart = 1; chart <= n; ++chart) {
    // Sample points with x_chart != 0; draws that land on the hyperplane are
    // recorded and redrawn.
    std::vector<std::vector<Rational>> points;
    int draws = 0;
    while (static_cast<int>(points.size()) < samples && draws < samples * 50) {
      ++draws;
      auto p = random_point(n, rng);
      if (p[static_cast<std::size_t>(chart - 1)] == 0) continue;
      points.push_back(std::move(p));
    }
    {
      std::ostringstream os;
      os << "chart " << chart << ": " << points.size() << " sample points from "
         << draws << " draws";
      rep.notes.push_back(os.str());
    }

    // Frame property: at each sample the evaluated frame spans Ann x.
    {
      bool ok = true;
      for (const auto& p : points) {
        ExactMatrix eval(n - 1, n);
        int r = 0;
        for (const auto& fs : frame_sections(n, chart)) {
          SuperElement v = fs.value.evaluate(p);
          for (int c = 1; c <= n; ++c)
            eval.at(r, c - 1) = v.coefficient(Monomial::xi(n, c));
          ++r;
        }
        if (eval.rank() != n - 1) ok = false;
        auto pairing = eval.mul_vec(p);
        for (const auto& q : pairing)
          if (q != 0) ok = false;
      }
      rep.check("chart " + std::to_string(chart) +
                    ": evaluated frame spans Ann x at every sample",
                ok);
    }

    // Agreement on the frame sections (d eta_j = 0 exactly).
    {
      bool ok = true;
      int disagreements = 0;
      for (const auto& fs : frame_sections(n, chart)) {
        if (!d_localized(fs.value).is_zero()) ok = false;
        auto pw = pointwise_annihilator_check(fs.value, points);
        if (!pw.agrees()) {
          ok = false;
          ++disagreements;
        }
      }
      rep.check("chart " + std::to_string(chart) +
                    ": frame sections lie in ker d, pointwise and symbolically",
                ok);
    }

    // Agreement on random localized elements (mixed population: generic
    // elements and ker-d combinations).
    {
      bool ok = true;
      int zero_side = 0, nonzero_side = 0, skipped = 0;
      for (int t = 0; t < random_elements; ++t) {
        LocalizedElement u = (t % 5 == 4) ? random_frame_combination(n, chart, rng)
                                          : random_chart_element(n, chart, rng);
        auto pw = pointwise_annihilator_check(u, points);
        skipped += pw.skipped;
        if (pw.symbolic_zero)
          ++zero_side;
        else
          ++nonzero_side;
        if (!pw.agrees()) ok = false;
      }
      std::ostringstream os;
      os << zero_side << " with du = 0, " << nonzero_side << " with du != 0";
      if (skipped) os << ", " << skipped << " samples skipped";
      rep.check("chart " + std::to_string(chart) + ": " +
                    std::to_string(random_elements) +
                    " random localized elements agree pointwise",
                ok, os.str());
    }
  }
  return rep;
}

}  // namespace superpoint
