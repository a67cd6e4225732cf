#include "superpoint/chart.hpp"

#include <sstream>
#include <stdexcept>

namespace superpoint {

namespace {

// Substitutes localized images for the odd generators of a polynomial,
// leaving the x's alone. Used for both frame directions.
LocalizedElement substitute_odd(const SuperElement& a,
                                const std::vector<LocalizedElement>& xi_images) {
  int n = a.n();
  LocalizedElement out = LocalizedElement::from(SuperElement::zero(n));
  for (const auto& [m, c] : a.terms()) {
    Monomial xpart = m;
    xpart.odd = 0;
    LocalizedElement prod = LocalizedElement::from(SuperElement::monomial(xpart, c));
    for (int i : m.odd_indices())
      prod = prod * xi_images[static_cast<std::size_t>(i - 1)];
    out = out + prod;
  }
  return out;
}

std::vector<LocalizedElement> frame_images(int n, int chart, int direction) {
  // direction +1: xi_j -> xi_j + (x_j/x_i) xi_i (expand over the frame);
  // direction -1: xi_j -> xi_j - (x_j/x_i) xi_i (collapse back).
  std::vector<LocalizedElement> images;
  for (int j = 1; j <= n; ++j) {
    LocalizedElement img = LocalizedElement::from(SuperElement::variable_xi(n, j));
    if (j != chart) {
      LocalizedElement corr =
          chart_coordinate(n, chart, j) *
          LocalizedElement::from(SuperElement::variable_xi(n, chart));
      img = direction > 0 ? img + corr : img - corr;
    }
    images.push_back(std::move(img));
  }
  return images;
}

bool check_chart(int n, int chart) { return chart >= 1 && chart <= n; }

}  // namespace

LocalizedElement frame_expand(const LocalizedElement& u, int chart) {
  if (!check_chart(u.n(), chart)) throw std::invalid_argument("chart index out of range");
  LocalizedElement num = substitute_odd(u.num(), frame_images(u.n(), chart, +1));
  return LocalizedElement(num.num(), num.den() * u.den());
}

LocalizedElement frame_collapse(const LocalizedElement& e, int chart) {
  if (!check_chart(e.n(), chart)) throw std::invalid_argument("chart index out of range");
  LocalizedElement num = substitute_odd(e.num(), frame_images(e.n(), chart, -1));
  return LocalizedElement(num.num(), num.den() * e.den());
}

bool chart_denominator_ok(const LocalizedElement& u, int chart) {
  if (u.den().term_count() != 1) return false;
  const Monomial& m = u.den().terms().begin()->first;
  for (int i = 1; i <= u.n(); ++i)
    if (i != chart && m.even[static_cast<std::size_t>(i - 1)] != 0) return false;
  return true;
}

namespace {

// Slot `chart` of a frame expansion must never occur for elements of
// Lambda(E) over the chart.
bool slot_free(const LocalizedElement& e, int chart) {
  std::uint32_t bit = 1u << (chart - 1);
  for (const auto& [m, c] : e.num().terms())
    if (m.odd & bit) return false;
  return true;
}

LocalizedElement frame_slot(int n, int j) {
  return LocalizedElement::from(SuperElement::variable_xi(n, j));
}

}  // namespace

GammaPair gamma_pair(const SuperDerivation& gamma, int chart) {
  int n = gamma.n();
  if (!check_chart(n, chart)) throw std::invalid_argument("chart index out of range");
  auto degree = gamma.z_degree();
  if (!degree) throw std::invalid_argument("gamma pair requires a homogeneous derivation");

  GammaPair pair;
  pair.n = n;
  pair.chart = chart;
  pair.degree = *degree;

  for (int j = 1; j <= n; ++j) {
    if (j == chart) continue;
    LocalizedElement g1 = apply_localized(gamma, chart_coordinate(n, chart, j));
    if (!chart_denominator_ok(g1, chart))
      throw std::domain_error("gamma does not preserve the chart algebra (gamma1)");
    LocalizedElement g1f = frame_expand(g1, chart);
    if (!slot_free(g1f, chart))
      throw std::domain_error(
          "gamma does not preserve Lambda(E) on chart functions: gamma(x" +
          std::to_string(j) + "/x" + std::to_string(chart) + ") = " + g1.to_text());
    pair.gamma1.emplace(j, std::move(g1f));

    LocalizedElement g0 = apply_localized(gamma, frame_section(n, chart, j));
    if (!chart_denominator_ok(g0, chart))
      throw std::domain_error("gamma does not preserve the chart algebra (gamma0)");
    LocalizedElement g0f = frame_expand(g0, chart);
    if (!slot_free(g0f, chart))
      throw std::domain_error(
          "gamma does not preserve Lambda(E) on the frame: gamma(eta_" +
          std::to_string(j) + ") = " + g0.to_text());
    pair.gamma0.emplace(j, std::move(g0f));
  }

  // Leibniz conditions of the pair decomposition, on the chart generators.
  for (int j = 1; j <= n; ++j) {
    if (j == chart) continue;
    const LocalizedElement phi = chart_coordinate(n, chart, j);
    for (int l = 1; l <= n; ++l) {
      if (l == chart) continue;
      LocalizedElement lhs = frame_expand(
          apply_localized(gamma, phi * frame_section(n, chart, l)), chart);
      LocalizedElement rhs =
          pair.gamma1.at(j) * frame_slot(n, l) + phi * pair.gamma0.at(l);
      if (!(lhs == rhs))
        throw std::domain_error("gamma pair violates gamma0(phi s) = gamma1(phi) s + phi gamma0(s)");
      LocalizedElement psi = chart_coordinate(n, chart, l);
      LocalizedElement lhs2 = frame_expand(apply_localized(gamma, phi * psi), chart);
      LocalizedElement rhs2 = pair.gamma1.at(j) * psi + phi * pair.gamma1.at(l);
      if (!(lhs2 == rhs2))
        throw std::domain_error("gamma pair violates the Leibniz rule for gamma1");
    }
  }
  return pair;
}

Report verify_w_action(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("verify waction supports 2 <= n <= 5");
  Report rep;
  rep.title = "W_n action on the split supermanifold over P(V)";
  rep.n = n;

  std::vector<WField> basis;
  for (int k = -1; k <= n - 1; ++k) {
    auto layer = w_basis(n, k);
    basis.insert(basis.end(), layer.fields.begin(), layer.fields.end());
    rep.layers.push_back(LayerRow{k, layer.dim(), std::nullopt, std::nullopt});
  }
  std::vector<SuperDerivation> extensions;
  for (const auto& f : basis) extensions.push_back(extend(f));

  // Hypothesis of the stalk-preservation lemma: every x-image is x-linear.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (int i = 1; i <= n; ++i) {
        const SuperElement& img = extensions[t].image_x(i);
        for (const auto& [m, c] : img.terms())
          if (m.x_degree() != 1) {
            ok = false;
            witness = extensions[t].to_text();
          }
      }
    rep.check("x-images are linear in the x's (stalk lemma hypothesis)", ok, witness);
  }

  // Chart preservation via the quotient rule, plus the product rule on
  // localized generators.
  {
    bool ok = true;
    std::string witness;
    for (int chart = 1; chart <= n && ok; ++chart) {
      LocalizedElement xc = LocalizedElement::from(SuperElement::variable_x(n, chart));
      for (std::size_t t = 0; t < basis.size() && ok; ++t) {
        const SuperDerivation& gamma = extensions[t];
        for (int j = 1; j <= n; ++j) {
          if (j == chart) continue;
          LocalizedElement phi = chart_coordinate(n, chart, j);
          LocalizedElement gphi = apply_localized(gamma, phi);
          if (!chart_denominator_ok(gphi, chart)) {
            ok = false;
            witness = "denominator escapes chart " + std::to_string(chart);
            break;
          }
          // gamma(x_j) = gamma(phi) x_chart + phi gamma(x_chart): the
          // quotient rule is consistent with the polynomial action.
          LocalizedElement lhs = LocalizedElement::from(apply(gamma, SuperElement::variable_x(n, j)));
          LocalizedElement rhs = gphi * xc + phi * LocalizedElement::from(
                                                       apply(gamma, SuperElement::variable_x(n, chart)));
          if (!(lhs == rhs)) {
            ok = false;
            witness = "quotient rule fails for " + basis[t].to_text();
            break;
          }
        }
      }
    }
    rep.check("chart algebras preserved; quotient-rule identity holds", ok, witness);
  }

  // ker d preservation on the frame sections, and gamma pairs exist (images
  // land in Lambda(E) over every chart).
  {
    bool ok = true;
    std::string witness;
    for (int chart = 1; chart <= n && ok; ++chart)
      for (std::size_t t = 0; t < basis.size() && ok; ++t) {
        for (const auto& fs : frame_sections(n, chart)) {
          LocalizedElement img = apply_localized(extensions[t], fs.value);
          if (!d_localized(img).is_zero()) {
            ok = false;
            witness = basis[t].to_text() + " breaks ker d on chart " +
                      std::to_string(chart);
            break;
          }
        }
        if (!ok) break;
        try {
          gamma_pair(extensions[t], chart);
        } catch (const std::domain_error& e) {
          ok = false;
          witness = e.what();
        }
      }
    rep.check("ker d preserved; gamma pairs exist on every chart", ok, witness);
  }

  // Bracket preservation chart by chart: the chart action of [a, b] equals
  // the supercommutator of the chart actions on every generator.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < basis.size() && ok; ++i)
      for (std::size_t j = i; j < basis.size() && ok; ++j) {
        SuperDerivation br = bracket(extensions[i], extensions[j]);
        int sign =
            (extensions[i].parity().value() * extensions[j].parity().value()) % 2
                ? -1
                : 1;
        for (int chart = 1; chart <= n && ok; ++chart) {
          std::vector<LocalizedElement> gens;
          for (int l = 1; l <= n; ++l)
            if (l != chart) gens.push_back(chart_coordinate(n, chart, l));
          for (const auto& fs : frame_sections(n, chart)) gens.push_back(fs.value);
          for (const auto& u : gens) {
            LocalizedElement lhs = apply_localized(br, u);
            LocalizedElement rhs =
                apply_localized(extensions[i], apply_localized(extensions[j], u)) -
                Rational(sign) * apply_localized(extensions[j],
                                                 apply_localized(extensions[i], u));
            if (!(lhs == rhs)) {
              ok = false;
              witness = "pair (" + basis[i].to_text() + ", " + basis[j].to_text() +
                        ") chart " + std::to_string(chart);
              break;
            }
          }
        }
      }
    rep.check("bracket preserved by the chart actions (all basis pairs)", ok, witness);
  }

  // Injectivity: the linear map delta -> (chart images of all generators) has
  // full rank. Every image on a generator clears with x_chart^2, so the
  // cleared numerators give coordinates on a common monomial frame.
  {
    std::vector<std::vector<SuperElement>> cleared(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (int chart = 1; chart <= n; ++chart) {
        std::vector<LocalizedElement> gens;
        for (int l = 1; l <= n; ++l)
          if (l != chart) gens.push_back(chart_coordinate(n, chart, l));
        for (const auto& fs : frame_sections(n, chart)) gens.push_back(fs.value);
        for (const auto& u : gens) {
          LocalizedElement img = apply_localized(extensions[t], u);
          LocalizedElement scaled = LocalizedElement::from(SuperElement::monomial(
                                        Monomial::x(n, chart, 2))) *
                                    img;
          if (!(scaled.den() == SuperElement::one(n)))
            throw std::runtime_error("chart image denominator exceeds x_chart^2");
          cleared[t].push_back(scaled.num());
        }
      }
    int per = static_cast<int>(cleared.front().size());
    std::vector<SuperElement> flat;
    for (auto& v : cleared) for (auto& e : v) flat.push_back(std::move(e));
    // One big coefficient matrix: rows = monomial slots per image position.
    // Build blockwise: position-major so all basis elements share columns.
    std::vector<std::vector<Rational>> cols(basis.size());
    for (int pos = 0; pos < per; ++pos) {
      std::vector<SuperElement> block;
      for (std::size_t t = 0; t < basis.size(); ++t)
        block.push_back(flat[t * static_cast<std::size_t>(per) +
                             static_cast<std::size_t>(pos)]);
      auto [monos, mat] = vectorize(block);
      for (std::size_t t = 0; t < basis.size(); ++t)
        for (int r = 0; r < mat.rows(); ++r)
          cols[t].push_back(mat.at(r, static_cast<int>(t)));
    }
    ExactMatrix m = ExactMatrix::from_rows(cols).transposed();
    bool ok = m.rank() == static_cast<int>(basis.size());
    rep.check("injectivity: chart actions have full rank " +
                  std::to_string(basis.size()),
              ok);
  }

  return rep;
}

}  // namespace superpoint
