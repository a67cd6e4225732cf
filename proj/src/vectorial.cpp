#include "superpoint/vectorial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superpoint {

namespace {

int mod2(int k) { return ((k % 2) + 2) % 2; }

void require_layer_range(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

Monomial lambda_monomial(int n, std::uint32_t mask) {
  Monomial m = Monomial::one(n);
  m.odd = mask;
  return m;
}

}  // namespace

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::vector<std::uint32_t> lambda_masks(int n, int degree) {
  std::vector<std::uint32_t> out;
  if (degree < 0 || degree > n) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == degree) out.push_back(mask);
  std::sort(out.begin(), out.end(), [n](std::uint32_t a, std::uint32_t b) {
    return lambda_monomial(n, a) < lambda_monomial(n, b);
  });
  return out;
}

GradedSubspace w_basis(int n, int k) {
  require_layer_range(n);
  GradedSubspace space{n, k, Provenance::WLayer, {}};
  if (k < -1 || k > n - 1) return space;
  for (std::uint32_t mask : lambda_masks(n, k + 1))
    for (int i = 1; i <= n; ++i)
      space.fields.push_back(WField::basis_field(n, mask, i));
  return space;
}

std::vector<Rational> w_layer_coordinates(const WField& f, int k) {
  int n = f.n();
  if (!f.is_zero() && f.z_degree() != std::optional<int>(k))
    throw std::invalid_argument("field is not homogeneous of the requested degree");
  std::vector<Rational> coords;
  for (std::uint32_t mask : lambda_masks(n, k + 1)) {
    Monomial m = lambda_monomial(n, mask);
    for (int i = 1; i <= n; ++i) coords.push_back(f.image(i).coefficient(m));
  }
  return coords;
}

WField w_layer_from_coordinates(int n, int k, const std::vector<Rational>& coords) {
  auto masks = lambda_masks(n, k + 1);
  if (coords.size() != masks.size() * static_cast<std::size_t>(n))
    throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<SuperElement> images(static_cast<std::size_t>(n), SuperElement::zero(n));
  std::size_t idx = 0;
  for (std::uint32_t mask : masks)
    for (int i = 1; i <= n; ++i) {
      const Rational& c = coords[idx++];
      if (c != 0)
        images[static_cast<std::size_t>(i - 1)] +=
            SuperElement::monomial(lambda_monomial(n, mask), c);
    }
  return WField(n, std::move(images));
}

std::vector<Rational> w_full_coordinates(const WField& f) {
  int n = f.n();
  std::vector<Rational> coords;
  for (int k = -1; k <= n - 1; ++k) {
    auto layer = w_layer_coordinates(f.homogeneous_component(k), k);
    coords.insert(coords.end(), layer.begin(), layer.end());
  }
  return coords;
}

SuperElement hamiltonian_defect(const WField& delta, const QuadraticForm& omega) {
  if (delta.n() != omega.n()) throw std::invalid_argument("ambient dimension mismatch");
  return apply(extend(delta), omega.as_element());
}

std::pair<std::vector<Monomial>, ExactMatrix> vectorize(
    const std::vector<SuperElement>& elems) {
  std::set<Monomial> monos;
  for (const auto& e : elems)
    for (const auto& [m, c] : e.terms()) monos.insert(m);
  std::vector<Monomial> rows(monos.begin(), monos.end());
  ExactMatrix mat(static_cast<int>(rows.size()), static_cast<int>(elems.size()));
  for (int j = 0; j < static_cast<int>(elems.size()); ++j)
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      Rational c = elems[static_cast<std::size_t>(j)].coefficient(
          rows[static_cast<std::size_t>(i)]);
      if (c != 0) mat.at(i, j) = std::move(c);
    }
  return {std::move(rows), std::move(mat)};
}

namespace {

void verify_independent(const GradedSubspace& space) {
  if (space.fields.empty()) return;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : space.fields) rows.push_back(w_layer_coordinates(f, space.k));
  ExactMatrix m = ExactMatrix::from_rows(rows);
  if (m.rank() != space.dim())
    throw std::runtime_error("graded subspace basis is not linearly independent");
}

}  // namespace

GradedSubspace h_basis(int n, const QuadraticForm& omega, int k) {
  GradedSubspace w = w_basis(n, k);
  GradedSubspace space{n, k, Provenance::HKernel, {}};
  if (w.fields.empty()) return space;
  std::vector<SuperElement> defects;
  for (const auto& f : w.fields) defects.push_back(hamiltonian_defect(f, omega));
  auto [rows, mat] = vectorize(defects);
  for (const auto& coords : mat.nullspace())
    space.fields.push_back(w_layer_from_coordinates(n, k, coords));
  verify_independent(space);
  return space;
}

DHLayer dh_layer(int n, const QuadraticForm& omega, int k) {
  GradedSubspace w = w_basis(n, k);
  DHLayer out{GradedSubspace{n, k, Provenance::DHKernel, {}}, {}};
  if (w.fields.empty()) return out;
  SuperElement omega_elt = omega.as_element();

  // Columns: defect(basis field) for the W-layer, then -xi_T * omega for phi
  // running over all of Lambda.
  std::vector<SuperElement> cols;
  for (const auto& f : w.fields) cols.push_back(hamiltonian_defect(f, omega));
  std::vector<std::uint32_t> phi_masks;
  for (int d = 0; d <= n; ++d)
    for (std::uint32_t mask : lambda_masks(n, d)) phi_masks.push_back(mask);
  for (std::uint32_t mask : phi_masks)
    cols.push_back(Rational(-1) *
                   (SuperElement::monomial(lambda_monomial(n, mask)) * omega_elt));

  auto [rows, mat] = vectorize(cols);
  std::size_t nw = w.fields.size();
  for (const auto& v : mat.nullspace()) {
    std::vector<Rational> delta_coords(v.begin(), v.begin() + static_cast<long>(nw));
    WField delta = w_layer_from_coordinates(n, k, delta_coords);
    SuperElement phi = SuperElement::zero(n);
    for (std::size_t t = 0; t < phi_masks.size(); ++t) {
      const Rational& c = v[nw + t];
      if (c != 0) phi += SuperElement::monomial(lambda_monomial(n, phi_masks[t]), c);
    }
    if (delta.is_zero())
      throw std::runtime_error("dh solve produced a solution with zero field part");
    if (!(hamiltonian_defect(delta, omega) == phi * omega_elt))
      throw std::runtime_error("dh solve produced an invalid (delta, phi) pair");
    out.space.fields.push_back(std::move(delta));
    out.phis.push_back(std::move(phi));
  }
  verify_independent(out.space);
  return out;
}

GradedSubspace dh_basis(int n, const QuadraticForm& omega, int k) {
  return dh_layer(n, omega, k).space;
}

int dh_dim_scalar_phi(int n, const QuadraticForm& omega, int k) {
  GradedSubspace w = w_basis(n, k);
  if (w.fields.empty()) return 0;
  std::vector<SuperElement> cols;
  for (const auto& f : w.fields) cols.push_back(hamiltonian_defect(f, omega));
  cols.push_back(Rational(-1) * omega.as_element());
  auto [rows, mat] = vectorize(cols);
  return static_cast<int>(mat.nullspace().size());
}

Report verify_lemma_1_1(int n, const QuadraticForm& omega) {
  if (n < 1 || n > 8) throw std::invalid_argument("verify lemma11 supports 1 <= n <= 8");
  Report rep;
  rep.title = "Lemma 1.1: DH(omega) = H(omega) + Q*E";
  rep.n = n;
  rep.omega = omega.to_text();
  SuperElement omega_elt = omega.as_element();

  std::vector<GradedSubspace> h_layers;
  std::vector<DHLayer> dh_layers;
  for (int k = -1; k <= n - 1; ++k) {
    h_layers.push_back(h_basis(n, omega, k));
    dh_layers.push_back(dh_layer(n, omega, k));
    rep.layers.push_back(LayerRow{k, w_basis(n, k).dim(), h_layers.back().dim(),
                                  dh_layers.back().space.dim()});
  }

  // (a) every solution of delta~(omega) = phi omega has scalar phi
  {
    bool ok = true;
    std::string witness;
    for (const auto& layer : dh_layers)
      for (const auto& phi : layer.phis)
        if (!(phi == phi.xi_degree_component(0))) {
          ok = false;
          witness = "phi = " + phi.to_text();
        }
    rep.check("phi is scalar for every (delta, phi) solution", ok, witness);
  }

  // (b) graded dimension count dim DH_k = dim H_k + [k = 0]
  {
    bool ok = true;
    std::string detail;
    for (std::size_t t = 0; t < h_layers.size(); ++t) {
      int k = h_layers[t].k;
      int expected = h_layers[t].dim() + (k == 0 ? 1 : 0);
      if (dh_layers[t].space.dim() != expected) {
        ok = false;
        detail += "k=" + std::to_string(k) + " ";
      }
    }
    rep.check("dim DH_k = dim H_k + [k=0]", ok, detail);
  }

  // Euler field: E(omega) = 2 omega, so E lies in DH_0 but not in H_0
  {
    SuperElement defect = hamiltonian_defect(euler(n), omega);
    rep.check("Euler field satisfies E(omega) = 2*omega",
              defect == Rational(2) * omega_elt, defect.to_text());
  }

  // DH_0 = H_0 (+) Q*E as vector spaces
  {
    const GradedSubspace& h0 = h_layers[static_cast<std::size_t>(1)];
    const GradedSubspace& dh0 = dh_layers[static_cast<std::size_t>(1)].space;
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : h0.fields) rows.push_back(w_layer_coordinates(f, 0));
    rows.push_back(w_layer_coordinates(euler(n), 0));
    ExactMatrix he = ExactMatrix::from_rows(rows).transposed();
    BareissEchelon ech(he);
    bool ok = ech.rank() == h0.dim() + 1 && dh0.dim() == h0.dim() + 1;
    if (ok)
      for (const auto& f : dh0.fields)
        if (!ech.solve(w_layer_coordinates(f, 0))) {
          ok = false;
          break;
        }
    rep.check("DH_0 = H_0 (+) Q*E", ok);
  }

  // [E, H] in H: the ideal property restricted to the Euler complement
  {
    bool ok = true;
    std::string witness;
    WField e = euler(n);
    for (const auto& hk : h_layers) {
      if (hk.fields.empty()) continue;
      std::vector<std::vector<Rational>> rows;
      for (const auto& f : hk.fields) rows.push_back(w_layer_coordinates(f, hk.k));
      BareissEchelon ech(ExactMatrix::from_rows(rows).transposed());
      for (const auto& f : hk.fields) {
        WField br = bracket(e, f);
        if (!ech.solve(w_layer_coordinates(br, hk.k))) {
          ok = false;
          witness = "[E, " + f.to_text() + "] leaves H";
        }
      }
    }
    rep.check("[E, h] lies in H(omega) for every basis h", ok, witness);
  }

  // decomposition delta = delta_0 + (c/2) E with delta_0 in H(omega)
  {
    bool ok = true;
    std::string witness;
    for (std::size_t t = 0; t < dh_layers.size() && ok; ++t) {
      const auto& layer = dh_layers[t];
      const GradedSubspace& hk = h_layers[t];
      std::vector<std::vector<Rational>> rows;
      for (const auto& f : hk.fields) rows.push_back(w_layer_coordinates(f, hk.k));
      std::optional<BareissEchelon> ech;
      if (!rows.empty()) ech.emplace(ExactMatrix::from_rows(rows).transposed());
      for (std::size_t s = 0; s < layer.space.fields.size() && ok; ++s) {
        const WField& delta = layer.space.fields[s];
        const SuperElement& phi = layer.phis[s];
        SuperElement c_part = phi.xi_degree_component(0);
        Rational c = c_part.coefficient(Monomial::one(n));
        WField delta0 = delta;
        if (c != 0) delta0 = delta - (c / 2) * euler(n);
        if (!(hamiltonian_defect(delta0, omega) == SuperElement::zero(n))) {
          ok = false;
          witness = "delta_0 has nonzero defect for " + delta.to_text();
          break;
        }
        bool in_h = delta0.is_zero() ||
                    (ech && ech->solve(w_layer_coordinates(delta0, layer.space.k))
                                .has_value());
        if (!in_h) {
          ok = false;
          witness = "delta_0 outside H for " + delta.to_text();
        }
      }
    }
    rep.check("every DH element decomposes as delta_0 + (c/2) E", ok, witness);
  }

  // Lemma 1.1(1) cross-check: constraining phi to scalars does not change the
  // solution space dimension.
  {
    bool ok = true;
    std::string detail;
    for (int k = -1; k <= n - 1; ++k) {
      int unconstrained = dh_layers[static_cast<std::size_t>(k + 1)].space.dim();
      int scalar = dh_dim_scalar_phi(n, omega, k);
      if (unconstrained != scalar) {
        ok = false;
        detail += "k=" + std::to_string(k) + " ";
      }
    }
    rep.check("phi unconstrained and phi scalar give equal solution spaces", ok, detail);
  }

  return rep;
}

StructureConstants structure_constants(const std::vector<WField>& basis) {
  StructureConstants out;
  if (basis.empty()) return out;
  int n = basis.front().n();
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : basis) {
    if (f.n() != n) throw std::invalid_argument("ambient dimension mismatch");
    rows.push_back(w_full_coordinates(f));
  }
  ExactMatrix bmat = ExactMatrix::from_rows(rows).transposed();
  BareissEchelon ech(bmat);
  if (ech.rank() != static_cast<int>(basis.size()))
    throw std::invalid_argument("structure constants need a linearly independent basis");
  out.coefficients.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.coefficients[i].resize(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      WField br = bracket(basis[i], basis[j]);
      auto sol = ech.solve(w_full_coordinates(br));
      if (!sol) {
        out.closed = false;
        out.failures.emplace_back(static_cast<int>(i), static_cast<int>(j));
      } else {
        out.coefficients[i][j] = std::move(*sol);
      }
    }
  }
  return out;
}

JacobiReport jacobi_check(const std::vector<WField>& basis,
                          const std::vector<std::array<int, 3>>& triples) {
  JacobiReport rep;
  for (const auto& [ia, ib, ic] : triples) {
    const WField& a = basis[static_cast<std::size_t>(ia)];
    const WField& b = basis[static_cast<std::size_t>(ib)];
    const WField& c = basis[static_cast<std::size_t>(ic)];
    int pa = a.parity().value(), pb = b.parity().value(), pc = c.parity().value();
    WField j1 = bracket(a, bracket(b, c));
    WField j2 = bracket(b, bracket(c, a));
    WField j3 = bracket(c, bracket(a, b));
    WField total = Rational((pa * pc) % 2 ? -1 : 1) * j1 +
                   Rational((pb * pa) % 2 ? -1 : 1) * j2 +
                   Rational((pc * pb) % 2 ? -1 : 1) * j3;
    ++rep.checked;
    if (!total.is_zero()) rep.failures.push_back({ia, ib, ic});
  }
  return rep;
}

std::vector<std::array<int, 3>> all_triples(int size) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
              static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<std::array<int, 3>> random_triples(int size, int count, Rng& rng) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t)
    out.push_back({rng.uniform(0, size - 1), rng.uniform(0, size - 1),
                   rng.uniform(0, size - 1)});
  return out;
}

SuperElement transform_element(const ExactMatrix& g, const SuperElement& a) {
  int n = a.n();
  if (g.rows() != n || g.cols() != n)
    throw std::invalid_argument("change-of-basis matrix has wrong shape");
  std::vector<SuperElement> ximg, xiimg;
  for (int i = 1; i <= n; ++i) {
    SuperElement ex = SuperElement::zero(n), exi = SuperElement::zero(n);
    for (int j = 1; j <= n; ++j) {
      const Rational& c = g.at(i - 1, j - 1);
      if (c == 0) continue;
      ex += c * SuperElement::variable_x(n, j);
      exi += c * SuperElement::variable_xi(n, j);
    }
    ximg.push_back(std::move(ex));
    xiimg.push_back(std::move(exi));
  }
  return a.substitute(ximg, xiimg);
}

WField transform_field(const ExactMatrix& g, const WField& delta) {
  int n = delta.n();
  ExactMatrix ginv = g.inverse();
  std::vector<SuperElement> images;
  for (int i = 1; i <= n; ++i) {
    SuperElement img = SuperElement::zero(n);
    for (int j = 1; j <= n; ++j) {
      const Rational& c = ginv.at(i - 1, j - 1);
      if (c == 0) continue;
      img += c * transform_element(g, delta.image(j));
    }
    images.push_back(std::move(img));
  }
  return WField(n, std::move(images));
}

namespace {

// Monomial basis of the bidegree slice (p, q).
std::vector<Monomial> bidegree_slice(int n, int p, int q) {
  std::vector<Monomial> out;
  if (p < 0 || q < 0 || q > n) return out;
  // All x-monomials of degree p via stars and bars.
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      exps[static_cast<std::size_t>(pos)] = remaining;
      for (std::uint32_t mask : lambda_masks(n, q)) {
        Monomial m;
        m.even = exps;
        m.odd = mask;
        out.push_back(std::move(m));
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (n > 0) rec(rec, 0, p);
  std::sort(out.begin(), out.end());
  return out;
}

// Matrix of the Koszul differential from slice (p, q) to slice (p+1, q-1).
ExactMatrix koszul_slice_matrix(int n, int p, int q,
                                const std::vector<Monomial>& from,
                                const std::vector<Monomial>& to) {
  SuperDerivation d = koszul_d(n);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < to.size(); ++i) index[to[i]] = static_cast<int>(i);
  ExactMatrix m(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    SuperElement img = apply(d, SuperElement::monomial(from[j]));
    for (const auto& [mono, c] : img.terms()) m.at(index.at(mono), static_cast<int>(j)) = c;
  }
  (void)p;
  (void)q;
  return m;
}

}  // namespace

ExtensionUniqueness::ExtensionUniqueness(int n, int k) : n_(n), k_(k) {
  // Per generator and per bidegree slice (p, q) with p + q = k + 1 the
  // constraint [delta~, d] = 0 reads
  //   u_slice = rhs_slice   (from the xi_i equations)
  //   d(u_slice) = 0        (from the x_i equations)
  // so the system matrix is [I; D_slice], stacked. The same matrix serves
  // every generator, so the total freedom is n times the per-generator sum.
  int freedom_per_generator = 0;
  for (int q = 0; q <= std::min(n, k + 1); ++q) {
    int p = k + 1 - q;
    if (p < 0) continue;
    auto from = bidegree_slice(n, p, q);
    if (from.empty()) continue;
    auto to = bidegree_slice(n, p + 1, q - 1);
    ExactMatrix dmat = koszul_slice_matrix(n, p, q, from, to);
    int cols = static_cast<int>(from.size());
    ExactMatrix stacked(cols + dmat.rows(), cols);
    for (int i = 0; i < cols; ++i) stacked.at(i, i) = 1;
    for (int i = 0; i < dmat.rows(); ++i)
      for (int j = 0; j < cols; ++j) stacked.at(cols + i, j) = dmat.at(i, j);
    BareissEchelon ech(stacked);
    freedom_per_generator += cols - ech.rank();
    slices_.push_back(Slice{std::move(from), std::move(ech), cols + dmat.rows()});
  }
  freedom_ = n * freedom_per_generator;
}

bool ExtensionUniqueness::matches(const WField& delta) const {
  if (delta.n() != n_) throw std::invalid_argument("ambient dimension mismatch");
  if (!delta.is_zero() && delta.z_degree() != std::optional<int>(k_))
    throw std::invalid_argument("field degree does not match the solver");
  SuperDerivation formula = extend(delta);
  SuperDerivation d = koszul_d(n_);
  int sign = mod2(k_) == 0 ? 1 : -1;
  for (int i = 1; i <= n_; ++i) {
    SuperElement rhs_full = Rational(sign) * apply(d, delta.image(i));
    SuperElement solved = SuperElement::zero(n_);
    for (const auto& slice : slices_) {
      int cols = static_cast<int>(slice.monomials.size());
      std::vector<Rational> rhs(static_cast<std::size_t>(slice.rows), Rational(0));
      bool nonzero = false;
      for (int t = 0; t < cols; ++t) {
        rhs[static_cast<std::size_t>(t)] =
            rhs_full.coefficient(slice.monomials[static_cast<std::size_t>(t)]);
        nonzero = nonzero || rhs[static_cast<std::size_t>(t)] != 0;
      }
      // A zero right-hand side has the unique solution zero once freedom()
      // has been checked to vanish; skip the back-substitution.
      if (!nonzero && freedom_ == 0) continue;
      auto sol = slice.system.solve(rhs);
      if (!sol) return false;
      for (int t = 0; t < cols; ++t)
        if ((*sol)[static_cast<std::size_t>(t)] != 0)
          solved += SuperElement::monomial(slice.monomials[static_cast<std::size_t>(t)],
                                           (*sol)[static_cast<std::size_t>(t)]);
    }
    if (!(solved == formula.image_x(i))) return false;
  }
  return true;
}

int extension_freedom(int n, int k) { return ExtensionUniqueness(n, k).freedom(); }

}  // namespace superpoint
