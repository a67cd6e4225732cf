// Command-line front end: deterministic tables and verification reports for
// the algebras W_n, H(omega), DH(omega) and the supermanifold actions.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superpoint/chart.hpp"
#include "superpoint/derivation.hpp"
#include "superpoint/json_io.hpp"
#include "superpoint/localized.hpp"
#include "superpoint/quotient.hpp"
#include "superpoint/report.hpp"
#include "superpoint/vectorial.hpp"

namespace {

using namespace superpoint;

struct Options {
  int n = 0;
  std::optional<int> k;
  std::string omega = "standard";
  std::string format = "text";
  std::string algebra = "w";
  std::uint64_t seed = 0;
  int samples = 20;
  std::string out;
  std::string which;
  std::string lhs, rhs, operand;
};

QuadraticForm load_omega(const Options& opt) {
  if (opt.omega == "standard") return QuadraticForm::standard(opt.n);
  std::ifstream in(opt.omega);
  if (!in) throw std::invalid_argument("cannot open omega file '" + opt.omega + "'");
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("omega file must start with n");
  if (n != opt.n)
    throw std::invalid_argument("omega file dimension " + std::to_string(n) +
                                " does not match --n " + std::to_string(opt.n));
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("omega file is truncated");
      m.at(i, j) = parse_rational(tok);
    }
  return QuadraticForm(std::move(m));
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
  out << text;
}

std::string render(const Options& opt, const Report& rep) {
  if (opt.format == "json") return rep.to_json().dump(2) + "\n";
  return rep.to_text();
}

void require_kernel_guard(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("kernel computations support 1 <= n <= 8");
}

int cmd_dims(const Options& opt) {
  if (opt.n < 1 || opt.n > 12)
    throw std::invalid_argument("dims supports 1 <= n <= 12");
  Report rep;
  rep.title = "graded dimensions";
  rep.n = opt.n;
  bool kernels = opt.n <= 8;
  std::optional<QuadraticForm> omega;
  if (kernels) {
    omega = load_omega(opt);
    rep.omega = omega->to_text();
  } else {
    rep.notes.push_back("dimH/dimDH need kernel solves and are limited to n <= 8");
  }
  for (int k = -1; k <= opt.n - 1; ++k) {
    LayerRow row;
    row.k = k;
    row.dim_w = w_basis(opt.n, k).dim();
    if (kernels) {
      row.dim_h = h_basis(opt.n, *omega, k).dim();
      row.dim_dh = dh_basis(opt.n, *omega, k).dim();
    }
    rep.layers.push_back(row);
  }
  emit(opt, render(opt, rep));
  return 0;
}

int cmd_basis(const Options& opt) {
  require_kernel_guard(opt.n);
  QuadraticForm omega = load_omega(opt);
  int klo = opt.k.value_or(-1), khi = opt.k.value_or(opt.n - 1);
  auto layer_fields = [&](int k) {
    if (opt.algebra == "w") return w_basis(opt.n, k);
    if (opt.algebra == "h") return h_basis(opt.n, omega, k);
    if (opt.algebra == "dh") return dh_basis(opt.n, omega, k);
    throw std::invalid_argument("--algebra must be one of w, h, dh");
  };
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = opt.n;
    j["omega"] = omega.to_text();
    j["algebra"] = opt.algebra;
    j["layers"] = nlohmann::ordered_json::array();
    for (int k = klo; k <= khi; ++k) {
      auto space = layer_fields(k);
      nlohmann::ordered_json layer;
      layer["k"] = k;
      layer["dim"] = space.dim();
      layer["fields"] = nlohmann::ordered_json::array();
      for (const auto& f : space.fields) layer["fields"].push_back(f.to_text());
      j["layers"].push_back(std::move(layer));
    }
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (int k = klo; k <= khi; ++k) {
      auto space = layer_fields(k);
      os << "k = " << k << "  (dim " << space.dim() << ")\n";
      for (const auto& f : space.fields) os << "  " << f.to_text() << "\n";
    }
    emit(opt, os.str());
  }
  return 0;
}

int cmd_bracket(const Options& opt) {
  require_kernel_guard(opt.n);
  SuperDerivation lhs = parse_derivation(opt.n, opt.lhs);
  SuperDerivation rhs = parse_derivation(opt.n, opt.rhs);
  if (!lhs.parity() || !rhs.parity())
    throw std::invalid_argument(
        "bracket needs definite-parity operands (split mixed-parity input by hand)");
  SuperDerivation result = bracket(lhs, rhs);
  if (opt.format == "json")
    emit(opt, derivation_to_json(result).dump(2) + "\n");
  else
    emit(opt, result.to_text() + "\n");
  return 0;
}

int cmd_extend(const Options& opt) {
  require_kernel_guard(opt.n);
  SuperDerivation parsed = parse_derivation(opt.n, opt.operand);
  WField field = as_w_field(parsed);
  if (!field.z_degree())
    throw std::invalid_argument(
        "extend needs a homogeneous field; split the input by degree");
  SuperDerivation result = extend(field);
  if (opt.format == "json")
    emit(opt, derivation_to_json(result).dump(2) + "\n");
  else
    emit(opt, result.to_text() + "\n");
  return 0;
}

int cmd_defect(const Options& opt) {
  require_kernel_guard(opt.n);
  QuadraticForm omega = load_omega(opt);
  WField field = as_w_field(parse_derivation(opt.n, opt.operand));
  if (!field.z_degree())
    throw std::invalid_argument("defect needs a homogeneous field");
  SuperElement result = hamiltonian_defect(field, omega);
  if (opt.format == "json")
    emit(opt, element_to_json(result).dump(2) + "\n");
  else
    emit(opt, result.to_text() + "\n");
  return 0;
}

int cmd_quotient(const Options& opt) {
  require_kernel_guard(opt.n);
  QuotientRing ring(load_omega(opt));
  SuperElement value = parse_element(opt.n, opt.operand);
  SuperElement reduced = ring.reduce(value);
  if (opt.format == "json")
    emit(opt, element_to_json(reduced).dump(2) + "\n");
  else
    emit(opt, reduced.to_text() + "\n");
  return 0;
}

int cmd_verify(const Options& opt) {
  Report rep;
  if (opt.which == "lemma11") {
    require_kernel_guard(opt.n);
    rep = verify_lemma_1_1(opt.n, load_omega(opt));
  } else if (opt.which == "lemma21") {
    rep = verify_lemma_2_1(opt.n, opt.samples, 50, opt.seed);
  } else if (opt.which == "waction") {
    rep = verify_w_action(opt.n);
  } else if (opt.which == "dhaction") {
    rep = verify_dh_action(opt.n, opt.seed);
  } else if (opt.which == "jacobi") {
    require_kernel_guard(opt.n);
    std::vector<WField> basis;
    for (int k = -1; k <= opt.n - 1; ++k) {
      auto layer = w_basis(opt.n, k);
      basis.insert(basis.end(), layer.fields.begin(), layer.fields.end());
    }
    rep.title = "graded Jacobi identity on W_n";
    rep.n = opt.n;
    rep.seed = opt.seed;
    std::vector<std::array<int, 3>> triples;
    if (opt.n <= 3) {
      triples = all_triples(static_cast<int>(basis.size()));
      rep.notes.push_back("exhaustive over all basis triples");
    } else {
      Rng rng(opt.seed);
      triples = random_triples(static_cast<int>(basis.size()), opt.samples, rng);
      rep.samples = opt.samples;
      rep.notes.push_back("seeded random triples");
    }
    auto jrep = jacobi_check(basis, triples);
    std::ostringstream os;
    os << jrep.checked << " triples";
    rep.check("graded Jacobi identity", jrep.passed(), os.str());
  } else {
    throw std::invalid_argument("unknown verification '" + opt.which +
                                "' (expected lemma11, lemma21, waction, dhaction, jacobi)");
  }
  emit(opt, render(opt, rep));
  return rep.passed() ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt, bool with_omega = true) {
  cmd->add_option("--n", opt.n, "ambient dimension")->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
  if (with_omega)
    cmd->add_option("--omega", opt.omega,
                    "quadratic form: 'standard' or a file (n then n*n rationals)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vector-field algebras on the superpoint and their supermanifold actions"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* dims = app.add_subcommand("dims", "per-degree dimension table of W, H, DH");
  add_common(dims, opt);

  CLI::App* basis = app.add_subcommand("basis", "graded basis of W, H(omega) or DH(omega)");
  add_common(basis, opt);
  basis->add_option("--k", opt.k, "restrict to one degree");
  basis->add_option("--algebra", opt.algebra, "w, h or dh")
      ->check(CLI::IsMember({"w", "h", "dh"}));

  CLI::App* br = app.add_subcommand("bracket", "superbracket of two derivations");
  add_common(br, opt, false);
  br->add_option("lhs", opt.lhs, "left operand (e.g. \"dxi1\")")->required();
  br->add_option("rhs", opt.rhs, "right operand (e.g. \"xi1·dxi1\")")->required();

  CLI::App* ext = app.add_subcommand("extend", "Serre extension of a W-field to A");
  add_common(ext, opt, false);
  ext->add_option("field", opt.operand, "W-field in text form")->required();

  CLI::App* def = app.add_subcommand("defect", "delta~(omega) for a W-field");
  add_common(def, opt);
  def->add_option("field", opt.operand, "W-field in text form")->required();

  CLI::App* quo = app.add_subcommand("quotient", "normal form in A' = A/omega A");
  add_common(quo, opt);
  quo->add_option("element", opt.operand, "element in text form")->required();

  CLI::App* ver = app.add_subcommand("verify", "run a named verification");
  add_common(ver, opt);
  ver->add_option("which", opt.which, "lemma11 | lemma21 | waction | dhaction | jacobi")
      ->required();
  ver->add_option("--seed", opt.seed, "seed for randomized checks");
  ver->add_option("--samples", opt.samples, "sample points / random triples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dims->parsed()) return cmd_dims(opt);
    if (basis->parsed()) return cmd_basis(opt);
    if (br->parsed()) return cmd_bracket(opt);
    if (ext->parsed()) return cmd_extend(opt);
    if (def->parsed()) return cmd_defect(opt);
    if (quo->parsed()) return cmd_quotient(opt);
    if (ver->parsed()) return cmd_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.position << ": " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
