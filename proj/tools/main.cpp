#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/factor_quaternionic.hpp"
#include "kramers/factor_selfdual.hpp"
#include "kramers/generators.hpp"
#include "kramers/jordan.hpp"
#include "kramers/matrix_io.hpp"
#include "kramers/report.hpp"
#include "kramers/structure.hpp"

namespace {

using namespace kramers;

struct Options {
  double tolerance = tol::structural;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "text";
};

CMatrix load_complex(const std::string& path) {
  MatrixFile file = read_matrix_file(path);
  if (file.is_complex()) return file.complex_matrix();
  return chi(file.quaternion_matrix());
}

QuatMatrix load_quaternion(const std::string& path, double tolerance) {
  MatrixFile file = read_matrix_file(path);
  if (!file.is_complex()) return file.quaternion_matrix();
  return chi_inv(file.complex_matrix(), tolerance);
}

void emit(const FactorReport& report, const Options& opt) {
  if (opt.format == "machine")
    std::cout << machine_report(report);
  else
    std::cout << residual_report(report);
}

void save_factor(const Options& opt, const std::string& name, const CMatrix& m) {
  if (opt.out_dir.empty()) return;
  std::filesystem::create_directories(opt.out_dir);
  write_matrix_file((std::filesystem::path(opt.out_dir) / (name + ".mat")).string(), m);
}

int report_exit(const FactorReport& report, const Options& opt) {
  emit(report, opt);
  return report.all_pass() ? 0 : 1;
}

int run_check(const std::string& path, const std::vector<std::string>& expect,
              const Options& opt) {
  CMatrix x = load_complex(path);
  StructureReport sr = classify(x, opt.tolerance);
  emit(verify_structure(sr), opt);
  bool ok = true;
  for (const auto& flag : expect) {
    if (flag == "quaternionic") ok = ok && sr.quaternionic;
    else if (flag == "selfdual") ok = ok && sr.selfdual;
    else if (flag == "symmetric") ok = ok && sr.symmetric;
    else if (flag == "hermitian") ok = ok && sr.hermitian;
    else if (flag == "normal") ok = ok && sr.normal;
    else if (flag == "unitary") ok = ok && sr.unitary;
    else if (flag == "symplectic") ok = ok && sr.symplectic;
    else throw ParseError("expect", "field 'expect': unknown flag '" + flag + "'");
  }
  return ok ? 0 : 1;
}

int run_spectrum(const std::string& path, const Options& opt) {
  QuatMatrix q = load_quaternion(path, opt.tolerance);
  std::vector<Complex> values = right_eigenvalues(q);
  std::cout.precision(17);
  if (opt.format == "machine") {
    for (size_t i = 0; i < values.size(); ++i)
      std::cout << "eigenvalue." << i << "=" << values[i].real() << " "
                << values[i].imag() << "\n";
  } else {
    std::cout << "right eigenvalues (" << values.size() / 2
              << " representatives + conjugates):\n";
    for (const auto& v : values)
      std::cout << "  " << v.real() << (v.imag() < 0 ? " - " : " + ")
                << std::abs(v.imag()) << "i\n";
  }
  return 0;
}

int run_norm(const std::string& path, const Options& opt) {
  QuatMatrix q = load_quaternion(path, opt.tolerance);
  std::cout.precision(17);
  if (opt.format == "machine")
    std::cout << "operator_norm=" << operator_norm(q) << "\n";
  else
    std::cout << "operator norm: " << operator_norm(q) << "\n";
  return 0;
}

int run_schur(const std::vector<std::string>& paths, const Options& opt) {
  std::vector<CMatrix> xs;
  for (const auto& p : paths) xs.push_back(load_complex(p));
  QuatSchurResult result = schur_commuting(xs, opt.seed, opt.tolerance);
  save_factor(opt, "U", result.unitary);
  for (size_t j = 0; j < xs.size(); ++j) {
    save_factor(opt, "T_" + std::to_string(j), result.upper[j]);
    save_factor(opt, "S_" + std::to_string(j), result.strict[j]);
  }
  return report_exit(verify_schur(result, xs, opt.tolerance), opt);
}

int run_diag(const std::vector<std::string>& paths, const Options& opt) {
  std::vector<CMatrix> xs;
  for (const auto& p : paths) xs.push_back(load_complex(p));
  QuatDiagResult result = diagonalize_commuting_normal(xs, opt.seed, opt.tolerance);
  save_factor(opt, "U", result.unitary);
  for (size_t j = 0; j < xs.size(); ++j)
    save_factor(opt, "D_" + std::to_string(j),
                CMatrix(result.diagonals[j].asDiagonal()));
  return report_exit(verify_diag(result, xs, opt.tolerance), opt);
}

int run_selfdual_schur(const std::vector<std::string>& paths, const Options& opt) {
  std::vector<CMatrix> xs;
  for (const auto& p : paths) xs.push_back(load_complex(p));
  SelfDualSchurResult result = schur_selfdual_commuting(xs, opt.seed, opt.tolerance);
  save_factor(opt, "U", result.unitary);
  for (size_t j = 0; j < xs.size(); ++j) {
    save_factor(opt, "T_" + std::to_string(j), result.upper[j]);
    save_factor(opt, "C_" + std::to_string(j), result.skew[j]);
  }
  return report_exit(verify_selfdual_schur(result, xs, opt.tolerance), opt);
}

int run_qr(const std::string& path, const Options& opt) {
  CMatrix x = load_complex(path);
  auto [q, r] = qr_quaternionic(x, opt.tolerance);
  save_factor(opt, "Q", q);
  save_factor(opt, "R", r);
  return report_exit(verify_qr(q, r, x, opt.tolerance), opt);
}

int run_svd(const std::string& path, const Options& opt) {
  CMatrix x = load_complex(path);
  QuatSvdResult result = svd_quaternionic(x, opt.tolerance);
  save_factor(opt, "U", result.u);
  save_factor(opt, "D", result.d);
  save_factor(opt, "V", result.v);
  return report_exit(verify_svd_quaternionic(result, x, opt.tolerance), opt);
}

int run_polar(const std::string& path, PolarVariant variant, const Options& opt) {
  CMatrix x = load_complex(path);
  PolarResult result;
  switch (variant) {
    case PolarVariant::Quaternionic:
      result = polar_quaternionic(x, opt.tolerance);
      break;
    case PolarVariant::Symmetric:
      result = polar_symmetric(x, opt.tolerance);
      break;
    case PolarVariant::SelfDual:
      result = polar_selfdual(x, opt.tolerance);
      break;
  }
  save_factor(opt, "U", result.unitary);
  save_factor(opt, "P", result.positive);
  save_factor(opt, "W", result.isometry);
  return report_exit(verify_polar(result, x, variant, opt.tolerance), opt);
}

int run_jordan(const std::string& path, const Options& opt) {
  CMatrix x = load_complex(path);
  JordanResult result = jordan_quaternionic(x);
  save_factor(opt, "S", result.basis);
  save_factor(opt, "J", result.form);
  FactorReport report = verify_jordan(result, x, opt.tolerance);
  if (opt.format == "machine") {
    for (size_t b = 0; b < result.blocks.size(); ++b)
      std::cout << "block." << b << "=" << result.blocks[b].eigenvalue.real()
                << " " << result.blocks[b].eigenvalue.imag() << " "
                << result.blocks[b].size << "\n";
  } else {
    std::cout << "jordan blocks (eigenvalue, size):\n";
    for (const auto& b : result.blocks)
      std::cout << "  (" << b.eigenvalue.real()
                << (b.eigenvalue.imag() < 0 ? " - " : " + ")
                << std::abs(b.eigenvalue.imag()) << "i, " << b.size << ")\n";
  }
  return report_exit(report, opt);
}

int run_tensor_verify(const std::string& path_x, const std::string& path_y,
                      const Options& opt) {
  CMatrix x = load_complex(path_x);
  CMatrix y = load_complex(path_y);
  FactorReport report;
  report.title = "tensor-verify";
  const double scale = std::max(1.0, x.norm() * y.norm());
  CheckRow transpose_row;
  transpose_row.name = "tensor.transpose";
  transpose_row.deviation = verify_tensor_transpose(x, y);
  transpose_row.threshold = 1e-11 * (opt.tolerance / tol::structural) * scale;
  transpose_row.pass = transpose_row.deviation <= transpose_row.threshold;
  report.rows.push_back(transpose_row);
  CheckRow mixed_row;
  mixed_row.name = "tensor.mixed.dual";
  mixed_row.deviation = tensor_mixed_dual(x, y);
  mixed_row.threshold = 1e-12 * (opt.tolerance / tol::structural) * scale;
  mixed_row.pass = mixed_row.deviation <= mixed_row.threshold;
  report.rows.push_back(mixed_row);
  return report_exit(report, opt);
}

int run_gen(const std::string& cls_name, Eigen::Index n, int count,
            const std::string& kind, const Options& opt) {
  GenSpec spec{n, matrix_class_from_string(cls_name), opt.seed};
  auto emit_one = [&](const CMatrix& m, const std::string& name) {
    if (opt.out_dir.empty()) {
      if (kind == "quaternion")
        write_matrix(std::cout, chi_inv(m, 1e-8));
      else
        write_matrix(std::cout, m);
      return;
    }
    std::filesystem::create_directories(opt.out_dir);
    const std::string path =
        (std::filesystem::path(opt.out_dir) / (name + ".mat")).string();
    if (kind == "quaternion")
      write_matrix_file(path, chi_inv(m, 1e-8));
    else
      write_matrix_file(path, m);
  };
  if (count <= 1) {
    emit_one(generate(spec), "gen_" + cls_name + "_" + std::to_string(n) + "_" +
                                 std::to_string(opt.seed));
  } else {
    if (opt.out_dir.empty())
      throw ParseError("out", "field 'out': --out is required when --count > 1");
    std::vector<CMatrix> family = generate_commuting(spec, count);
    for (int j = 0; j < count; ++j)
      emit_one(family[static_cast<size_t>(j)],
               "gen_" + cls_name + "_" + std::to_string(n) + "_" +
                   std::to_string(opt.seed) + "_" + std::to_string(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured factorizations of quaternion and self-dual matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tolerance, "structural tolerance (default 1e-10)");
  app.add_option("--seed", opt.seed, "seed for randomized steps (default 0)");
  app.add_option("--out", opt.out_dir, "directory for factor/output files");
  app.add_option("--format", opt.format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string file_a, file_b, cls_name = "quaternionic", gen_kind = "complex";
  std::vector<std::string> files, expect;
  Eigen::Index gen_n = 2;
  int gen_count = 1;

  auto* check = app.add_subcommand("check", "classify structure flags");
  check->add_option("file", file_a)->required();
  check->add_option("--expect", expect, "flags that must be present (exit 1 otherwise)")
      ->delimiter(',');

  auto* spectrum = app.add_subcommand("spectrum", "complex right eigenvalues");
  spectrum->add_option("file", file_a)->required();

  auto* norm = app.add_subcommand("norm", "operator norm");
  norm->add_option("file", file_a)->required();

  auto* schur = app.add_subcommand("schur", "joint quaternionic Schur form");
  schur->add_option("files", files)->required()->expected(1, -1);

  auto* diag = app.add_subcommand("diag", "joint diagonalization of commuting normal matrices");
  diag->add_option("files", files)->required()->expected(1, -1);

  auto* qr = app.add_subcommand("qr", "quaternionic QR factorization");
  qr->add_option("file", file_a)->required();

  auto* svd = app.add_subcommand("svd", "quaternionic singular value decomposition");
  svd->add_option("file", file_a)->required();

  auto* polar = app.add_subcommand("polar", "quaternionic polar decomposition");
  polar->add_option("file", file_a)->required();

  auto* polar_sym = app.add_subcommand("polar-symmetric", "symmetric polar decomposition");
  polar_sym->add_option("file", file_a)->required();

  auto* polar_sd = app.add_subcommand("polar-selfdual", "self-dual polar decomposition");
  polar_sd->add_option("file", file_a)->required();

  auto* schur_sd = app.add_subcommand("schur-selfdual", "joint self-dual Schur form");
  schur_sd->add_option("files", files)->required()->expected(1, -1);

  auto* jordan = app.add_subcommand("jordan", "Kramers-paired Jordan form");
  jordan->add_option("file", file_a)->required();

  auto* tensor = app.add_subcommand("tensor-verify", "tensor product dual identities");
  tensor->add_option("file_x", file_a)->required();
  tensor->add_option("file_y", file_b)->required();

  auto* gen = app.add_subcommand("gen", "generate seeded structured matrices");
  gen->add_option("--class", cls_name,
                  "quaternionic | hermitian-quaternionic | normal-quaternionic | "
                  "selfdual | symmetric | symplectic-unitary");
  gen->add_option("--n", gen_n, "size parameter (N for quaternionic classes)");
  gen->add_option("--count", gen_count, "family size (commuting family when > 1)");
  gen->add_option("--kind", gen_kind, "file kind: complex or quaternion")
      ->check(CLI::IsMember({"complex", "quaternion"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file_a, expect, opt);
    if (spectrum->parsed()) return run_spectrum(file_a, opt);
    if (norm->parsed()) return run_norm(file_a, opt);
    if (schur->parsed()) return run_schur(files, opt);
    if (diag->parsed()) return run_diag(files, opt);
    if (qr->parsed()) return run_qr(file_a, opt);
    if (svd->parsed()) return run_svd(file_a, opt);
    if (polar->parsed()) return run_polar(file_a, PolarVariant::Quaternionic, opt);
    if (polar_sym->parsed()) return run_polar(file_a, PolarVariant::Symmetric, opt);
    if (polar_sd->parsed()) return run_polar(file_a, PolarVariant::SelfDual, opt);
    if (schur_sd->parsed()) return run_selfdual_schur(files, opt);
    if (jordan->parsed()) return run_jordan(file_a, opt);
    if (tensor->parsed()) return run_tensor_verify(file_a, file_b, opt);
    if (gen->parsed()) return run_gen(cls_name, gen_n, gen_count, gen_kind, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
