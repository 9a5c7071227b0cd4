#include "kramers/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "kramers/errors.hpp"

namespace kramers {

namespace {

constexpr const char* kMagic = "kramers-matrix";
constexpr int kVersion = 1;

// Tokens with '#'-comment lines stripped.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok.front() == '#') break;
      tokens.push_back(tok);
    }
  }
  return tokens;
}

double parse_number(const std::string& tok, const std::string& field) {
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(field, "field '" + field + "': '" + tok + "' is not a number");
  }
  if (used != tok.size())
    throw ParseError(field, "field '" + field + "': trailing characters in '" + tok + "'");
  return value;
}

long parse_positive_int(const std::string& tok, const std::string& field) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(field, "field '" + field + "': '" + tok + "' is not an integer");
  }
  if (used != tok.size() || value <= 0)
    throw ParseError(field, "field '" + field + "': expected a positive integer, got '" +
                                tok + "'");
  return value;
}

void write_header(std::ostream& out, const char* kind, Eigen::Index rows,
                  Eigen::Index cols) {
  out << kMagic << ' ' << kVersion << ' ' << kind << ' ' << rows << ' ' << cols
      << '\n';
}

}  // namespace

MatrixFile read_matrix(std::istream& in) {
  const std::vector<std::string> tokens = tokenize(in);
  if (tokens.size() < 5)
    throw ParseError("header", "header: expected 'kramers-matrix VERSION KIND ROWS COLS'");
  if (tokens[0] != kMagic)
    throw ParseError("magic", "field 'magic': expected '" + std::string(kMagic) +
                                  "', got '" + tokens[0] + "'");
  const long version = parse_positive_int(tokens[1], "version");
  if (version != kVersion)
    throw ParseError("version", "field 'version': unsupported version " +
                                    std::to_string(version));
  const std::string& kind = tokens[2];
  if (kind != "complex" && kind != "quaternion")
    throw ParseError("kind", "field 'kind': expected 'complex' or 'quaternion', got '" +
                                 kind + "'");
  const long rows = parse_positive_int(tokens[3], "rows");
  const long cols = parse_positive_int(tokens[4], "cols");

  const size_t per_entry = kind == "complex" ? 2 : 4;
  const size_t expected = static_cast<size_t>(rows) * static_cast<size_t>(cols) * per_entry;
  const size_t got = tokens.size() - 5;
  if (got != expected)
    throw ParseError("entry count",
                     "field 'entry count': expected " + std::to_string(expected) +
                         " numbers for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " " + kind + " matrix, got " +
                         std::to_string(got));

  MatrixFile file;
  file.version = static_cast<int>(version);
  size_t t = 5;
  if (kind == "complex") {
    CMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) {
        const std::string field = "entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")";
        const double re = parse_number(tokens[t++], field);
        const double im = parse_number(tokens[t++], field);
        m(i, j) = Complex(re, im);
      }
    file.payload = std::move(m);
  } else {
    QuatMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) {
        const std::string field = "entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")";
        double comp[4];
        for (double& c : comp) c = parse_number(tokens[t++], field);
        m(i, j) = Quaternion(comp[0], comp[1], comp[2], comp[3]);
      }
    file.payload = std::move(m);
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("file", "cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMatrix& x) {
  write_header(out, "complex", x.rows(), x.cols());
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j) out << ' ';
      out << x(i, j).real() << ' ' << x(i, j).imag();
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const QuatMatrix& x) {
  write_header(out, "quaternion", x.rows(), x.cols());
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j) out << ' ';
      const Quaternion& q = x(i, j);
      out << q.a << ' ' << q.b << ' ' << q.c << ' ' << q.d;
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const CMatrix& x) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_matrix(out, x);
}

void write_matrix_file(const std::string& path, const QuatMatrix& x) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_matrix(out, x);
}

}  // namespace kramers
