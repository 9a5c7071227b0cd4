#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "kramers/quat_matrix.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Line-oriented text container for one matrix.
///
/// Grammar:
///   header:  "kramers-matrix" VERSION KIND ROWS COLS
///   body:    ROWS*COLS entries in row-major order, 2 numbers per complex
///            entry (re im) or 4 per quaternion entry (a b c d), any
///            whitespace/newline layout; '#' starts a comment line.
/// Parse-then-serialize is the identity up to float text round-trip (entries
/// are written with 17 significant digits).
struct MatrixFile {
  int version{1};
  std::variant<CMatrix, QuatMatrix> payload;

  bool is_complex() const { return std::holds_alternative<CMatrix>(payload); }
  const CMatrix& complex_matrix() const { return std::get<CMatrix>(payload); }
  const QuatMatrix& quaternion_matrix() const {
    return std::get<QuatMatrix>(payload);
  }
};

MatrixFile read_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const CMatrix& x);
void write_matrix(std::ostream& out, const QuatMatrix& x);
void write_matrix_file(const std::string& path, const CMatrix& x);
void write_matrix_file(const std::string& path, const QuatMatrix& x);

}  // namespace kramers
