#ifndef NONNEG_IO_HPP
#define NONNEG_IO_HPP

// Text formats:
//
//   Matrix Market array (dense), real or integer, symmetric or general:
//     %%MatrixMarket matrix array real symmetric
//     % comment
//     n n
//     <values, column-major; symmetric stores the lower triangle only>
//
//   Structured matrix text:
//     dim 2
//     row 0 1
//     row 1 0
//
//   Structured subspace text (entries may be decimals or p/q rationals):
//     ambient_dim 3
//     vector -1/2 1 1
//     vector 1 -1/2 1
//
// Lines starting with '#' are comments in the structured forms.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/jacobi.hpp"
#include "nonneg/matrix.hpp"
#include "nonneg/rational.hpp"

namespace nonneg {

/// Parses a decimal (correctly rounded) or p/q literal as binary64.
inline double parse_real(std::string_view token) {
  if (token.find('/') != std::string_view::npos) return parse_rational(token).get_d();
  parse_rational(token);  // rejects anything that is not a plain decimal literal
  const std::string s(token);
  return std::strtod(s.c_str(), nullptr);
}

namespace detail {

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

inline std::size_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(std::string("invalid ") + what + " '" + tok + "'");
  return static_cast<std::size_t>(std::stoull(tok));
}

/// Non-comment, non-blank lines split into tokens.
inline std::vector<std::vector<std::string>> content_lines(std::istream& in, char comment) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == comment) continue;
    out.push_back(std::move(toks));
  }
  return out;
}

}  // namespace detail

/// Reads a dense Matrix Market array. The caller decides whether symmetry
/// is required (SymmetricMatrix checks it).
inline Matrix<double> read_matrix_market(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty Matrix Market input");
  const auto h = detail::split_ws(detail::lower(header));
  if (h.size() != 5 || h[0] != "%%matrixmarket" || h[1] != "matrix")
    throw ParseError("missing '%%MatrixMarket matrix ...' header");
  if (h[2] != "array") throw ParseError("only the dense 'array' Matrix Market layout is supported");
  if (h[3] != "real" && h[3] != "integer") throw ParseError("Matrix Market field must be real or integer");
  if (h[4] != "symmetric" && h[4] != "general") throw ParseError("Matrix Market symmetry must be symmetric or general");
  const bool symmetric = h[4] == "symmetric";

  std::vector<std::string> tokens;
  for (auto& line : detail::content_lines(in, '%'))
    for (auto& t : line) tokens.push_back(std::move(t));
  if (tokens.size() < 2) throw ParseError("missing Matrix Market size line");
  const std::size_t rows = detail::parse_count(tokens[0], "row count");
  const std::size_t cols = detail::parse_count(tokens[1], "column count");
  if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive");
  if (symmetric && rows != cols) throw ParseError("symmetric Matrix Market input must be square");

  const std::size_t expected = symmetric ? rows * (rows + 1) / 2 : rows * cols;
  if (tokens.size() - 2 != expected)
    throw ParseError("expected " + std::to_string(expected) + " values, found " + std::to_string(tokens.size() - 2));

  Matrix<double> m(rows, cols);
  std::size_t t = 2;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = symmetric ? j : 0; i < rows; ++i) {
      const double x = parse_real(tokens[t++]);
      m(i, j) = x;
      if (symmetric) m(j, i) = x;
    }
  return m;
}

/// Writes the lower triangle in column-major order with round-trip precision.
inline void write_matrix_market(std::ostream& out, const SymmetricMatrix& m, std::string_view comment = {}) {
  out << "%%MatrixMarket matrix array real symmetric\n";
  if (!comment.empty()) out << "% " << comment << "\n";
  out << m.dim() << " " << m.dim() << "\n";
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = j; i < m.dim(); ++i) out << scalar_traits<double>::to_string(m(i, j)) << "\n";
}

inline Matrix<double> read_matrix_text(std::istream& in) {
  const auto lines = detail::content_lines(in, '#');
  if (lines.empty() || lines.front().size() != 2 || lines.front()[0] != "dim")
    throw ParseError("structured matrix text must start with 'dim <n>'");
  const std::size_t n = detail::parse_count(lines.front()[1], "dimension");
  if (n == 0) throw ParseError("matrix dimension must be positive");
  if (lines.size() - 1 != n)
    throw ParseError("expected " + std::to_string(n) + " 'row' lines, found " + std::to_string(lines.size() - 1));
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = lines[i + 1];
    if (l.front() != "row") throw ParseError("expected 'row', found '" + l.front() + "'");
    if (l.size() != n + 1) throw ParseError("row " + std::to_string(i) + " has the wrong number of entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_real(l[j + 1]);
  }
  return m;
}

/// Dispatches on the first non-blank line: Matrix Market header or 'dim'.
inline Matrix<double> read_matrix(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream is(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 2, "%%") == 0) return read_matrix_market(is);
  return read_matrix_text(is);
}

/// Spanning vectors of a subspace, parsed exactly.
struct SubspaceInput {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Rational>> vectors;

  /// n x m matrix whose columns are the vectors, in backend T.
  template <Scalar T>
  Matrix<T> columns() const {
    Matrix<T> m(ambient_dim, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
      for (std::size_t i = 0; i < ambient_dim; ++i) {
        if constexpr (is_exact_v<T>) {
          m(i, j) = vectors[j][i];
        } else {
          m(i, j) = vectors[j][i].get_d();
        }
      }
    return m;
  }
};

inline SubspaceInput read_subspace_text(std::istream& in) {
  const auto lines = detail::content_lines(in, '#');
  if (lines.empty() || lines.front().size() != 2 || lines.front()[0] != "ambient_dim")
    throw ParseError("subspace text must start with 'ambient_dim <n>'");
  SubspaceInput s;
  s.ambient_dim = detail::parse_count(lines.front()[1], "ambient dimension");
  if (s.ambient_dim == 0) throw ParseError("ambient dimension must be positive");
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& toks = lines[l];
    if (toks.front() != "vector") throw ParseError("expected 'vector', found '" + toks.front() + "'");
    if (toks.size() != s.ambient_dim + 1)
      throw ParseError("vector " + std::to_string(l - 1) + " has " + std::to_string(toks.size() - 1) +
                       " entries, expected " + std::to_string(s.ambient_dim));
    std::vector<Rational> v;
    for (std::size_t i = 1; i < toks.size(); ++i) v.push_back(parse_rational(toks[i]));
    s.vectors.push_back(std::move(v));
  }
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace nonneg

#endif  // NONNEG_IO_HPP
