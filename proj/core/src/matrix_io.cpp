#include "qae/matrix_io.hpp"

#include <vector>

#include "qae/errors.hpp"
#include "qae/text_util.hpp"

namespace qae {

MatrixPair parse_matrix_pair(std::string_view input) {
  struct Line {
    std::vector<std::string_view> tokens;
    std::size_t number;
  };
  std::vector<Line> lines;
  std::size_t no = 0;
  for (auto raw : text::split_lines(input)) {
    ++no;
    const auto line = text::trim(text::strip_comment(raw));
    if (!line.empty()) lines.push_back({text::split_ws(line), no});
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty matrix file");

  MatrixPair out;
  std::size_t pos = 0;
  if (lines[0].tokens.size() == 1 && lines[0].tokens[0] == "COMPLEX") {
    out.complex = true;
    ++pos;
  }
  if (pos >= lines.size() || lines[pos].tokens.size() != 1) {
    throw Error(ErrorCode::ParseError, "expected the dimension m",
                pos < lines.size() ? lines[pos].number : no);
  }
  const auto m_val = text::parse_int(lines[pos].tokens[0]);
  if (!m_val || *m_val <= 0) {
    throw Error(ErrorCode::ParseError, "bad dimension", lines[pos].number);
  }
  ++pos;
  const auto m = static_cast<std::size_t>(*m_val);
  const std::size_t width = out.complex ? 2 * m : m;
  if (lines.size() - pos != 2 * m) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(2 * m) +
                                              " matrix rows, found " +
                                              std::to_string(lines.size() - pos));
  }

  auto read = [&](ComplexMatrix& target) {
    target = ComplexMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i, ++pos) {
      const auto& line = lines[pos];
      if (line.tokens.size() != width) {
        throw Error(ErrorCode::ShapeMismatch,
                    "row has " + std::to_string(line.tokens.size()) + " numbers, expected " +
                        std::to_string(width),
                    line.number);
      }
      for (std::size_t j = 0; j < m; ++j) {
        const auto re = text::parse_double(line.tokens[out.complex ? 2 * j : j]);
        const auto im = out.complex ? text::parse_double(line.tokens[2 * j + 1])
                                    : std::optional<double>(0.0);
        if (!re || !im) throw Error(ErrorCode::ParseError, "bad number", line.number);
        target(i, j) = {*re, *im};
      }
    }
  };
  read(out.D);
  read(out.E);
  return out;
}

std::string to_matrix_text(const ComplexMatrix& d, const ComplexMatrix& e, bool complex) {
  if (!d.square() || d.rows() != e.rows() || !e.square()) {
    throw Error(ErrorCode::ShapeMismatch, "D and E must be square matrices of equal size");
  }
  std::string out = complex ? "COMPLEX\n" : "";
  out += std::to_string(d.rows()) + "\n";
  auto rows = [&](const ComplexMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j) out += ' ';
        out += text::format_double(a(i, j).real());
        if (complex) out += ' ' + text::format_double(a(i, j).imag());
      }
      out += '\n';
    }
  };
  rows(d);
  out += '\n';
  rows(e);
  return out;
}

}  // namespace qae
