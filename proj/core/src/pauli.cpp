#include "qae/pauli.hpp"

#include <bit>
#include <map>

#include "qae/errors.hpp"
#include "qae/text_util.hpp"

namespace qae {

char to_char(PauliOp op) noexcept {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<PauliOp> ops) : ops_(std::move(ops)) {
  const std::size_t n = ops_.size();
  if (n > 63) {
    throw Error(ErrorCode::SizeExceeded, "Pauli strings are limited to 63 qubits");
  }
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (ops_[q]) {
      case PauliOp::I: break;
      case PauliOp::X: flip_mask_ |= bit; break;
      case PauliOp::Y:
        flip_mask_ |= bit;
        phase_mask_ |= bit;
        ++y_count_;
        break;
      case PauliOp::Z: phase_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::parse(std::string_view labels) {
  std::vector<PauliOp> ops;
  ops.reserve(labels.size());
  for (char c : labels) {
    switch (c) {
      case 'I': ops.push_back(PauliOp::I); break;
      case 'X': ops.push_back(PauliOp::X); break;
      case 'Y': ops.push_back(PauliOp::Y); break;
      case 'Z': ops.push_back(PauliOp::Z); break;
      default:
        throw Error(ErrorCode::ParseError,
                    std::string("unknown Pauli label '") + c + "' in \"" +
                        std::string(labels) + "\"");
    }
  }
  if (ops.empty()) throw Error(ErrorCode::ParseError, "empty Pauli string");
  return PauliString(std::move(ops));
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(ops_.size());
  for (auto op : ops_) out.push_back(to_char(op));
  return out;
}

Hamiltonian::Hamiltonian(std::size_t num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits) {
  if (terms.empty()) throw Error(ErrorCode::EmptyHamiltonian, "no terms");
  if (num_qubits == 0) throw Error(ErrorCode::ShapeMismatch, "zero qubits");
  std::map<std::string, PauliTerm> merged;
  for (auto& term : terms) {
    if (term.string.num_qubits() != num_qubits) {
      throw Error(ErrorCode::ShapeMismatch,
                  "term " + term.string.str() + " has " +
                      std::to_string(term.string.num_qubits()) + " labels, expected " +
                      std::to_string(num_qubits));
    }
    auto key = term.string.str();
    auto [it, inserted] = merged.try_emplace(std::move(key), term);
    if (!inserted) it->second.coefficient += term.coefficient;
  }
  terms_.reserve(merged.size());
  for (auto& [label, term] : merged) terms_.push_back(std::move(term));
}

bool Hamiltonian::is_hermitian(double tol) const noexcept {
  for (const auto& t : terms_) {
    if (std::abs(t.coefficient.imag()) > tol) return false;
  }
  return true;
}

double Hamiltonian::one_norm() const noexcept {
  double out = 0.0;
  for (const auto& t : terms_) out += std::abs(t.coefficient);
  return out;
}

Hamiltonian parse_hamiltonian(std::string_view input) {
  std::vector<PauliTerm> terms;
  std::size_t num_qubits = 0;
  std::size_t line_no = 0;
  for (auto raw : text::split_lines(input)) {
    ++line_no;
    const auto line = text::trim(text::strip_comment(raw));
    if (line.empty()) continue;
    const auto tokens = text::split_ws(line);
    if (tokens.size() != 3) {
      throw Error(ErrorCode::ParseError, "expected `<re> <im> <LABELS>`", line_no);
    }
    const auto re = text::parse_double(tokens[0]);
    const auto im = text::parse_double(tokens[1]);
    if (!re || !im) throw Error(ErrorCode::ParseError, "bad coefficient", line_no);
    PauliString string;
    try {
      string = PauliString::parse(tokens[2]);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
    if (terms.empty()) {
      num_qubits = string.num_qubits();
    } else if (string.num_qubits() != num_qubits) {
      throw Error(ErrorCode::ShapeMismatch,
                  "string " + string.str() + " does not match qubit count " +
                      std::to_string(num_qubits),
                  line_no);
    }
    terms.push_back({cplx(*re, *im), std::move(string)});
  }
  if (terms.empty()) throw Error(ErrorCode::EmptyHamiltonian, "no terms in input");
  return Hamiltonian(num_qubits, std::move(terms));
}

std::string to_text(const Hamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms()) {
    out += text::format_double(t.coefficient.real());
    out += ' ';
    out += text::format_double(t.coefficient.imag());
    out += ' ';
    out += t.string.str();
    out += '\n';
  }
  return out;
}

StateVector apply_pauli(const PauliString& string, const StateVector& state) {
  if (state.num_qubits() != string.num_qubits()) {
    throw Error(ErrorCode::ShapeMismatch,
                "Pauli string on " + std::to_string(string.num_qubits()) +
                    " qubits applied to a " + std::to_string(state.num_qubits()) +
                    "-qubit state");
  }
  // i^(#Y) global factor, then (-1)^popcount(x & phase_mask) per basis state.
  static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx global = kIPowers[string.y_count() % 4];
  const auto flip = string.flip_mask();
  const auto phase = string.phase_mask();

  StateVector out(state.num_qubits());
  auto src = state.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t x = 0; x < src.size(); ++x) {
    const bool odd = std::popcount(static_cast<std::uint64_t>(x) & phase) & 1U;
    dst[x ^ flip] = odd ? -global * src[x] : global * src[x];
  }
  return out;
}

StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& state) {
  StateVector out(state.num_qubits());
  out[0] = 0.0;
  for (const auto& term : h.terms()) {
    const auto part = apply_pauli(term.string, state);
    for (std::size_t x = 0; x < out.dimension(); ++x) {
      out[x] += term.coefficient * part[x];
    }
  }
  return out;
}

namespace {

ComplexMatrix single_qubit_matrix(PauliOp op) {
  const cplx i{0.0, 1.0};
  switch (op) {
    case PauliOp::I: return {{1.0, 0.0}, {0.0, 1.0}};
    case PauliOp::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case PauliOp::Y: return {{0.0, -i}, {i, 0.0}};
    case PauliOp::Z: return {{1.0, 0.0}, {0.0, -1.0}};
  }
  return {};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

ComplexMatrix dense_matrix(const Hamiltonian& h) {
  if (h.num_qubits() > kDenseOracleMaxQubits) {
    throw Error(ErrorCode::OracleSizeExceeded,
                "dense matrix requested for " + std::to_string(h.num_qubits()) +
                    " qubits (cap " + std::to_string(kDenseOracleMaxQubits) + ")");
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  ComplexMatrix out(dim, dim);
  // Kronecker products of the 2x2 matrices, leftmost label outermost. This is
  // deliberately a different route from the bit tricks in apply_pauli.
  for (const auto& term : h.terms()) {
    ComplexMatrix product{{term.coefficient}};
    for (auto op : term.string.ops()) {
      product = kron(product, single_qubit_matrix(op));
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out(i, j) += product(i, j);
  }
  return out;
}

Hamiltonian h2_hamiltonian(double a, double b) {
  return Hamiltonian(2, {{a, PauliString::parse("ZI")},
                         {a, PauliString::parse("IZ")},
                         {b, PauliString::parse("XX")}});
}

}  // namespace qae
