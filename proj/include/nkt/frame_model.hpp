#pragma once

// Left-invariant contact metric models given by an orthonormal frame.
//
// The frame e_0..e_{dim-1} is g-orthonormal. Brackets are constant:
// [e_i, e_j] = sum_k c(i, j, k) e_k. phi(i, j) is the i-th component of
// phi(e_j). Indices are 0-based in code and 1-based in files and reports.
//
// Model file format:
//   # comment
//   name nk(1/2)
//   dim 3
//   xi 3
//   phi
//   0 -1 0
//   1 0 0
//   0 0 0
//   bracket
//   1 2 3 : 2
//   2 3 1 : 1/2
// Each bracket line "i j k : v" sets c(i,j,k) = v and c(j,i,k) = -v.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "nkt/tensor.hpp"

namespace nkt {

struct FrameModel {
  std::size_t dim = 0;
  std::size_t xi = 0;
  Matrix phi;
  Tensor<3> c;
  std::string name;

  std::size_t n() const { return (dim - 1) / 2; }

  Rational bracket(std::size_t i, std::size_t j, std::size_t k) const { return c(i, j, k); }

  /// Frame indices orthogonal to xi.
  std::vector<std::size_t> horizontal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim; ++i)
      if (i != xi) out.push_back(i);
    return out;
  }

  friend bool operator==(const FrameModel& x, const FrameModel& y) {
    return x.dim == y.dim && x.xi == y.xi && x.phi == y.phi && x.c == y.c;
  }
};

inline FrameModel empty_model(std::size_t dim, std::size_t xi) {
  FrameModel m;
  m.dim = dim;
  m.xi = xi;
  m.phi = Matrix(dim);
  m.c = Tensor<3>(dim);
  return m;
}

/// phi pairing e_{2k} -> e_{2k+1} over the horizontal indices, phi(xi) = 0.
inline Matrix standard_phi(std::size_t dim, std::size_t xi) {
  Matrix phi(dim);
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < dim; ++i)
    if (i != xi) h.push_back(i);
  for (std::size_t k = 0; k + 1 < h.size(); k += 2) {
    phi(h[k + 1], h[k]) = 1;
    phi(h[k], h[k + 1]) = -1;
  }
  return phi;
}

/// Sets the e_k component of [e_i, e_j] to value and keeps c antisymmetric.
inline void set_bracket(FrameModel& m, std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  m.c(i, j, k) = value;
  m.c(j, i, k) = -value;
}

inline Rational jacobi_component(const FrameModel& m, std::size_t i, std::size_t j, std::size_t k, std::size_t p) {
  Rational sum = 0;
  for (std::size_t q = 0; q < m.dim; ++q)
    sum += m.c(j, k, q) * m.c(i, q, p) + m.c(k, i, q) * m.c(j, q, p) + m.c(i, j, q) * m.c(k, q, p);
  return sum;
}

/// Throws InvalidModel unless dim is odd, fields are sized, c is antisymmetric
/// and satisfies Jacobi.
inline void validate_structure(const FrameModel& m) {
  auto fail = [](const std::string& why) { throw error(errc::invalid_model, why); };
  if (m.dim < 3 || m.dim % 2 == 0) fail("dimension must be odd and at least 3, got " + std::to_string(m.dim));
  if (m.xi >= m.dim) fail("xi index out of range");
  if (m.phi.dim() != m.dim || m.c.dim() != m.dim) fail("field sizes do not match dim");
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k)
        if (m.c(i, j, k) != -m.c(j, i, k))
          fail("bracket not antisymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               std::to_string(k + 1) + ")");
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = i + 1; j < m.dim; ++j)
      for (std::size_t k = j + 1; k < m.dim; ++k)
        for (std::size_t p = 0; p < m.dim; ++p)
          if (jacobi_component(m, i, j, k, p) != 0)
            fail("Jacobi identity fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                 std::to_string(k + 1) + ")");
}

/// The three-dimensional N(1 - lambda^2) Lie group:
/// [e1,e2] = 2 e3, [e2,e3] = (1-lambda) e1, [e3,e1] = (1+lambda) e2,
/// xi = e3, phi e1 = e2, phi e2 = -e1.
inline FrameModel nk_lie_group_3d(const Rational& lambda) {
  FrameModel m = empty_model(3, 2);
  set_bracket(m, 0, 1, 2, 2);
  set_bracket(m, 1, 2, 0, 1 - lambda);
  set_bracket(m, 2, 0, 1, 1 + lambda);
  m.phi = standard_phi(3, 2);
  m.name = "nk_lie_group_3d(" + to_string(lambda) + ")";
  return m;
}

/// Abelian algebra of the given dimension with xi = last frame vector.
inline FrameModel abelian_model(std::size_t dim) {
  FrameModel m = empty_model(dim, dim - 1);
  m.phi = standard_phi(dim, dim - 1);
  m.name = "abelian(" + std::to_string(dim) + ")";
  return m;
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string out = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = out.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = out.find_last_not_of(" \t\r");
  return out.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses the model text format; throws ParseError on malformed text and
/// InvalidModel on contradictory brackets.
inline FrameModel parse_model(std::istream& in, const std::string& source = "<model>") {
  std::size_t line_no = 0;
  auto fail = [&](errc code, const std::string& why) {
    throw error(code, source + ":" + std::to_string(line_no) + ": " + why);
  };
  std::size_t dim = 0, xi = 0;
  std::string model_name = source;
  std::vector<std::vector<Rational>> phi_rows;
  struct Entry {
    std::size_t i, j, k;
    Rational value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  enum class Section { header, phi, bracket } section = Section::header;

  auto parse_index = [&](const std::string& token) -> std::size_t {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse_error, "expected a frame index, got '" + token + "'");
    std::size_t v = std::stoul(token);
    if (v == 0 || (dim != 0 && v > dim)) fail(errc::parse_error, "frame index out of range: " + token);
    return v - 1;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "dim") {
      std::string value;
      words >> value;
      dim = parse_index(value) + 1;
      continue;
    }
    if (head == "xi") {
      if (dim == 0) fail(errc::parse_error, "'xi' before 'dim'");
      std::string value;
      words >> value;
      xi = parse_index(value);
      continue;
    }
    if (head == "name") {
      std::getline(words >> std::ws, model_name);
      continue;
    }
    if (head == "phi") {
      section = Section::phi;
      continue;
    }
    if (head == "bracket") {
      section = Section::bracket;
      continue;
    }
    if (dim == 0) fail(errc::parse_error, "'dim' must come first");
    if (section == Section::phi) {
      std::istringstream row(line);
      std::vector<Rational> values;
      std::string token;
      while (row >> token) {
        try {
          values.push_back(parse_rational(token));
        } catch (const error& e) {
          fail(errc::parse_error, e.what());
        }
      }
      if (values.size() != dim) fail(errc::parse_error, "phi row needs " + std::to_string(dim) + " entries");
      phi_rows.push_back(std::move(values));
      continue;
    }
    if (section == Section::bracket) {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail(errc::parse_error, "bracket line needs 'i j k : value'");
      std::istringstream idx(line.substr(0, colon));
      std::string ti, tj, tk, extra;
      if (!(idx >> ti >> tj >> tk) || (idx >> extra)) fail(errc::parse_error, "bracket line needs three indices");
      Rational value;
      try {
        value = parse_rational(line.substr(colon + 1));
      } catch (const error& e) {
        fail(errc::parse_error, e.what());
      }
      entries.push_back({parse_index(ti), parse_index(tj), parse_index(tk), value, line_no});
      continue;
    }
    fail(errc::parse_error, "unexpected line '" + line + "'");
  }
  line_no = 0;
  if (dim == 0) fail(errc::parse_error, "missing 'dim'");
  if (phi_rows.size() != dim) fail(errc::parse_error, "phi needs " + std::to_string(dim) + " rows");

  FrameModel m = empty_model(dim, xi);
  m.name = model_name;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.phi(i, j) = phi_rows[i][j];
  std::vector<bool> seen(dim * dim * dim, false);
  for (const auto& e : entries) {
    line_no = e.line;
    if (e.i == e.j && e.value != 0) fail(errc::invalid_model, "[e_i, e_i] must vanish");
    auto slot = [&](std::size_t a, std::size_t b) { return (a * dim + b) * dim + e.k; };
    if (seen[slot(e.i, e.j)] && m.c(e.i, e.j, e.k) != e.value)
      fail(errc::invalid_model, "contradictory bracket entries (not antisymmetric)");
    if (seen[slot(e.j, e.i)] && m.c(e.j, e.i, e.k) != -e.value)
      fail(errc::invalid_model, "contradictory bracket entries (not antisymmetric)");
    seen[slot(e.i, e.j)] = seen[slot(e.j, e.i)] = true;
    set_bracket(m, e.i, e.j, e.k, e.value);
  }
  return m;
}

inline FrameModel parse_model_text(const std::string& text, const std::string& source = "<model>") {
  std::istringstream in(text);
  return parse_model(in, source);
}

inline FrameModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_argument, "cannot open model file '" + path + "'");
  return parse_model(in, path);
}

inline std::string write_model(const FrameModel& m) {
  std::ostringstream out;
  if (!m.name.empty()) out << "name " << m.name << "\n";
  out << "dim " << m.dim << "\n";
  out << "xi " << m.xi + 1 << "\n";
  out << "phi\n";
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) out << (j ? " " : "") << to_string(m.phi(i, j));
    out << "\n";
  }
  out << "bracket\n";
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = i + 1; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k)
        if (m.c(i, j, k) != 0) out << i + 1 << " " << j + 1 << " " << k + 1 << " : " << to_string(m.c(i, j, k)) << "\n";
  return out.str();
}

}  // namespace nkt
