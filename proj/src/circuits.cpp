#include "specwalk/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specwalk {

namespace {
constexpr double inv_sqrt2 = 0.70710678118654752440;
constexpr double sqrt2 = 1.4142135623730951;

// Toffoli permutation: flips bit `target` iff both control bits are set.
inline Index toffoli_map(const Gate& g, Index i) {
  const Index c1 = Index{1} << g.control1;
  const Index c2 = Index{1} << g.control2;
  if ((i & c1) && (i & c2)) return i ^ (Index{1} << g.target);
  return i;
}
}  // namespace

Gate Gate::adjoint() const {
  switch (kind) {
    case GateKind::Hadamard:
    case GateKind::PauliZ:
      return *this;
    case GateKind::HadamardToffoli:
      return {GateKind::ToffoliHadamard, target, control1, control2};
    case GateKind::ToffoliHadamard:
      return {GateKind::HadamardToffoli, target, control1, control2};
  }
  throw std::logic_error("Gate::adjoint: unreachable");
}

void GateCircuit::validate() const {
  if (width < 1 || width > statevector_cap)
    throw std::invalid_argument("circuit: width outside [1, " +
                                std::to_string(statevector_cap) + "]");
  if (static_cast<int>(input_bits.size()) > width)
    throw std::invalid_argument("circuit: more input bits than wires");
  for (int b : input_bits)
    if (b != 0 && b != 1) throw std::invalid_argument("circuit: input bits must be 0/1");
  for (const Gate& g : gates) {
    auto in_range = [&](int w) { return w >= 0 && w < width; };
    if (!in_range(g.target)) throw std::invalid_argument("circuit: gate target out of range");
    if (g.kind == GateKind::HadamardToffoli || g.kind == GateKind::ToffoliHadamard) {
      if (!in_range(g.control1) || !in_range(g.control2))
        throw std::invalid_argument("circuit: control wire out of range");
      if (g.control1 == g.control2 || g.control1 == g.target || g.control2 == g.target)
        throw std::invalid_argument("circuit: gate wires must be distinct");
    }
  }
}

Index GateCircuit::start_index() const {
  Index idx = 0;
  for (std::size_t w = 0; w < input_bits.size(); ++w)
    if (input_bits[w]) idx |= Index{1} << w;
  return idx;
}

void apply_gate(const Gate& g, int width, CVec& psi) {
  const Index dim = Index{1} << width;
  if (psi.size() != dim) throw std::invalid_argument("apply_gate: state size mismatch");
  const Index tbit = Index{1} << g.target;

  auto hadamard = [&]() {
    for (Index i = 0; i < dim; ++i) {
      if (i & tbit) continue;
      const Complex a = psi[i];
      const Complex b = psi[i | tbit];
      psi[i] = inv_sqrt2 * (a + b);
      psi[i | tbit] = inv_sqrt2 * (a - b);
    }
  };
  auto toffoli = [&]() {
    for (Index i = 0; i < dim; ++i) {
      Index j = toffoli_map(g, i);
      if (j > i) std::swap(psi[i], psi[j]);
    }
  };

  switch (g.kind) {
    case GateKind::Hadamard:
      hadamard();
      break;
    case GateKind::HadamardToffoli:  // Toffoli, then Hadamard on target
      toffoli();
      hadamard();
      break;
    case GateKind::ToffoliHadamard:  // Hadamard on target, then Toffoli
      hadamard();
      toffoli();
      break;
    case GateKind::PauliZ:
      for (Index i = 0; i < dim; ++i)
        if (i & tbit) psi[i] = -psi[i];
      break;
  }
}

CVec apply_circuit(const GateCircuit& c) {
  c.validate();
  CVec psi = CVec::Zero(c.dim());
  psi[c.start_index()] = 1.0;
  for (const Gate& g : c.gates) apply_gate(g, c.width, psi);
  return psi;
}

SparseRow gate_row(const Gate& g, int width, Index i) {
  const Index tbit = Index{1} << g.target;
  auto h_row = [&](Index r) {
    // Row r of the embedded Hadamard, sorted: the target-bit-clear column
    // always carries +1/sqrt(2).
    SparseRow out;
    out.push_back({r & ~tbit, inv_sqrt2});
    out.push_back({r | tbit, (r & tbit) ? -inv_sqrt2 : inv_sqrt2});
    return out;
  };

  SparseRow out;
  switch (g.kind) {
    case GateKind::Hadamard:
      return h_row(i);
    case GateKind::PauliZ:
      out.push_back({i, (i & tbit) ? -1.0 : 1.0});
      return out;
    case GateKind::HadamardToffoli: {
      // (H_t T)[i, j] = H_t[i, tau(j)]: entries at tau(i0), tau(i1).
      for (const auto& e : h_row(i)) out.push_back({toffoli_map(g, e.col), e.value});
      break;
    }
    case GateKind::ToffoliHadamard: {
      // (T H_t)[i, j] = H_t[tau(i), j]: row tau(i) of the Hadamard.
      return h_row(toffoli_map(g, i));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  return out;
}

SparseRow gate_col(const Gate& g, int width, Index i) {
  // Column structure = row structure of the transpose; all gates real.
  Gate t = g;
  if (g.kind == GateKind::HadamardToffoli)
    t.kind = GateKind::ToffoliHadamard;
  else if (g.kind == GateKind::ToffoliHadamard)
    t.kind = GateKind::HadamardToffoli;
  return gate_row(t, width, i);
}

GateCircuit build_u_circuit(const GateCircuit& y) {
  y.validate();
  GateCircuit u = y;
  u.gates.push_back(Gate::z(0));
  for (auto it = y.gates.rbegin(); it != y.gates.rend(); ++it)
    u.gates.push_back(it->adjoint());
  return u;
}

double acceptance_probability(const GateCircuit& y) {
  CVec psi = apply_circuit(y);
  double p1 = 0.0;
  for (Index i = 0; i < psi.size(); ++i)
    if (i & 1) p1 += std::norm(psi[i]);
  return p1;
}

double involution_alpha1_sq(const GateCircuit& u) {
  u.validate();
  CVec s = CVec::Zero(u.dim());
  s[u.start_index()] = 1.0;
  CVec us = s;
  for (const Gate& g : u.gates) apply_gate(g, u.width, us);
  CVec uus = us;
  for (const Gate& g : u.gates) apply_gate(g, u.width, uus);
  if ((uus - s).norm() > 1e-10)
    throw std::invalid_argument("involution_alpha1_sq: circuit is not an involution");
  const Complex overlap = s.dot(us);
  if (std::abs(overlap.imag()) > 1e-10)
    throw std::invalid_argument("involution_alpha1_sq: diagonal overlap not real");
  return std::clamp(0.5 * (1.0 - overlap.real()), 0.0, 1.0);
}

ClockHermitian build_clock_hermitian(const GateCircuit& u) {
  u.validate();
  const Index m = static_cast<Index>(u.gates.size());
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("build_clock_hermitian: gate count must be odd and >= 3");

  ClockHermitian clock{
      m,
      u.dim(),
      u.start_index(),
      SparseSymmetricMatrix(
          m * u.dim(),
          [u, m](Index flat) {
            const Index dim = u.dim();
            const Index l = flat / dim;
            const Index i = flat % dim;
            const Index prev = (l + m - 1) % m;
            const Index next = (l + 1) % m;
            // Hadamard-kind entries rescale to exactly +/-1; snap away the
            // roundoff so integer consumers see true integers.
            auto rescale = [](double v) {
              const double scaled = sqrt2 * v;
              const double rounded = std::round(scaled);
              return std::abs(scaled - rounded) < 1e-9 ? rounded : scaled;
            };
            SparseRow out;
            // From W: row i of U_{l-1}, columns in clock sector l-1.
            for (const auto& e :
                 gate_row(u.gates[static_cast<std::size_t>(prev)], u.width, i))
              out.push_back({prev * dim + e.col, rescale(e.value)});
            // From W*: column i of U_l, columns in clock sector l+1.
            for (const auto& e :
                 gate_col(u.gates[static_cast<std::size_t>(l)], u.width, i))
              out.push_back({next * dim + e.col, rescale(e.value)});
            std::sort(out.begin(), out.end(), [](const SparseEntry& a,
                                                 const SparseEntry& b) {
              return a.col < b.col;
            });
            return out;
          },
          4, 2.0 * sqrt2),
      true,
      u};
  for (const Gate& g : u.gates)
    if (!g.two_sparse()) clock.two_sparse_layers = false;
  return clock;
}

ClockRowReport verify_clock_rows(const ClockHermitian& clock) {
  ClockRowReport report;
  const Index n = clock.dim();
  for (Index i = 0; i < n; ++i) {
    const SparseRow row = clock.a_matrix.row(i);
    ++report.rows_checked;
    if (row.size() != 4) ++report.rows_not_four_entries;
    for (const auto& e : row) {
      if (std::abs(std::abs(e.value) - 1.0) > tol::integer_entry) {
        ++report.rows_noninteger;
        break;
      }
    }
  }
  return report;
}

AnalyticSpectralMeasure analytic_measure(Index m_gates, double alpha1_sq) {
  if (m_gates < 3 || m_gates % 2 == 0)
    throw std::invalid_argument("analytic_measure: M must be odd and >= 3");
  if (alpha1_sq < 0.0 || alpha1_sq > 1.0)
    throw std::invalid_argument("analytic_measure: alpha1_sq outside [0, 1]");
  const double m = static_cast<double>(m_gates);
  const Index half = (m_gates - 1) / 2;
  AnalyticSpectralMeasure out;
  out.clock_size = m_gates;
  out.alpha1_sq = alpha1_sq;
  const double pi = std::acos(-1.0);
  for (Index l = 0; l <= half; ++l) {
    out.support0.push_back(std::cos(2.0 * pi * static_cast<double>(l) / m));
    out.weights0.push_back(l == 0 ? 1.0 / m : 2.0 / m);
  }
  for (Index l = 0; l <= half; ++l) {
    out.support1.push_back(std::cos(pi * static_cast<double>(2 * l + 1) / m));
    out.weights1.push_back(l == half ? 1.0 / m : 2.0 / m);
  }
  return out;
}

SpectralMeasure AnalyticSpectralMeasure::measure() const {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < support0.size(); ++k)
    if (alpha1_sq < 1.0) pts.emplace_back(support0[k], (1.0 - alpha1_sq) * weights0[k]);
  for (std::size_t k = 0; k < support1.size(); ++k)
    if (alpha1_sq > 0.0) pts.emplace_back(support1[k], alpha1_sq * weights1[k]);
  std::sort(pts.begin(), pts.end());
  SpectralMeasure out;
  for (const auto& [v, w] : pts) {
    out.values.push_back(v);
    out.weights.push_back(w);
  }
  return out;
}

double analytic_moment(const AnalyticSpectralMeasure& measure, Index m) {
  double s = 0.0;
  for (std::size_t k = 0; k < measure.support0.size(); ++k)
    s += (1.0 - measure.alpha1_sq) * measure.weights0[k] *
         std::pow(measure.support0[k], static_cast<double>(m));
  for (std::size_t k = 0; k < measure.support1.size(); ++k)
    s += measure.alpha1_sq * measure.weights1[k] *
         std::pow(measure.support1[k], static_cast<double>(m));
  return s;
}

GateCircuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  std::string tag, bits;
  int width = 0;
  in >> tag >> width >> bits;
  if (tag != "circuit" || width <= 0)
    throw std::runtime_error("circuit file: bad header in " + path);
  GateCircuit c;
  c.width = width;
  if (bits != "-")
    for (char ch : bits) {
      if (ch != '0' && ch != '1')
        throw std::runtime_error("circuit file: bad input bits in " + path);
      c.input_bits.push_back(ch - '0');
    }
  std::string kind;
  while (in >> kind) {
    if (kind == "h" || kind == "z") {
      int t;
      if (!(in >> t)) throw std::runtime_error("circuit file: truncated gate line");
      c.gates.push_back(kind == "h" ? Gate::h(t) : Gate::z(t));
    } else if (kind == "ht" || kind == "th") {
      int c1, c2, t;
      if (!(in >> c1 >> c2 >> t))
        throw std::runtime_error("circuit file: truncated gate line");
      c.gates.push_back(kind == "ht" ? Gate::ht(c1, c2, t) : Gate::th(c1, c2, t));
    } else {
      throw std::runtime_error("circuit file: gate '" + kind +
                               "' is not in the universal set {h, ht, th, z}");
    }
  }
  c.validate();
  return c;
}

void save_circuit(const GateCircuit& c, const std::string& path) {
  c.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  out << "circuit " << c.width << " ";
  if (c.input_bits.empty())
    out << "-";
  else
    for (int b : c.input_bits) out << b;
  out << "\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Hadamard:
        out << "h " << g.target << "\n";
        break;
      case GateKind::PauliZ:
        out << "z " << g.target << "\n";
        break;
      case GateKind::HadamardToffoli:
        out << "ht " << g.control1 << " " << g.control2 << " " << g.target << "\n";
        break;
      case GateKind::ToffoliHadamard:
        out << "th " << g.control1 << " " << g.control2 << " " << g.target << "\n";
        break;
    }
  }
}

}  // namespace specwalk
