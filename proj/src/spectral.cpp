#include "hsauto/spectral.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_levels(const TransitionMatrix& a, std::size_t from, bool reverse) {
  const std::size_t d = a.order();
  std::vector<std::size_t> level(d, kUnreached);
  std::deque<std::size_t> queue{from};
  level[from] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < d; ++v) {
      const BigInt& e = reverse ? a(v, u) : a(u, v);
      if (e != 0 && level[v] == kUnreached) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

void require_irreducible(const TransitionMatrix& a) {
  if (!is_irreducible(a)) throw NotIrreducible("transition matrix is not irreducible");
}

}  // namespace

TransitionMatrix::TransitionMatrix(std::size_t d, std::vector<BigInt> entries) : d_(d), entries_(std::move(entries)) {
  if (entries_.size() != d_ * d_) throw std::invalid_argument("transition matrix must be square");
  for (const auto& e : entries_)
    if (e < 0) throw std::invalid_argument("transition matrix entries must be non-negative");
}

TransitionMatrix TransitionMatrix::identity(std::size_t d) {
  TransitionMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

TransitionMatrix TransitionMatrix::from_graph(const SchreierGraph& g) {
  TransitionMatrix m(g.index());
  for (std::size_t a = 0; a < g.rank(); ++a)
    for (State s = 0; s < g.index(); ++s) m(s, g.target(a, s)) += 1;
  return m;
}

std::optional<BigInt> TransitionMatrix::line_sum() const {
  if (d_ == 0) return std::nullopt;
  BigInt target = 0;
  for (std::size_t j = 0; j < d_; ++j) target += (*this)(0, j);
  for (std::size_t i = 0; i < d_; ++i) {
    BigInt row = 0, col = 0;
    for (std::size_t j = 0; j < d_; ++j) {
      row += (*this)(i, j);
      col += (*this)(j, i);
    }
    if (row != target || col != target) return std::nullopt;
  }
  return target;
}

TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("matrix order mismatch");
  const std::size_t d = a.d_;
  TransitionMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

TransitionMatrix matrix_power(const TransitionMatrix& a, std::size_t k) {
  TransitionMatrix result = TransitionMatrix::identity(a.order());
  TransitionMatrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_irreducible(const TransitionMatrix& a) {
  if (a.order() == 0) return false;
  for (bool reverse : {false, true}) {
    const auto level = bfs_levels(a, 0, reverse);
    for (auto l : level)
      if (l == kUnreached) return false;
  }
  return true;
}

std::size_t period(const TransitionMatrix& a) {
  require_irreducible(a);
  const auto level = bfs_levels(a, 0, false);
  // every closed walk length is a sum of edge defects level(u) + 1 - level(v)
  std::size_t h = 0;
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = 0; v < a.order(); ++v) {
      if (a(u, v) == 0) continue;
      const long defect = static_cast<long>(level[u]) + 1 - static_cast<long>(level[v]);
      h = std::gcd(h, static_cast<std::size_t>(defect < 0 ? -defect : defect));
    }
  return h;
}

MinExponents min_exponents(const TransitionMatrix& a) {
  require_irreducible(a);
  MinExponents out{a.order(), std::vector<std::size_t>(a.order() * a.order())};
  for (std::size_t i = 0; i < a.order(); ++i) {
    const auto level = bfs_levels(a, i, false);
    for (std::size_t j = 0; j < a.order(); ++j) out.m[i * a.order() + j] = level[j];
  }
  return out;
}

BigInt count_words(const TransitionMatrix& a, std::size_t b, std::size_t f, std::size_t k) {
  return matrix_power(a, k)(b, f);
}

LimitData limit_data(std::size_t d) {
  LimitData out;
  out.left.assign(d, Rational(1, static_cast<long>(d)));
  out.right.assign(d, Rational(1));
  out.projector = RationalMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.projector(i, j) = out.right[i] * out.left[j];
  return out;
}

RationalMatrix build_B_matrix(const SchreierGraph& g) {
  const auto a = TransitionMatrix::from_graph(g);
  const std::size_t d = g.index();
  const std::size_t h = period(a);
  const auto m = min_exponents(a);
  RationalMatrix b(d, h);
  const Rational value(static_cast<long>(h), static_cast<long>(d));
  for (std::size_t i = 0; i < d; ++i) b(i, m(0, i) % h) = value;
  return b;
}

LimitReport check_limits(const SchreierGraph& g, std::size_t horizon, const Rational& tolerance) {
  const auto a = TransitionMatrix::from_graph(g);
  const std::size_t d = g.index();
  const std::size_t h = period(a);
  if (horizon < 4 * d * h)
    throw std::invalid_argument("limit horizon must be at least 4 d h = " + std::to_string(4 * d * h));
  const auto m = min_exponents(a);
  const BigInt n = g.rank();

  LimitReport report;
  report.d = d;
  report.h = h;
  report.horizon = horizon;
  report.tolerance = tolerance;
  report.expected = Rational(1, static_cast<long>(d));

  std::vector<LimitCell> cells(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cells[i * d + j].row = i;
      cells[i * d + j].col = j;
    }

  if (h == 1) {
    const auto power = matrix_power(a, horizon);
    const BigInt scale = boost::multiprecision::pow(n, static_cast<unsigned>(horizon));
    for (auto& cell : cells) cell.value = Rational(power(cell.row, cell.col), scale);
  } else {
    std::vector<Rational> sums(d * d);
    TransitionMatrix power = TransitionMatrix::identity(d);
    BigInt scale = 1;
    for (std::size_t k = 1; k <= horizon; ++k) {
      power = power * a;
      scale *= n;
      for (auto& cell : cells) {
        const BigInt& e = power(cell.row, cell.col);
        const bool residue = k % h == m(cell.row, cell.col) % h;
        if (e != 0 && !residue) cell.zero_pattern_ok = false;
        if (e == 0 && residue && 2 * k > horizon) cell.zero_pattern_ok = false;
        if (e != 0) sums[cell.row * d + cell.col] += Rational(e, scale);
      }
    }
    for (auto& cell : cells) cell.value = sums[cell.row * d + cell.col] / static_cast<long>(horizon);
  }

  report.pass = true;
  for (auto& cell : cells) {
    cell.deviation = boost::multiprecision::abs(cell.value - report.expected);
    cell.pass = cell.zero_pattern_ok && cell.deviation < tolerance;
    report.pass = report.pass && cell.pass;
  }
  report.cells = std::move(cells);
  return report;
}

bool divisibility_check(const SchreierGraph& g) {
  return g.index() % period(TransitionMatrix::from_graph(g)) == 0;
}

RationalFunction generating_function(const CosetAutomaton& c) {
  const auto a = TransitionMatrix::from_graph(c.graph);
  const std::size_t d = a.order();
  const std::size_t f = c.accept;

  // M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I, and
  // (I - zA)^-1 = (sum_k M_k z^(k-1)) / (sum_k c_k z^k).
  // M_k has signed entries, so it lives in a plain row-major buffer.
  std::vector<BigInt> num(d), den(d + 1);
  den[0] = 1;
  std::vector<BigInt> mk(d * d), am(d * d);
  for (std::size_t i = 0; i < d; ++i) mk[i * d + i] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    num[k - 1] = mk[f];  // row 0 is the start state
    std::fill(am.begin(), am.end(), BigInt(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) am[i * d + j] += a(i, l) * mk[l * d + j];
      }
    BigInt trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += am[i * d + i];
    BigInt q, r;
    boost::multiprecision::divide_qr(BigInt(-trace), BigInt(k), q, r);
    if (r != 0) throw std::logic_error("characteristic polynomial coefficient is not integral");
    den[k] = q;
    for (std::size_t i = 0; i < d; ++i) am[i * d + i] += q;
    std::swap(mk, am);
  }
  return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

}  // namespace hsauto
