#ifndef HSAUTO_SPECTRAL_HPP
#define HSAUTO_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "hsauto/numeric.hpp"
#include "hsauto/polynomial.hpp"
#include "hsauto/schreier.hpp"

namespace hsauto {

/// Square non-negative integer matrix; entry (i, j) counts edges i -> j.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::size_t d) : d_(d), entries_(d * d) {}
  /// Row-major entries; throws std::invalid_argument on negative entries
  /// or a non-square shape.
  TransitionMatrix(std::size_t d, std::vector<BigInt> entries);

  static TransitionMatrix identity(std::size_t d);
  static TransitionMatrix from_graph(const SchreierGraph& g);

  std::size_t order() const { return d_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * d_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * d_ + j]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  /// The common row and column sum, if every row and column sums to it.
  /// For a Schreier graph this is the rank n, the Perron-Frobenius value.
  std::optional<BigInt> line_sum() const;

  friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b);
  bool operator==(const TransitionMatrix&) const = default;

 private:
  std::size_t d_ = 0;
  std::vector<BigInt> entries_;
};

TransitionMatrix matrix_power(const TransitionMatrix& a, std::size_t k);

bool is_irreducible(const TransitionMatrix& a);

/// gcd of the lengths of closed walks; throws NotIrreducible.
std::size_t period(const TransitionMatrix& a);

/// m(i, j): least k >= 0 with (A^k)_ij != 0, i.e. the directed distance.
/// Not clamped to the period; only its residue matters downstream.
struct MinExponents {
  std::size_t d = 0;
  std::vector<std::size_t> m;

  std::size_t operator()(std::size_t i, std::size_t j) const { return m[i * d + j]; }
};

MinExponents min_exponents(const TransitionMatrix& a);

/// (A^k)_{bf}: number of positive words of length k leading from b to f.
BigInt count_words(const TransitionMatrix& a, std::size_t b, std::size_t f, std::size_t k);

/// Uniform left/right Perron vectors of a Schreier matrix and P = v_R v_L.
struct LimitData {
  std::vector<Rational> left;
  std::vector<Rational> right;
  RationalMatrix projector;
};

LimitData limit_data(std::size_t d);

/// d x h table of limiting word proportions from the basepoint: row i has
/// h/d in column m(0, i) mod h and 0 elsewhere.
RationalMatrix build_B_matrix(const SchreierGraph& g);

struct LimitCell {
  std::size_t row = 0;
  std::size_t col = 0;
  /// Periodic graphs: (A^k)_ij == 0 whenever k != m_ij mod h, k <= K, and
  /// (A^k)_ij != 0 whenever k == m_ij mod h, K/2 < k <= K. Zeros at matching
  /// residues do occur below that (index 6, h = 2: (A^2)_22 == 0 for
  /// a = (0 1)(2 3 4 5), b = (0 1 2 3)(4 5)).
  bool zero_pattern_ok = true;
  /// Aperiodic: (A^K)_ij / n^K. Periodic: mean of (A^m)_ij / n^m, m = 1..K.
  Rational value;
  Rational deviation;
  bool pass = false;
};

struct LimitReport {
  std::size_t d = 0;
  std::size_t h = 0;
  std::size_t horizon = 0;
  Rational tolerance;
  Rational expected;
  std::vector<LimitCell> cells;
  bool pass = false;
};

/// Checks the limiting behaviour of A^k / n^k in exact arithmetic.
/// Requires horizon >= 4 d h (std::invalid_argument otherwise).
LimitReport check_limits(const SchreierGraph& g, std::size_t horizon, const Rational& tolerance);

/// True iff period(A) divides the index.
bool divisibility_check(const SchreierGraph& g);

/// p(z) = sum_k (A^k)_{0, accept} z^k as the (0, accept) entry of
/// (I - zA)^-1, via the Faddeev-LeVerrier adjugate recurrence.
RationalFunction generating_function(const CosetAutomaton& c);

}  // namespace hsauto

#endif  // HSAUTO_SPECTRAL_HPP
