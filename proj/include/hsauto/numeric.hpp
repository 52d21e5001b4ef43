#ifndef HSAUTO_NUMERIC_HPP
#define HSAUTO_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace hsauto {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Row-major dense matrix of exact rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  std::vector<Rational> column_sums() const {
    std::vector<Rational> sums(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) sums[j] += (*this)(i, j);
    return sums;
  }

  std::vector<std::size_t> nonzeros_per_row() const {
    std::vector<std::size_t> counts(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0) ++counts[i];
    return counts;
  }

  std::vector<std::size_t> nonzeros_per_column() const {
    std::vector<std::size_t> counts(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0) ++counts[j];
    return counts;
  }

  bool operator==(const RationalMatrix&) const = default;
};

}  // namespace hsauto

#endif  // HSAUTO_NUMERIC_HPP
