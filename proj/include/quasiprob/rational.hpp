#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace quasiprob {

/// Exact rational scalar used throughout the engine. GMP keeps every value
/// in lowest terms; binary floating point appears only in presentation-layer
/// approximations, never in a computation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = DenseVector<Rational>;
using RationalMatrix = DenseMatrix<Rational>;

/// Canonical "p/q" rendering ("5", "-3/4"); inverse of parse_rational.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Presentation-only double approximation.
double to_double(const Rational& q);

/// Short decimal rendering ("%.6g") for report annotations.
std::string decimal_string(const Rational& q);

/// Parses an optionally signed integer or "a/b" fraction. The result is
/// always stored in lowest terms. Throws std::invalid_argument on anything
/// else (including decimals; see rational_from_decimal).
Rational parse_rational(std::string_view text);

std::optional<Rational> try_parse_rational(std::string_view text);

/// Exact conversion of a decimal literal such as "-0.125" (-> -1/8).
Rational rational_from_decimal(std::string_view text);

}  // namespace quasiprob
