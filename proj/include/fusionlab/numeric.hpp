#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusionlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Error in user input or arithmetic preconditions (division by zero, bad grammar, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity could not be decided at the current working precision
/// (interval straddling zero in a denominator and the like).
class IndeterminateError : public Error {
public:
    explicit IndeterminateError(const std::string& what) : Error(what) {}
};

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return rat_den(q) == 1; }

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt_floor(const BigInt& n);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot_floor(const BigInt& n, unsigned k);

/// n = square * d with d squarefree; returns {sqrt_part, squarefree_part}.
/// Sign of n goes to the squarefree part. Requires |n| to factor by trial
/// division within the supported desk-scale range.
struct SquarefreeSplit {
    BigInt square_root;   // s with n = s^2 * d
    long long squarefree; // d
};
SquarefreeSplit squarefree_split(const BigInt& n);

/// Nearest integer to num/den (den > 0), ties toward even not needed; rounds half away from zero.
BigInt div_round_nearest(const BigInt& num, const BigInt& den);

/// ceil(num/den) for den > 0.
BigInt div_ceil(const BigInt& num, const BigInt& den);

/// Number of bits of |n| (0 for n = 0).
unsigned bit_length(const BigInt& n);

/// Exact rational value of a finite double.
BigRat rat_from_double(double x);

} // namespace fusionlab
