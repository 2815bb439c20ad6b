#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace deltaspin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DegenerateMomenta : Error { using Error::Error; };
struct PathInconsistency : Error { using Error::Error; };
struct OnContactPlane : Error { using Error::Error; };
struct NoSimultaneousEigenvector : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// True when every entry of m is finite (no NaN/Inf).
inline bool is_finite(const Matrix& m) { return m.allFinite(); }
inline bool is_finite(const RealMatrix& m) { return m.allFinite(); }

}  // namespace deltaspin
