#pragma once

// Period matrices: Jacobian A^{-1}B with Riemann-relation diagnostics, and
// the real solve for coefficients a with Re(a * Pi) = P.

#include <complex>

#include <Eigen/Dense>
#include <json.hpp>

#include "cycov/error.hpp"

namespace cycov {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// g x 2g; columns are cycles (alpha_1..alpha_g, beta_1..beta_g), rows are
/// the 1-forms.
struct PeriodMatrix {
    ComplexMatrix entries;
    long genus() const { return entries.rows(); }
    ComplexMatrix a_block() const { return entries.leftCols(entries.rows()); }
    ComplexMatrix b_block() const { return entries.rightCols(entries.rows()); }
};

/// 3 x 2g real periods of the embedded surface.
struct LatticeMatrix {
    RealMatrix entries;
};

struct JacobianResult {
    ComplexMatrix J;
    double asymmetry = 0;        // max |J - J^T|
    double min_imag_eigen = 0;   // smallest eigenvalue of Im J (symmetrised)
    double condition = 0;        // of A
    bool symmetric(double tol = 1e-12) const { return asymmetry < tol; }
    bool positive_definite() const { return min_imag_eigen > 0; }
};

/// Throws when A is singular or badly conditioned.
JacobianResult jacobian(const PeriodMatrix& pm);

struct CoefficientSolve {
    ComplexMatrix a;        // 3 x g
    double residual = 0;    // max |Re(a Pi) - P|
    double condition = 0;
};

/// Throws when the real 2g x 2g system is singular or badly conditioned.
CoefficientSolve solve_coefficients(const PeriodMatrix& pm, const LatticeMatrix& lat);

constexpr double kResidualTol = 1e-9;
constexpr double kSymmetryTol = 1e-12;
constexpr double kMaxCondition = 1e12;

/// Built-in Octa-4 data evaluated from the exact expressions.
PeriodMatrix octa4_period_matrix();
LatticeMatrix octa4_lattice();
ComplexMatrix octa4_expected_coefficients();
ComplexMatrix octa4_expected_jacobian();

/// Complex numbers as [re, im] pairs; matrices as arrays of rows.
nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const RealMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);
RealMatrix real_matrix_from_json(const nlohmann::json& j);

}  // namespace cycov
