#include "cycov/periods.hpp"

#include <cmath>
#include <string>

namespace cycov {

namespace {

double condition_number(const Eigen::MatrixXd& m)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double lo = s(s.size() - 1);
    return lo == 0 ? INFINITY : s(0) / lo;
}

double condition_number(const ComplexMatrix& m)
{
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double lo = s(s.size() - 1);
    return lo == 0 ? INFINITY : s(0) / lo;
}

void check_shape(const PeriodMatrix& pm)
{
    const auto g = pm.entries.rows();
    if (g < 1 || pm.entries.cols() != 2 * g)
        throw Error("period matrix must be g x 2g, got " + std::to_string(pm.entries.rows()) + " x " +
                    std::to_string(pm.entries.cols()));
}

}  // namespace

JacobianResult jacobian(const PeriodMatrix& pm)
{
    check_shape(pm);
    const ComplexMatrix A = pm.a_block();
    JacobianResult r;
    r.condition = condition_number(A);
    if (!std::isfinite(r.condition) || r.condition > kMaxCondition)
        throw Error("A block is singular or ill-conditioned (condition " + std::to_string(r.condition) + ")");
    r.J = A.fullPivLu().solve(pm.b_block());
    r.asymmetry = (r.J - r.J.transpose()).cwiseAbs().maxCoeff();
    const Eigen::MatrixXd im = r.J.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (im + im.transpose()));
    r.min_imag_eigen = es.eigenvalues().minCoeff();
    return r;
}

CoefficientSolve solve_coefficients(const PeriodMatrix& pm, const LatticeMatrix& lat)
{
    check_shape(pm);
    const auto g = pm.entries.rows();
    if (lat.entries.cols() != 2 * g)
        throw Error("lattice matrix has " + std::to_string(lat.entries.cols()) + " columns, expected " +
                    std::to_string(2 * g));
    // Re(sum_j (x_j + i y_j) Pi_jk) = sum_j x_j Re Pi_jk - y_j Im Pi_jk
    Eigen::MatrixXd M(2 * g, 2 * g);
    M.leftCols(g) = pm.entries.real().transpose();
    M.rightCols(g) = -pm.entries.imag().transpose();
    CoefficientSolve out;
    out.condition = condition_number(M);
    if (!std::isfinite(out.condition) || out.condition > kMaxCondition)
        throw Error("coefficient system is singular or ill-conditioned (condition " + std::to_string(out.condition) +
                    ")");
    const auto lu = M.fullPivLu();
    const auto rows = lat.entries.rows();
    out.a.resize(rows, g);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Eigen::VectorXd xy = lu.solve(lat.entries.row(r).transpose());
        for (Eigen::Index j = 0; j < g; ++j) out.a(r, j) = Complex(xy(j), xy(g + j));
    }
    const Eigen::MatrixXd back = (out.a * pm.entries).real();
    out.residual = rows == 0 ? 0.0 : (back - lat.entries).cwiseAbs().maxCoeff();
    return out;
}

PeriodMatrix octa4_period_matrix()
{
    const double s = std::sqrt(2.0);
    const Complex i(0, 1);
    PeriodMatrix pm;
    pm.entries.resize(3, 6);
    pm.entries << 1.0 - i, (-1.0 - i) / (1 + s), (1.0 + i) / (1 + s), 1.0 + i, s, 2 - s,
        -2.0 * i, 2.0 * i, 2.0 * i, 2.0 * i, -2.0, -2.0,
        -1.0 - i, (1 + s) * (1.0 - i), (1 + s) * (-1.0 + i), 1.0 - i, s * i, -(2 + s) * i;
    return pm;
}

LatticeMatrix octa4_lattice()
{
    LatticeMatrix lat;
    lat.entries.resize(3, 6);
    lat.entries << 0, 0, 0, 2, 0, 2,
        0, 0, 0, 0, -2, -2,
        0, 0, 0, 2, 2, 0;
    return lat;
}

ComplexMatrix octa4_expected_coefficients()
{
    const double s = std::sqrt(2.0);
    const Complex i(0, 1);
    ComplexMatrix a(3, 3);
    a << (2 + s - (4 + 3 * s) * i) / (4 + 2 * s), 0.0, (1 - s + i) / 2.0,
        0.0, 1.0, 0.0,
        (1 + s - i) / 2.0, 0.0, (1.0 + (1 - s) * i) / 2.0;
    return a;
}

ComplexMatrix octa4_expected_jacobian()
{
    const Complex i(0, 1);
    const Complex h = (1.0 + i) / 2.0;
    ComplexMatrix J(3, 3);
    J << i, h, h,
        h, i, h,
        h, h, i;
    return J;
}

nlohmann::json to_json(const ComplexMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json to_json(const RealMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

namespace {

template <class F>
void for_each_cell(const nlohmann::json& j, Eigen::Index& rows, Eigen::Index& cols, F&& f)
{
    if (!j.is_array() || j.empty()) throw Error("matrix JSON must be a non-empty array of rows");
    rows = static_cast<Eigen::Index>(j.size());
    cols = static_cast<Eigen::Index>(j.at(0).size());
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw Error("ragged matrix JSON");
        for (Eigen::Index c = 0; c < cols; ++c) f(r, c, row.at(static_cast<std::size_t>(c)));
    }
}

}  // namespace

ComplexMatrix complex_matrix_from_json(const nlohmann::json& j)
{
    Eigen::Index rows = 0, cols = 0;
    std::vector<std::tuple<Eigen::Index, Eigen::Index, Complex>> cells;
    try {
        for_each_cell(j, rows, cols, [&](Eigen::Index r, Eigen::Index c, const nlohmann::json& v) {
            if (v.is_number()) cells.emplace_back(r, c, Complex(v.get<double>(), 0));
            else if (v.is_array() && v.size() == 2) cells.emplace_back(r, c, Complex(v[0].get<double>(), v[1].get<double>()));
            else throw Error("complex entries must be numbers or [re, im] pairs");
        });
    }
    catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed matrix JSON: ") + e.what());
    }
    ComplexMatrix m(rows, cols);
    for (const auto& [r, c, v] : cells) m(r, c) = v;
    return m;
}

RealMatrix real_matrix_from_json(const nlohmann::json& j)
{
    Eigen::Index rows = 0, cols = 0;
    std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> cells;
    try {
        for_each_cell(j, rows, cols, [&](Eigen::Index r, Eigen::Index c, const nlohmann::json& v) {
            cells.emplace_back(r, c, v.get<double>());
        });
    }
    catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed matrix JSON: ") + e.what());
    }
    RealMatrix m(rows, cols);
    for (const auto& [r, c, v] : cells) m(r, c) = v;
    return m;
}

}  // namespace cycov
