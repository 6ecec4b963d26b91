#include "cayley/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cayley {

std::vector<double> eigenvalues_numeric(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols())
        throw oracle_misuse_error("oracle needs a square matrix");
    if (a != a.transpose())
        throw oracle_misuse_error("oracle needs a symmetric matrix");
    if ((a.diagonal().array() != 0.0).any())
        throw oracle_misuse_error("oracle needs a zero diagonal");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw internal_error("symmetric eigensolver failed to converge");
    const Eigen::VectorXd& values = solver.eigenvalues(); // ascending
    return std::vector<double>(values.data(), values.data() + values.size());
}

NearIntegral near_integral(std::span<const double> values, double tol) {
    if (!(tol > 0.0))
        throw precondition_error("near-integral tolerance must be positive");
    NearIntegral result{true, 0.0};
    for (const double v : values) {
        const double dev = std::abs(v - std::round(v));
        result.max_deviation = std::max(result.max_deviation, dev);
        if (dev > tol)
            result.integral = false;
    }
    return result;
}

CharacterMatrix character_matrix(const AbelianGroup& g, std::int64_t cap) {
    const std::int64_t n = g.order();
    if (n > cap)
        throw resource_limit_error("group order " + std::to_string(n) +
                                   " exceeds the character-matrix cap " + std::to_string(cap));
    Eigen::MatrixXcd gamma(n - 1, n - 1);
    for (std::int64_t row = 1; row < n; ++row) {
        const GroupElement a = g.element_at(row);
        for (std::int64_t col = 1; col < n; ++col)
            gamma(row - 1, col - 1) = character_value(g, a, g.element_at(col)).value();
    }
    return CharacterMatrix{g, std::move(gamma)};
}

Eigen::VectorXd indicator_vector(const ConnectionSet& s) {
    const std::int64_t n = s.group().order();
    Eigen::VectorXd tau = Eigen::VectorXd::Zero(n - 1);
    for (const std::int64_t idx : s.indices())
        tau(idx - 1) = 1.0;
    return tau;
}

bool gamma_tau_spectrum_check(const ConnectionSet& s, double tol) {
    const CharacterMatrix gamma = character_matrix(s.group());
    const Eigen::VectorXcd product = gamma.gamma * indicator_vector(s).cast<std::complex<double>>();

    const SpectrumReport report = spectrum(s);
    for (Eigen::Index i = 0; i < product.size(); ++i) {
        const double lambda = report.mode == SpectrumReport::Mode::exact_integer
                                  ? static_cast<double>(report.exact_values[i + 1])
                                  : report.float_values[i + 1];
        if (std::abs(product(i) - lambda) > tol)
            return false;
    }
    return true;
}

namespace {

using BigInt = __int128;

// Fraction-free (Bareiss) determinant; every intermediate value is a minor
// of the input, so for n <= 17 and entries up to ~32 it stays within 128 bits.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

bool charpoly_matches_eigenvalues(const Eigen::MatrixXi& adjacency,
                                  std::span<const std::int64_t> eigenvalues) {
    const std::size_t n = static_cast<std::size_t>(adjacency.rows());
    if (adjacency.cols() != adjacency.rows())
        throw oracle_misuse_error("adjacency matrix must be square");
    if (n > 16)
        throw resource_limit_error("exact charpoly check is limited to |G| <= 16");
    if (eigenvalues.size() != n)
        throw oracle_misuse_error("need exactly one eigenvalue per vertex");

    // Two monic degree-n integer polynomials agreeing at n+1 points are equal.
    for (std::int64_t x = 0; x <= static_cast<std::int64_t>(n); ++x) {
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = (i == j ? BigInt(x) : BigInt(0)) - BigInt(adjacency(i, j));
        BigInt rhs = 1;
        for (const std::int64_t lambda : eigenvalues)
            rhs *= BigInt(x) - BigInt(lambda);
        if (det_bareiss(std::move(m)) != rhs)
            return false;
    }
    return true;
}

} // namespace cayley
