#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "cayley/spectrum.hpp"

// Brute-force verification layer. Deliberately shares no code with
// eigenvalue_exact: eigenvalues come from a dense symmetric eigensolver on
// the adjacency matrix, so agreement between the two routes is evidence.

namespace cayley {

inline constexpr std::int64_t kDefaultCharacterMatrixCap = 64;

/// All eigenvalues of a symmetric 0/1 matrix with zero diagonal, sorted
/// ascending. Throws oracle_misuse_error on non-symmetric or nonzero-diagonal input.
std::vector<double> eigenvalues_numeric(const Eigen::MatrixXd& a);

struct NearIntegral {
    bool integral = false;
    double max_deviation = 0.0;
};

/// True iff every value lies within tol of an integer; reports the largest
/// distance seen either way. tol must be positive.
NearIntegral near_integral(std::span<const double> values, double tol);

/// The (n-1) x (n-1) matrix of character values over G \ {0}, rows and
/// columns in iteration order: Gamma(g, h) = chi_g(h). Nonsingular, and
/// every row sums to -1.
struct CharacterMatrix {
    AbelianGroup group;
    Eigen::MatrixXcd gamma;
};

CharacterMatrix character_matrix(const AbelianGroup& g,
                                 std::int64_t cap = kDefaultCharacterMatrixCap);

/// 0/1 membership vector of S over G \ {0}, in iteration order.
Eigen::VectorXd indicator_vector(const ConnectionSet& s);

/// Checks Gamma * indicator(S) against the nonzero-indexed part of
/// spectrum(S) entrywise within tol.
bool gamma_tau_spectrum_check(const ConnectionSet& s, double tol = 1e-9);

/// Slow exact mode, |G| <= 16: verifies that prod_g (x - lambda_g) is the
/// characteristic polynomial of the adjacency matrix by evaluating both at
/// n+1 integer points with fraction-free (Bareiss) integer determinants.
/// No floating point is involved anywhere.
bool charpoly_matches_eigenvalues(const Eigen::MatrixXi& adjacency,
                                  std::span<const std::int64_t> eigenvalues);

} // namespace cayley
