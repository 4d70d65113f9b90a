#pragma once

#include <Eigen/Dense>

#include <vector>

#include "micdt/ica.hpp"

namespace micdt {

struct StructuralMatrix {
    Eigen::MatrixXd s0;            // C x C, zero diagonal
    std::vector<int> causal_order; // causal_order[k] = channel index at position k
    bool pruned = false;           // true once strict lower-triangularity is enforced
};

// LiNGAM post-processing of an ICA unmixing matrix:
//  1. permute rows so no diagonal entry is (near) zero, minimizing sum 1/|w_ii|
//     (exhaustive for C <= 8, Hungarian assignment on -log|w_ij| beyond);
//  2. scale each row so the diagonal is one;
//  3. s0 = I - W_scaled, diagonal forced to zero exactly;
//  4. record the row/column permutation with the least squared mass above the
//     diagonal as causal_order (exhaustive for C <= 8, greedy beyond).
// The row scaling cancels ICA's sign/scale ambiguity, so s0 depends only on
// the separating solution, not on the iteration path to it.
// Throws PermutationDegenerateError when even the best permutation leaves a
// diagonal entry below 1e-8 in magnitude.
StructuralMatrix lingam_from_ica(const IcaResult& ica);

// Zeroes entries below the threshold, then masks everything above the
// diagonal in causal_order, leaving a strictly lower-triangular (acyclic)
// matrix in the permuted frame: at most one direction per pair survives.
StructuralMatrix prune_to_dag(const StructuralMatrix& s, double threshold);

namespace detail {

// Minimum-cost assignment (Hungarian algorithm, O(n^3)). Returns row_of[j]:
// the row assigned to column j.
std::vector<int> hungarian_assignment(const Eigen::MatrixXd& cost);

// Row permutation minimizing sum_i 1/|w[perm[i], i]|.
std::vector<int> diagonal_permutation(const Eigen::MatrixXd& w);

// Simultaneous row/column permutation minimizing squared mass above the
// diagonal of s0.
std::vector<int> best_causal_order(const Eigen::MatrixXd& s0);

double upper_triangular_mass(const Eigen::MatrixXd& s0, const std::vector<int>& order);

}  // namespace detail

}  // namespace micdt
