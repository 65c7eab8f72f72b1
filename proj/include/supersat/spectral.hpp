#pragma once

#include <vector>

namespace supersat {

// Eigenvalues of a dense symmetric matrix (row-major, dim x dim) by cyclic
// Jacobi rotations.  Returns the eigenvalues in descending order.  The
// input matrix is consumed.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim, int max_sweeps = 64);

// Cluster a descending eigenvalue list into distinct values: entries
// within tol of the cluster head collapse to their mean.
std::vector<double> cluster_values(const std::vector<double>& sorted_desc, double tol);

} // namespace supersat
