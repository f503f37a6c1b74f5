#pragma once

#include <string>
#include <vector>

namespace sgbal {

// Dense symmetric matrix, row-major, used by the spectral measures.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int n() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<double> a_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotation sweeps, sorted
// ascending.  Converged when the off-diagonal Frobenius norm drops below
// 1e-10; throws std::runtime_error naming `what` if 100 sweeps do not get
// there.  Operates on a private copy of the input.
std::vector<double> jacobi_eigenvalues(SymMatrix m, const std::string& what);

} // namespace sgbal
