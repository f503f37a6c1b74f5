#include "sgbal/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgbal {

namespace {

double off_diagonal_norm(const SymMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = i + 1; j < m.n(); ++j) sum += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * sum);
}

} // namespace

std::vector<double> jacobi_eigenvalues(SymMatrix m, const std::string& what) {
    constexpr double kTolerance = 1e-10;
    constexpr int kMaxSweeps = 100;
    const int n = m.n();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(m) < kTolerance) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle zeroing a_pq; the stable tangent formula
                // avoids cancellation when theta is large.
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = m.at(p, p);
                const double aqq = m.at(q, q);
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = m.at(k, p);
                    const double akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(p, k) = m.at(k, p);
                    m.at(k, q) = s * akp + c * akq;
                    m.at(q, k) = m.at(k, q);
                }
            }
        }
    }
    if (off_diagonal_norm(m) >= kTolerance)
        throw std::runtime_error("eigensolver did not converge on " + what + " within 100 sweeps");

    std::vector<double> eigenvalues(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = m.at(i, i);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

} // namespace sgbal
