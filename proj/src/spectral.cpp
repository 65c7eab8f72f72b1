#include "supersat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace supersat {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim, int max_sweeps) {
    if (dim < 0 || static_cast<size_t>(dim) * dim != a.size())
        throw std::invalid_argument("jacobi_eigenvalues: bad dimensions");
    auto at = [&a, dim](int r, int c) -> double& { return a[static_cast<size_t>(r) * dim + c]; };

    double frob2 = 0;
    for (double v : a) frob2 += v * v;
    const double stop = 1e-24 * (frob2 > 0 ? frob2 : 1.0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off2 = 0;
        for (int p = 0; p < dim; ++p)
            for (int q = p + 1; q < dim; ++q) off2 += 2 * at(p, q) * at(p, q);
        if (off2 < stop) break;

        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double tau = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1.0 / std::sqrt(1 + t * t);
                double s = t * c;
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int r = 0; r < dim; ++r) {
                    if (r == p || r == q) continue;
                    double arp = at(r, p), arq = at(r, q);
                    at(r, p) = c * arp - s * arq;
                    at(p, r) = at(r, p);
                    at(r, q) = s * arp + c * arq;
                    at(q, r) = at(r, q);
                }
            }
        }
    }

    std::vector<double> eig(dim);
    for (int i = 0; i < dim; ++i) eig[i] = at(i, i);
    std::sort(eig.rbegin(), eig.rend());
    return eig;
}

std::vector<double> cluster_values(const std::vector<double>& sorted_desc, double tol) {
    std::vector<double> out;
    size_t i = 0;
    while (i < sorted_desc.size()) {
        size_t j = i;
        double head = sorted_desc[i];
        double sum = 0;
        while (j < sorted_desc.size() && head - sorted_desc[j] <= tol) sum += sorted_desc[j++];
        out.push_back(sum / static_cast<double>(j - i));
        i = j;
    }
    return out;
}

} // namespace supersat
