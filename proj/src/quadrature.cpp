#include "defq/quadrature.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace defq {

namespace {

using Cplx = std::complex<double>;

// phi(p,q) = Im[Log(q-p) - Log(q-pbar)]; gradients w.r.t. the real
// coordinates of q (ground: dq; aerial: dqx,dqy) and of p (dpx,dpy).
struct Grad {
    double dq = 0, dqx = 0, dqy = 0, dpx = 0, dpy = 0;
};

Grad phi_grad(Cplx p, Cplx q, bool q_ground) {
    const Cplx w1 = 1.0 / (q - p);
    const Cplx w2 = 1.0 / (q - std::conj(p));
    Grad g;
    if (q_ground) {
        g.dq = std::imag(w1 - w2);
    } else {
        g.dqx = std::imag(w1 - w2);
        g.dqy = std::real(w1 - w2);
    }
    g.dpx = std::imag(-w1 + w2);
    g.dpy = -std::real(w1) - std::real(w2);
    return g;
}

double det_inplace(std::vector<double>& a, unsigned n) {
    double det = 1.0;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        for (unsigned r = c + 1; r < n; ++r)
            if (std::fabs(a[r * n + c]) > std::fabs(a[piv * n + c])) piv = r;
        if (a[piv * n + c] == 0.0) return 0.0;
        if (piv != c) {
            for (unsigned k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
            det = -det;
        }
        det *= a[c * n + c];
        for (unsigned r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / a[c * n + c];
            if (f == 0.0) continue;
            for (unsigned k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    return det;
}

} // namespace

QuadratureResult weight_quadrature(const AdmissibleGraph& g, std::uint64_t samples,
                                   std::uint64_t seed) {
    if (g.n > 2) throw std::invalid_argument("weight quadrature supports n <= 2");
    const auto E = g.edges();
    const unsigned D = static_cast<unsigned>(E.size());
    const unsigned ncoord = 2 * (g.n - 1) + g.m;
    if (D != ncoord) throw std::invalid_argument("weight quadrature: dimension mismatch");
    if (D == 0) return {1.0, 0.0, samples, seed};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const unsigned batches = 32;
    const std::uint64_t per = samples / batches;
    std::vector<double> batch_means;
    std::vector<Cplx> pts(g.n + g.m);
    std::vector<double> M(D * D);
    std::vector<double> qs(g.m);

    double mfact = 1.0;
    for (unsigned f = 2; f <= g.m; ++f) mfact *= f;

    for (unsigned b = 0; b < batches; ++b) {
        double acc = 0.0;
        for (std::uint64_t s = 0; s < per; ++s) {
            double jac = 1.0;
            pts[0] = Cplx(0.0, 1.0);
            // stratify the first coordinate across the batch
            double u0 = (static_cast<double>(s) + uni(rng)) / static_cast<double>(per);
            bool first = true;
            auto draw = [&]() {
                if (first) {
                    first = false;
                    return u0;
                }
                return uni(rng);
            };
            for (unsigned j = 1; j < g.n; ++j) {
                const double x = std::tan(M_PI * (draw() - 0.5));
                jac *= M_PI * (1.0 + x * x);
                const double y = std::tan(M_PI * draw() / 2.0);
                jac *= (M_PI / 2.0) * (1.0 + y * y);
                pts[j] = Cplx(x, y);
            }
            for (unsigned l = 0; l < g.m; ++l) {
                qs[l] = std::tan(M_PI * (draw() - 0.5));
                jac *= M_PI * (1.0 + qs[l] * qs[l]);
            }
            std::sort(qs.begin(), qs.begin() + g.m);
            for (unsigned l = 0; l < g.m; ++l) pts[g.n + l] = Cplx(qs[l], 0.0);
            jac /= mfact;

            std::fill(M.begin(), M.end(), 0.0);
            for (unsigned e = 0; e < D; ++e) {
                const auto [i, t] = E[e];
                const Grad gr = phi_grad(pts[i], pts[t], t >= g.n);
                if (i >= 1) {
                    M[e * D + 2 * (i - 1)] = gr.dpx;
                    M[e * D + 2 * (i - 1) + 1] = gr.dpy;
                }
                if (t >= g.n) {
                    M[e * D + 2 * (g.n - 1) + (t - g.n)] = gr.dq;
                } else if (t >= 1) {
                    M[e * D + 2 * (t - 1)] += gr.dqx;
                    M[e * D + 2 * (t - 1) + 1] += gr.dqy;
                }
            }
            acc += det_inplace(M, D) * jac;
        }
        batch_means.push_back(acc / static_cast<double>(per));
    }
    const double norm = std::pow(2.0 * M_PI, static_cast<double>(D));
    double mean = 0.0;
    for (double v : batch_means) mean += v;
    mean /= batch_means.size();
    double var = 0.0;
    for (double v : batch_means) var += (v - mean) * (v - mean);
    var /= (batch_means.size() - 1);
    QuadratureResult r;
    r.estimate = mean / norm;
    r.std_error = std::sqrt(var / batch_means.size()) / norm;
    r.samples = per * batches;
    r.seed = seed;
    return r;
}

} // namespace defq
