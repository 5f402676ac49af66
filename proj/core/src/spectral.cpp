#include "ttb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"

namespace ttb {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

} // namespace

void eig_hermitian_matrix(const ComplexMatrix& m, std::vector<double>& eigenvalues,
                          ComplexMatrix& eigenvectors) {
    const Index n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm = a.frobenius_norm();
    eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
    if (norm == 0.0) {
        eigenvectors = std::move(v);
        return;
    }
    const double tol = config::kJacobiTol * norm;
    const double skip = tol / (4.0 * static_cast<double>(n) * static_cast<double>(n));

    bool converged = false;
    for (int sweep = 0; sweep < config::kJacobiMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= tol) {
            converged = true;
            break;
        }
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double absa = std::abs(apq);
                if (absa <= skip) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / absa; // e^{i phi}

                // tan(2 theta) = 2|a_pq| / (a_pp - a_qq)
                const double tau = (app - aqq) / (2.0 * absa);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // G acts on the (p,q) plane: G = [[c, -s e^{i phi}],
                //                                 [s e^{-i phi}, c]]
                const Complex gpq = -s * phase;
                const Complex gqp = s * std::conj(phase);

                // A <- G^H A (rows p and q).
                for (Index j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj + std::conj(gqp) * aqj;
                    a(q, j) = std::conj(gpq) * apj + c * aqj;
                }
                // A <- A G and V <- V G (columns p and q).
                for (Index i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = aip * c + aiq * gqp;
                    a(i, q) = aip * gpq + aiq * c;
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = vip * c + viq * gqp;
                    v(i, q) = vip * gpq + viq * c;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};
            }
        }
    }
    if (!converged && offdiag_norm(a) > tol)
        throw ConvergenceError("eig_hermitian: Jacobi did not converge");

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
        return a(i, i).real() > a(j, j).real();
    });

    eigenvectors = ComplexMatrix(n, n);
    for (Index c = 0; c < n; ++c) {
        const Index src = order[static_cast<std::size_t>(c)];
        eigenvalues[static_cast<std::size_t>(c)] = a(src, src).real();
        for (Index r = 0; r < n; ++r) eigenvectors(r, c) = v(r, src);
    }
}

SpectralDecomposition eig_hermitian(const HermitianTensor& h) {
    SpectralDecomposition out;
    out.shape = h.shape();
    eig_hermitian_matrix(h.matrix(), out.eigenvalues, out.eigenvectors);
    const double top = out.eigenvalues.empty() ? 0.0 : std::abs(out.eigenvalues.front());
    const double tol = config::kTolRank * std::max(1.0, top);
    out.hermitian_rank = 0;
    for (double lam : out.eigenvalues)
        if (std::abs(lam) > tol) ++out.hermitian_rank;
    return out;
}

SquareTensor SpectralDecomposition::assemble(const std::vector<double>& vals) const {
    std::vector<Complex> z(vals.begin(), vals.end());
    return assemble_complex(z);
}

SquareTensor SpectralDecomposition::assemble_complex(const std::vector<Complex>& vals) const {
    const Index d = eigenvectors.rows();
    if (static_cast<Index>(vals.size()) != d)
        throw ShapeError("SpectralDecomposition::assemble: need d values");
    ComplexMatrix m(d, d);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            Complex s = 0.0;
            for (Index i = 0; i < d; ++i)
                s += eigenvectors(r, i) * vals[static_cast<std::size_t>(i)] *
                     std::conj(eigenvectors(c, i));
            m(r, c) = s;
        }
    return SquareTensor(shape, std::move(m));
}

HermitianTensor tensor_function(const HermitianTensor& h, const ScalarFn& f,
                                bool domain_check,
                                const std::function<bool(double)>& domain_ok,
                                const std::string& fn_name) {
    SpectralDecomposition dec = eig_hermitian(h);
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
        const double lam = dec.eigenvalues[i];
        if (domain_check && domain_ok && !domain_ok(lam)) {
            std::ostringstream msg;
            msg << "tensor_function: eigenvalue " << lam << " outside domain of " << fn_name;
            throw DomainError(msg.str());
        }
        mapped[i] = f(lam);
    }
    return HermitianTensor(dec.assemble(mapped));
}

HermitianTensor tensor_exp(const HermitianTensor& h) {
    return tensor_function(h, [](double x) { return std::exp(x); });
}

HermitianTensor tensor_log(const HermitianTensor& h) {
    return tensor_function(
        h, [](double x) { return std::log(x); }, true,
        [](double x) { return x > 0.0; }, "log");
}

HermitianTensor tensor_sqrt_psd(const HermitianTensor& h) {
    SpectralDecomposition dec = eig_hermitian(h);
    const double top = dec.eigenvalues.empty() ? 0.0 : std::abs(dec.eigenvalues.front());
    const double clamp = config::kAbsClamp * std::max(1.0, top);
    std::vector<double> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
        double lam = dec.eigenvalues[i];
        if (lam < 0.0) {
            if (lam < -clamp)
                throw InternalError("tensor_sqrt_psd: eigenvalue below clamp tolerance");
            lam = 0.0;
        }
        mapped[i] = std::sqrt(lam);
    }
    return HermitianTensor(dec.assemble(mapped));
}

SquareTensor complex_power(const HermitianTensor& h, Complex z) {
    SpectralDecomposition dec = eig_hermitian(h);
    std::vector<Complex> mapped(dec.eigenvalues.size());
    for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
        const double lam = dec.eigenvalues[i];
        if (lam <= 0.0) {
            std::ostringstream msg;
            msg << "complex_power: eigenvalue " << lam << " is not positive";
            throw DomainError(msg.str());
        }
        mapped[i] = std::exp(z * std::log(lam));
    }
    return dec.assemble_complex(mapped);
}

HermitianTensor absolute_value(const SquareTensor& t) {
    const ComplexMatrix gram = t.matrix().adjoint() * t.matrix();
    HermitianTensor g(SquareTensor(t.shape(), gram));
    return tensor_sqrt_psd(g);
}

SingularSpectrum singular_spectrum(const SquareTensor& t) {
    const ComplexMatrix gram = t.matrix().adjoint() * t.matrix();
    std::vector<double> evals;
    ComplexMatrix vecs;
    eig_hermitian_matrix(gram, evals, vecs);
    const double top = evals.empty() ? 0.0 : std::abs(evals.front());
    const double clamp = config::kAbsClamp * std::max(1.0, top);
    SingularSpectrum s;
    s.values.resize(evals.size());
    for (std::size_t i = 0; i < evals.size(); ++i) {
        double lam = evals[i];
        if (lam < 0.0) {
            if (lam < -clamp)
                throw InternalError("singular_spectrum: Gram eigenvalue below clamp");
            lam = 0.0;
        }
        s.values[i] = std::sqrt(lam);
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

double hermitian_determinant(const HermitianTensor& h) {
    SpectralDecomposition dec = eig_hermitian(h);
    double det = 1.0;
    for (double lam : dec.eigenvalues) det *= lam;
    return det;
}

} // namespace ttb
