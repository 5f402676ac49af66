#ifndef TTB_SPECTRAL_HPP
#define TTB_SPECTRAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "ttb/tensor.hpp"

namespace ttb {

// Eigenvalues (descending) and orthonormal eigen-tensors of a Hermitian
// tensor; eigen-tensors are stored as the unfolded column vectors of V.
struct SpectralDecomposition {
    Shape shape;
    std::vector<double> eigenvalues; // lambda_1 >= ... >= lambda_d
    ComplexMatrix eigenvectors;      // column i is the unfolded U_i
    Index hermitian_rank = 0;        // count of |lambda_i| > tol_rank

    // Sum_i f(lambda_i) U_i (x) U_i^H folded back to a tensor.
    SquareTensor assemble(const std::vector<double>& new_eigenvalues) const;
    SquareTensor assemble_complex(const std::vector<Complex>& new_eigenvalues) const;
    SquareTensor reconstruct() const { return assemble(eigenvalues); }
};

// Nonnegative singular values, descending.
struct SingularSpectrum {
    std::vector<double> values;
};

// Cyclic complex Jacobi on the unfolded Hermitian matrix.
SpectralDecomposition eig_hermitian(const HermitianTensor& h);

// Same solver on a raw Hermitian matrix (used internally and by oracles).
void eig_hermitian_matrix(const ComplexMatrix& m, std::vector<double>& eigenvalues,
                          ComplexMatrix& eigenvectors);

using ScalarFn = std::function<double(double)>;

// Spectral functional calculus: result = Sum f(lambda_i) U_i (x) U_i^H.
// With domain_check set, every eigenvalue is validated by domain_ok first
// and a DomainError naming the offending eigenvalue is raised otherwise.
HermitianTensor tensor_function(const HermitianTensor& h, const ScalarFn& f,
                                bool domain_check = false,
                                const std::function<bool(double)>& domain_ok = nullptr,
                                const std::string& fn_name = "f");

HermitianTensor tensor_exp(const HermitianTensor& h);
HermitianTensor tensor_log(const HermitianTensor& h); // requires lambda_min > 0
HermitianTensor tensor_sqrt_psd(const HermitianTensor& h);

// lambda^z = exp(z ln lambda) on a positive definite tensor.
SquareTensor complex_power(const HermitianTensor& h, Complex z);

// |T| = sqrt(T^H * T); eigenvalues of T^H T are clamped at zero before the
// square root, negatives beyond the clamp tolerance are an internal error.
HermitianTensor absolute_value(const SquareTensor& t);

SingularSpectrum singular_spectrum(const SquareTensor& t);

// Product of all d eigenvalues.
double hermitian_determinant(const HermitianTensor& h);

} // namespace ttb

#endif
