#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace spt {

using cd = std::complex<double>;

// Dense complex tensor, row-major (last index fastest). Small by design:
// everything in this project fits in a few MB.
struct Tensor {
    std::vector<int> dims;
    std::vector<cd> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> d);

    long size() const { return static_cast<long>(data.size()); }
    int rank() const { return static_cast<int>(dims.size()); }

    long offset(const std::vector<int>& idx) const;
    cd& at(const std::vector<int>& idx) { return data[offset(idx)]; }
    const cd& at(const std::vector<int>& idx) const { return data[offset(idx)]; }

    double norm() const;
    double max_abs() const;
};

Tensor transpose(const Tensor& t, const std::vector<int>& perm);

// Contract the listed axis pairs (axA[i] of A with axB[i] of B). Output axes:
// A's free axes in order, then B's free axes in order.
Tensor contract(const Tensor& A, const Tensor& B, const std::vector<int>& axA,
                const std::vector<int>& axB);

// View the first `nleft` axes as rows and the rest as columns.
Eigen::MatrixXcd as_matrix(const Tensor& t, int nleft);
Tensor from_matrix(const Eigen::MatrixXcd& m, const std::vector<int>& dims);

// Moore-Penrose pseudoinverse; singular values below rel_cut * sigma_max are
// treated as zero.
Eigen::MatrixXcd pinv(const Eigen::MatrixXcd& m, double rel_cut = 1e-10);

long matrix_rank(const Eigen::MatrixXcd& m, double rel_cut = 1e-10);

// True when |<a,b>| >= (1 - tol) * ||a|| * ||b||, i.e. the vectors agree up to
// a global phase.
bool allclose_upto_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                         double tol = 1e-10);
bool allclose_upto_phase(const Tensor& a, const Tensor& b, double tol = 1e-10);

// If A = phi * B globally (within tol * max|A|), return phi, extracted at
// the largest-magnitude entry of B; otherwise nullopt.
std::optional<cd> phase_between(const Tensor& A, const Tensor& B, double tol = 1e-8);
std::optional<cd> phase_between(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                double tol = 1e-8);

}  // namespace spt
