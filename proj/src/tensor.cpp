#include "spt/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spt {

Tensor::Tensor(std::vector<int> d) : dims(std::move(d)) {
    long sz = 1;
    for (int x : dims) {
        if (x <= 0) throw std::invalid_argument("tensor dimension must be positive");
        sz *= x;
    }
    data.assign(sz, cd(0.0, 0.0));
}

long Tensor::offset(const std::vector<int>& idx) const {
    if (idx.size() != dims.size()) throw std::invalid_argument("index rank mismatch");
    long off = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dims[i]) throw std::out_of_range("tensor index out of range");
        off = off * dims[i] + idx[i];
    }
    return off;
}

double Tensor::norm() const {
    double s = 0.0;
    for (const cd& v : data) s += std::norm(v);
    return std::sqrt(s);
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (const cd& v : data) m = std::max(m, std::abs(v));
    return m;
}

Tensor transpose(const Tensor& t, const std::vector<int>& perm) {
    if (perm.size() != t.dims.size()) throw std::invalid_argument("permutation rank mismatch");
    std::vector<int> nd(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) nd[i] = t.dims[perm[i]];
    Tensor out(nd);
    std::vector<long> strides(t.dims.size(), 1);
    for (int i = static_cast<int>(t.dims.size()) - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * t.dims[i + 1];
    std::vector<int> idx(perm.size(), 0);
    for (long o = 0; o < out.size(); ++o) {
        long src = 0;
        for (size_t i = 0; i < perm.size(); ++i) src += strides[perm[i]] * idx[i];
        out.data[o] = t.data[src];
        for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
            if (++idx[i] < nd[i]) break;
            idx[i] = 0;
        }
    }
    return out;
}

Tensor contract(const Tensor& A, const Tensor& B, const std::vector<int>& axA,
                const std::vector<int>& axB) {
    if (axA.size() != axB.size()) throw std::invalid_argument("axis list size mismatch");
    for (size_t i = 0; i < axA.size(); ++i)
        if (A.dims[axA[i]] != B.dims[axB[i]])
            throw std::invalid_argument("contracted dimensions differ");

    auto free_axes = [](int rank, const std::vector<int>& used) {
        std::vector<int> out;
        for (int i = 0; i < rank; ++i)
            if (std::find(used.begin(), used.end(), i) == used.end()) out.push_back(i);
        return out;
    };
    std::vector<int> freeA = free_axes(A.rank(), axA), freeB = free_axes(B.rank(), axB);

    std::vector<int> permA = freeA, permB = axB;
    permA.insert(permA.end(), axA.begin(), axA.end());
    permB.insert(permB.end(), freeB.begin(), freeB.end());
    Tensor At = transpose(A, permA), Bt = transpose(B, permB);

    long m = 1, k = 1, p = 1;
    for (int i : freeA) m *= A.dims[i];
    for (int i : axA) k *= A.dims[i];
    for (int i : freeB) p *= B.dims[i];

    Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> Ma(
        At.data.data(), m, k);
    Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> Mb(
        Bt.data.data(), k, p);

    std::vector<int> od;
    for (int i : freeA) od.push_back(A.dims[i]);
    for (int i : freeB) od.push_back(B.dims[i]);
    if (od.empty()) od.push_back(1);  // scalar result as a 1-tensor
    Tensor out(od);
    Eigen::Map<Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> Mo(
        out.data.data(), m, p);
    Mo = Ma * Mb;
    return out;
}

Eigen::MatrixXcd as_matrix(const Tensor& t, int nleft) {
    long r = 1, c = 1;
    for (int i = 0; i < t.rank(); ++i) (i < nleft ? r : c) *= t.dims[i];
    Eigen::MatrixXcd m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = t.data[i * c + j];
    return m;
}

Tensor from_matrix(const Eigen::MatrixXcd& m, const std::vector<int>& dims) {
    Tensor out(dims);
    if (out.size() != m.rows() * m.cols()) throw std::invalid_argument("shape mismatch");
    long c = m.cols();
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < c; ++j) out.data[i * c + j] = m(i, j);
    return out;
}

Eigen::MatrixXcd pinv(const Eigen::MatrixXcd& m, double rel_cut) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cut = sv.size() ? rel_cut * sv(0) : 0.0;
    Eigen::VectorXd inv = sv;
    for (Eigen::Index i = 0; i < sv.size(); ++i) inv(i) = sv(i) > cut ? 1.0 / sv(i) : 0.0;
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

long matrix_rank(const Eigen::MatrixXcd& m, double rel_cut) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cut = rel_cut * sv(0);
    long r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

bool allclose_upto_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, double tol) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 && nb == 0.0) return true;
    return std::abs(a.dot(b)) >= (1.0 - tol) * na * nb;
}

bool allclose_upto_phase(const Tensor& a, const Tensor& b, double tol) {
    Eigen::Map<const Eigen::VectorXcd> va(a.data.data(), a.size());
    Eigen::Map<const Eigen::VectorXcd> vb(b.data.data(), b.size());
    if (a.size() != b.size()) return false;
    return allclose_upto_phase(Eigen::VectorXcd(va), Eigen::VectorXcd(vb), tol);
}

namespace {
std::optional<cd> phase_between_spans(const cd* A, const cd* B, long n, double tol) {
    long best = -1;
    double bm = 0.0;
    double maxA = 0.0;
    for (long i = 0; i < n; ++i) {
        double ab = std::abs(B[i]);
        if (ab > bm) { bm = ab; best = i; }
        maxA = std::max(maxA, std::abs(A[i]));
    }
    if (best < 0 || bm < 1e-12) return std::nullopt;
    cd phi = A[best] / B[best];
    double scale = std::max(1.0, maxA);
    for (long i = 0; i < n; ++i)
        if (std::abs(A[i] - phi * B[i]) > tol * scale) return std::nullopt;
    return phi;
}
}  // namespace

std::optional<cd> phase_between(const Tensor& A, const Tensor& B, double tol) {
    if (A.dims != B.dims) return std::nullopt;
    return phase_between_spans(A.data.data(), B.data.data(), A.size(), tol);
}

std::optional<cd> phase_between(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return std::nullopt;
    return phase_between_spans(A.data(), B.data(), A.size(), tol);
}

}  // namespace spt
