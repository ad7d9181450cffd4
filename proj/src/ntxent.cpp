#include "fg/ntxent.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fg {

namespace {

void check_batch(const EmbeddingBatch& batch, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("temperature must be positive");
    const auto rows = batch.vectors.rows();
    if (rows < 2 || rows % 2 != 0)
        throw std::invalid_argument("embedding batch needs an even number (>= 2) of rows");
    for (Eigen::Index r = 0; r < rows; ++r)
        if (batch.vectors.row(r).norm() == 0.0)
            throw std::invalid_argument("embedding row " + std::to_string(r) +
                                        " has zero norm");
}

// Unit-norm rows; cosine similarity then reduces to a dot product.
Eigen::MatrixXd normalized_rows(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd z = m;
    for (Eigen::Index r = 0; r < z.rows(); ++r) z.row(r).normalize();
    return z;
}

// l(i, j) given the full matrix of similarities already divided by tau.
double pair_loss_from_scaled(const Eigen::MatrixXd& s, Eigen::Index i, Eigen::Index j) {
    double mx = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < s.rows(); ++k)
        if (k != i) mx = std::max(mx, s(i, k));
    double denom = 0.0;
    for (Eigen::Index k = 0; k < s.rows(); ++k)
        if (k != i) denom += std::exp(s(i, k) - mx);
    return mx + std::log(denom) - s(i, j);
}

} // namespace

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("zero-norm vector");
    return a.dot(b) / (na * nb);
}

double nt_xent_pair_loss(const EmbeddingBatch& batch, int i, int j, double tau) {
    check_batch(batch, tau);
    const auto rows = batch.vectors.rows();
    if (i < 0 || j < 0 || i >= rows || j >= rows)
        throw std::out_of_range("row index out of range");
    if (i == j) throw std::invalid_argument("pair indices must differ");
    const Eigen::MatrixXd z = normalized_rows(batch.vectors);
    const Eigen::MatrixXd s = (z * z.transpose()) / tau;
    return pair_loss_from_scaled(s, i, j);
}

double nt_xent_batch_loss(const EmbeddingBatch& batch, double tau) {
    check_batch(batch, tau);
    const Eigen::MatrixXd z = normalized_rows(batch.vectors);
    const Eigen::MatrixXd s = (z * z.transpose()) / tau;
    const int n = batch.pair_count();
    double total = 0.0;
    for (int m = 0; m < n; ++m) {
        const Eigen::Index a = 2 * m, b = 2 * m + 1;
        total += 0.5 * (pair_loss_from_scaled(s, a, b) + pair_loss_from_scaled(s, b, a));
    }
    return total / n;
}

} // namespace fg
