#pragma once

#include <Eigen/Dense>

namespace fg {

/// Paper default temperature, used by the CLI when no flag is given.
inline constexpr double kDefaultTau = 0.5;

/// 2N embedding rows of dimension D; rows (2m, 2m+1) are the positive
/// pair for item m. No row may have zero norm.
struct EmbeddingBatch {
    Eigen::MatrixXd vectors;

    int pair_count() const { return static_cast<int>(vectors.rows()) / 2; }
    int dimension() const { return static_cast<int>(vectors.cols()); }
};

/// dot(a,b) / (|a| |b|); throws on a zero-norm argument.
double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Temperature-scaled cross entropy for the ordered pair (i, j): the
/// denominator sums exp(sim(z_i, z_k)/tau) over all k != i, including
/// the positive term k = j. Row similarities are max-subtracted before
/// exponentiation, which leaves the value unchanged.
double nt_xent_pair_loss(const EmbeddingBatch& batch, int i, int j, double tau);

/// Per-view average: mean over items m of
/// (l(2m, 2m+1) + l(2m+1, 2m)) / 2.
double nt_xent_batch_loss(const EmbeddingBatch& batch, double tau);

} // namespace fg
