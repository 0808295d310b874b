#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "wattzoo/errors.hpp"

namespace wattzoo {

// ---------------------------------------------------------------------------
// Least squares
// ---------------------------------------------------------------------------

enum class LsIntercept { Free, Fixed, None };

struct LeastSquaresProblem {
  Eigen::MatrixXd design;   // n x p, intercept column NOT included
  Eigen::VectorXd targets;  // n
  LsIntercept intercept_mode = LsIntercept::Free;
  double fixed_intercept = 0.0;  // used when intercept_mode == Fixed
};

struct LeastSquaresSolution {
  double intercept = 0.0;   // fitted (Free) or echoed (Fixed), 0 for None
  Eigen::VectorXd slopes;   // p
  Eigen::VectorXd residuals;
};

// Minimizes ||X b - y||_2 via column-pivoted Householder QR. Throws
// RankDeficient when the (intercept-augmented) design loses column rank.
LeastSquaresSolution solve_least_squares(const LeastSquaresProblem& problem);

// ---------------------------------------------------------------------------
// Lasso (coordinate descent)
// ---------------------------------------------------------------------------

// Convention: design columns are z-scored (mean 0, population variance 1),
// targets are centered. Objective: (1/2n)||Xw - y||^2 + lambda*||w||_1.
struct LassoProblem {
  Eigen::MatrixXd design;
  Eigen::VectorXd targets;
  double lambda = 0.0;
  double tolerance = 1e-7;   // stop when max |coefficient change| drops below
  int max_iterations = 10000;
};

struct LassoResult {
  Eigen::VectorXd coefficients;
  bool converged = true;  // false: max iterations hit, best iterate returned
  int iterations = 0;
  std::vector<double> objective_trail;  // one value per full cycle
};

LassoResult coordinate_descent_lasso(const LassoProblem& problem);

// Smallest lambda that zeroes every coefficient: max_j |x_j . y| / n.
double lasso_lambda_max(const Eigen::MatrixXd& design, const Eigen::VectorXd& targets);

// ---------------------------------------------------------------------------
// Epsilon-SVR dual solver
// ---------------------------------------------------------------------------

struct SvrDualSolution {
  Eigen::VectorXd coefficients;  // beta_i = alpha_i - alpha_i*, in [-C, C]
  double bias = 0.0;
  int iterations = 0;
};

// Solves max_beta  -1/2 b'Kb - eps*||b||_1 + y'b  s.t. sum(b)=0, |b_i|<=C
// by pairwise analytic updates on the maximal KKT-violating pair. The bias
// is averaged over free support vectors.
SvrDualSolution svr_dual_solver(const Eigen::MatrixXd& kernel, const Eigen::VectorXd& targets,
                                double C, double epsilon, double tolerance = 1e-3,
                                int max_iterations = 100000);

// Dual objective at a given coefficient vector; shared with the brute-force
// test oracle so both sides score candidates identically.
double svr_dual_objective(const Eigen::MatrixXd& kernel, const Eigen::VectorXd& targets,
                          double epsilon, const Eigen::VectorXd& beta);

// ---------------------------------------------------------------------------
// Gaussian mixture EM
// ---------------------------------------------------------------------------

struct GmmComponent {
  double weight = 0.0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;  // full, regularized SPD
};

struct GmmFit {
  std::vector<GmmComponent> components;
  std::vector<double> log_likelihood_trail;  // per EM iteration
  int iterations = 0;
};

// EM with k-means++-style seeded initialization. reg is added to every
// covariance diagonal each M-step; on degeneracy (component weight < 1e-8
// or non-SPD covariance) the fit is retried with reg * 10, up to 3 times.
GmmFit em_gmm(const Eigen::MatrixXd& data, int n_components, std::uint64_t seed,
              double reg = 1e-6, double tol = 1e-7, int max_iter = 500);

// Log-density of a multivariate Gaussian (Cholesky-based).
double gaussian_log_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                        const Eigen::MatrixXd& covariance);

// ---------------------------------------------------------------------------
// Feedforward networks + SGD backprop
// ---------------------------------------------------------------------------

enum class Activation { Identity, Sigmoid };

struct DenseLayer {
  Eigen::MatrixXd weights;  // out x in
  Eigen::VectorXd bias;     // out
  Activation activation = Activation::Identity;

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
};

struct LayerGrad {
  Eigen::MatrixXd d_weights;
  Eigen::VectorXd d_bias;
};

struct FeedForwardNet {
  std::vector<DenseLayer> layers;

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;

  // Loss 1/2 * ||out - y||^2 for one sample.
  double loss(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Backprop gradients of loss() for one sample.
  std::vector<LayerGrad> gradients(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Flat parameter view, ordered layer by layer (weights row-major, then bias).
  std::vector<double> flatten_params() const;
  void set_params(const std::vector<double>& flat);
  std::vector<double> flatten_grads(const std::vector<LayerGrad>& grads) const;

  static DenseLayer make_layer(int out, int in, Activation act, std::uint64_t seed);
};

struct SgdResult {
  std::vector<double> epoch_loss;  // mean per-sample loss per epoch
};

// Per-sample SGD in seed-shuffled order. Throws NonFiniteLoss on divergence.
// A zero learning rate leaves the weights untouched.
SgdResult sgd_backprop(FeedForwardNet& net, const Eigen::MatrixXd& inputs,
                       const Eigen::MatrixXd& targets, int epochs, double learning_rate,
                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// Scalar grid search
// ---------------------------------------------------------------------------

// Evaluates objective on the inclusive grid {lo, lo+step, ...} and returns the
// smallest argument among minimizers.
double grid_search_scalar(const std::function<double(double)>& objective, double lo, double hi,
                          double step);

// ---------------------------------------------------------------------------
// Deterministic RNG helpers (shared across modules so seeds mean the same
// thing everywhere, independent of the standard library implementation)
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                       // [0,1)
  double uniform(double lo, double hi);   // [lo,hi)
  double gaussian();                      // standard normal (Box-Muller)
  std::size_t below(std::size_t bound);   // [0, bound)

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wattzoo
