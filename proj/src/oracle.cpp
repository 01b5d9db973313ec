#include "reachsym/oracle.hpp"

#include <cmath>

#include "reachsym/errors.hpp"

namespace reachsym::oracle {
namespace {

void guard(std::size_t n) {
  if (n > kMaxNodes) {
    throw ValidationError("dense oracle refuses graphs with more than " +
                          std::to_string(kMaxNodes) + " nodes");
  }
}

Eigen::VectorXd inverse_power(const Eigen::VectorXd& degrees, double exponent) {
  Eigen::VectorXd out(degrees.size());
  for (Eigen::Index i = 0; i < degrees.size(); ++i) {
    out[i] = degrees[i] > 0.0 ? std::pow(degrees[i], -exponent) : 0.0;
  }
  return out;
}

DenseMatrix boolean(const DenseMatrix& m) { return (m.array() > 0.0).cast<double>(); }

}  // namespace

DenseMatrix dense_adjacency(const DirectedGraph& g, bool use_weights) {
  const std::size_t n = g.num_nodes();
  guard(n);
  DenseMatrix a = DenseMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& e : g.edges()) a(e.src, e.dst) = use_weights ? e.weight : 1.0;
  return a;
}

DenseMatrix dense_closure(const DirectedGraph& g, Depth depth) {
  const DenseMatrix a = dense_adjacency(g);
  DenseMatrix reach = a;
  DenseMatrix power = a;
  const std::size_t n = g.num_nodes();
  // A path longer than n revisits a node, so n powers reach the fixed point.
  const std::size_t steps = depth.is_unbounded() ? n : std::min<std::size_t>(depth.hops(), n + 1);
  for (std::size_t s = 2; s <= steps; ++s) {
    power = boolean(power * a);
    DenseMatrix next = boolean(reach + power);
    // Once a power adds nothing, no later power can.
    if (depth.is_unbounded() && next == reach) break;
    reach = std::move(next);
  }
  return reach;
}

DenseSimilarity dense_similarity(const DenseMatrix& closure, double alpha, double beta,
                                 const HierarchyScores* h, double delta) {
  guard(static_cast<std::size_t>(closure.rows()));
  const Eigen::Index n = closure.rows();
  const Eigen::VectorXd d_out = closure.rowwise().sum();
  const Eigen::VectorXd d_in = closure.colwise().sum().transpose();
  const Eigen::VectorXd out_alpha = inverse_power(d_out, alpha);  // Do^-a
  const Eigen::VectorXd in_beta = inverse_power(d_in, beta);      // Di^-b

  DenseSimilarity s;
  if (!h) {
    s.out_reach = out_alpha.asDiagonal() * closure * in_beta.asDiagonal() * closure.transpose() *
                  out_alpha.asDiagonal();
    s.in_reach = in_beta.asDiagonal() * closure.transpose() * out_alpha.asDiagonal() * closure *
                 in_beta.asDiagonal();
  } else {
    // Same products with the per-k factor, written out as triple sums.
    const DenseMatrix left_o = out_alpha.asDiagonal() * closure;              // Do^-a A
    const DenseMatrix left_i = in_beta.asDiagonal() * closure.transpose();    // Di^-b A^T
    // dist(i, k) = (1 + |h(i) - h(k)|)^-delta, so f(i, j, k) = dist(i, k) dist(j, k).
    DenseMatrix dist(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        dist(i, k) = std::pow(
            1.0 + std::abs((*h)[static_cast<NodeIndex>(i)] - (*h)[static_cast<NodeIndex>(k)]),
            -delta);
      }
    }
    s.out_reach = DenseMatrix::Zero(n, n);
    s.in_reach = DenseMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        double bo = 0.0, ci = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double f = dist(i, k) * dist(j, k);
          bo += left_o(i, k) * in_beta[k] * left_o(j, k) * f;
          ci += left_i(i, k) * out_alpha[k] * left_i(j, k) * f;
        }
        s.out_reach(i, j) = bo;
        s.in_reach(i, j) = ci;
      }
    }
  }
  s.total = s.out_reach + s.in_reach;
  s.total.diagonal().setZero();
  return s;
}

DenseMatrix dense_pair_discount(const DenseMatrix& w, const HierarchyScores& h, double gamma) {
  DenseMatrix out = w;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      out(i, j) = w(i, j) / std::pow(1.0 + std::abs(h[static_cast<NodeIndex>(i)] -
                                                    h[static_cast<NodeIndex>(j)]),
                                     gamma);
    }
  }
  return out;
}

DenseMatrix to_dense(const UndirectedWeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (const auto& e : g.edges) {
    m(e.u, e.v) = e.weight;
    m(e.v, e.u) = e.weight;
  }
  return m;
}

}  // namespace reachsym::oracle
