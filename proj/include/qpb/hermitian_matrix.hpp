#pragma once

#include <Eigen/Dense>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qpb/errors.hpp"

namespace qpb {

// Dense self-adjoint operator on a finite-dimensional space. Construction
// symmetrizes the input as (M + M*)/2; asymmetry beyond tolerance is
// rejected with a diagnostic naming the worst entry pair.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd entries);

  static HermitianMatrix zero(Eigen::Index dim);
  static HermitianMatrix identity(Eigen::Index dim);
  static HermitianMatrix diagonal(const Eigen::VectorXd& diag);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& raw() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double frobenius_norm() const { return entries_.norm(); }
  double operator_norm() const;

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix scaled(double factor) const;

  // Asymmetry tolerated at construction, scaled by the largest entry.
  static double hermiticity_tolerance(const Eigen::MatrixXcd& m);

  static HermitianMatrix from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static HermitianMatrix load(const std::string& path);

 private:
  struct AlreadyHermitian {};
  HermitianMatrix(Eigen::MatrixXcd entries, AlreadyHermitian);

  Eigen::MatrixXcd entries_;
};

}  // namespace qpb
