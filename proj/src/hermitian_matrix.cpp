#include "qpb/hermitian_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qpb {

double HermitianMatrix::hermiticity_tolerance(const Eigen::MatrixXcd& m) {
  double scale = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
  return 1e-12 * (1.0 + scale);
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    std::ostringstream msg;
    msg << "HermitianMatrix requires a square matrix of dim >= 1, got "
        << entries.rows() << "x" << entries.cols();
    throw DomainError(msg.str());
  }
  const double tol = hermiticity_tolerance(entries);
  double worst = 0.0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    for (Eigen::Index j = i; j < entries.cols(); ++j) {
      double asym = std::abs(entries(i, j) - std::conj(entries(j, i)));
      if (asym > worst) {
        worst = asym;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |M(" << wi << "," << wj << ") - conj(M("
        << wj << "," << wi << "))| = " << worst << " exceeds tolerance "
        << tol;
    throw DomainError(msg.str());
  }
  entries_ = 0.5 * (entries + entries.adjoint().eval());
  // Keep the diagonal exactly real.
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    entries_(i, i) = std::complex<double>(entries_(i, i).real(), 0.0);
  }
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries, AlreadyHermitian)
    : entries_(std::move(entries)) {}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(Eigen::MatrixXcd::Zero(dim, dim), AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(Eigen::MatrixXcd::Identity(dim, dim),
                         AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::diagonal(const Eigen::VectorXd& diag) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(diag.size(), diag.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) m(i, i) = diag(i);
  return HermitianMatrix(std::move(m), AlreadyHermitian{});
}

double HermitianMatrix::operator_norm() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      entries_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  return HermitianMatrix(entries_ + other.entries_, AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  return HermitianMatrix(entries_ - other.entries_, AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  return HermitianMatrix(factor * entries_, AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    throw ConfigError("matrix literal must be {\"dim\": n, \"re\": [[...]]}"
                      " with optional \"im\"");
  }
  const auto n = j.at("dim").get<Eigen::Index>();
  if (n < 1) throw ConfigError("matrix literal: dim must be >= 1");
  const auto& re = j.at("re");
  const bool has_im = j.contains("im");
  if (re.size() != static_cast<std::size_t>(n) ||
      (has_im && j.at("im").size() != static_cast<std::size_t>(n))) {
    throw ConfigError("matrix literal: row count does not match dim");
  }
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = re.at(i);
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ConfigError("matrix literal: column count does not match dim");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      double im = has_im ? j.at("im").at(i).at(k).get<double>() : 0.0;
      m(i, k) = std::complex<double>(row.at(k).get<double>(), im);
    }
  }
  return HermitianMatrix(std::move(m));
}

nlohmann::json HermitianMatrix::to_json() const {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < dim(); ++i) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (Eigen::Index k = 0; k < dim(); ++k) {
      rrow.push_back(entries_(i, k).real());
      irow.push_back(entries_(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return nlohmann::json{{"dim", dim()}, {"re", std::move(re)},
                        {"im", std::move(im)}};
}

HermitianMatrix HermitianMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

}  // namespace qpb
