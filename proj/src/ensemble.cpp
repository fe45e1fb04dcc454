#include "qpb/ensemble.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

#include "qpb/spectral.hpp"

namespace qpb {

namespace {

Eigen::MatrixXcd raw_gaussian(EnsembleKind kind, Eigen::Index dim,
                              SplitStream& stream) {
  Eigen::MatrixXcd g(dim, dim);
  switch (kind) {
    case EnsembleKind::GaussianHermitian:
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          g(i, j) = std::complex<double>(stream.normal(), stream.normal());
        }
      }
      break;
    case EnsembleKind::RealSymmetric:
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          g(i, j) = stream.normal();
        }
      }
      break;
    case EnsembleKind::Diagonal:
      g.setZero();
      for (Eigen::Index i = 0; i < dim; ++i) g(i, i) = stream.normal();
      break;
  }
  return 0.5 * (g + g.adjoint().eval());
}

// Affine map of the spectrum onto [lo, lo + width]; a single eigenvalue
// lands at the window center.
HermitianMatrix map_spectrum(const HermitianMatrix& m, double lo,
                             double width) {
  SpectralDecomposition sd = SpectralDecomposition::compute(m);
  const double lmin = sd.min_eigenvalue();
  const double lmax = sd.max_eigenvalue();
  Eigen::VectorXd mapped(sd.eigenvalues.size());
  if (lmax - lmin < 1e-12) {
    mapped.setConstant(lo + 0.5 * width);
  } else {
    for (Eigen::Index i = 0; i < mapped.size(); ++i) {
      mapped(i) = lo + width * (sd.eigenvalues(i) - lmin) / (lmax - lmin);
    }
  }
  Eigen::MatrixXcd out = sd.eigenvectors * mapped.asDiagonal() *
                         sd.eigenvectors.adjoint();
  return HermitianMatrix(std::move(out));
}

}  // namespace

EnsembleKind ensemble_kind_from_name(const std::string& name) {
  if (name == "gaussian" || name == "gaussian-hermitian") {
    return EnsembleKind::GaussianHermitian;
  }
  if (name == "real-symmetric") return EnsembleKind::RealSymmetric;
  if (name == "diagonal") return EnsembleKind::Diagonal;
  throw ConfigError("unknown ensemble kind: " + name);
}

HermitianMatrix generate(const EnsembleSpec& spec, Eigen::Index dim,
                         SplitStream& stream) {
  HermitianMatrix g(raw_gaussian(spec.kind, dim, stream));
  switch (spec.constraint.side) {
    case DomainConstraint::Side::BoundedBelow:
      return map_spectrum(g, spec.constraint.bound + spec.offset,
                          spec.spectrum_width);
    case DomainConstraint::Side::BoundedAbove:
      return map_spectrum(
          g, spec.constraint.bound - spec.offset - spec.spectrum_width,
          spec.spectrum_width);
    case DomainConstraint::Side::Unconstrained:
      return map_spectrum(g, -0.5 * spec.spectrum_width, spec.spectrum_width);
  }
  return g;
}

HermitianMatrix generate_direction(EnsembleKind kind, Eigen::Index dim,
                                   double op_norm, SplitStream& stream) {
  HermitianMatrix g(raw_gaussian(kind, dim, stream));
  const double norm = g.operator_norm();
  if (norm < 1e-12) return HermitianMatrix::identity(dim).scaled(op_norm);
  return g.scaled(op_norm / norm);
}

Eigen::MatrixXcd random_matrix(Eigen::Index dim, SplitStream& stream) {
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(stream.normal(), stream.normal());
    }
  }
  return g;
}

Eigen::MatrixXcd random_unitary(Eigen::Index dim, SplitStream& stream) {
  Eigen::MatrixXcd g = random_matrix(dim, stream);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::complex<double> rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= mag > 0.0 ? rii / mag : 1.0;
  }
  return q;
}

HermitianMatrix random_pd(Eigen::Index dim, double lo, double hi,
                          SplitStream& stream) {
  HermitianMatrix g(raw_gaussian(EnsembleKind::GaussianHermitian, dim,
                                 stream));
  return map_spectrum(g, lo, hi - lo);
}

HermitianMatrix random_state(Eigen::Index dim, SplitStream& stream) {
  Eigen::VectorXd eigs(dim);
  double total = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    eigs(i) = 1e-6 - std::log(stream.uniform());
    total += eigs(i);
  }
  eigs /= total;
  Eigen::MatrixXcd u = random_unitary(dim, stream);
  Eigen::MatrixXcd out = u * eigs.asDiagonal() * u.adjoint();
  return HermitianMatrix(std::move(out));
}

AdmissiblePair generate_admissible_pair(const DomainConstraint& constraint,
                                        Eigen::Index dim, double width,
                                        double offset, double b_norm,
                                        SplitStream& stream_a,
                                        SplitStream& stream_b,
                                        EnsembleKind kind) {
  HermitianMatrix b = generate_direction(kind, dim, b_norm, stream_b);
  EnsembleSpec spec;
  spec.kind = kind;
  spec.constraint = constraint;
  spec.spectrum_width = width;
  // Shifting A's window by ||B|| keeps A + B clear of the bound with the
  // same margin as A itself.
  spec.offset = offset + b_norm;
  HermitianMatrix a = generate(spec, dim, stream_a);
  return AdmissiblePair{std::move(a), std::move(b)};
}

}  // namespace qpb
