#pragma once

#include "qpb/deformed.hpp"
#include "qpb/hermitian_matrix.hpp"
#include "qpb/rng.hpp"

namespace qpb {

enum class EnsembleKind { GaussianHermitian, RealSymmetric, Diagonal };

EnsembleKind ensemble_kind_from_name(const std::string& name);

// Random Hermitian matrices whose spectrum is affinely mapped strictly
// inside a domain constraint: [bound + offset, bound + offset + width] for
// bounded-below constraints, mirrored for bounded-above, and centered at 0
// for the unconstrained sentinel.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GaussianHermitian;
  DomainConstraint constraint;
  double spectrum_width = 2.0;
  double offset = 0.05;
};

HermitianMatrix generate(const EnsembleSpec& spec, Eigen::Index dim,
                         SplitStream& stream);

// Gaussian Hermitian rescaled to a given operator norm; used for the
// perturbation B and for Frechet directions.
HermitianMatrix generate_direction(EnsembleKind kind, Eigen::Index dim,
                                   double op_norm, SplitStream& stream);

// iid complex Gaussian entries (the conjugator C is arbitrary).
Eigen::MatrixXcd random_matrix(Eigen::Index dim, SplitStream& stream);

// Unitary from the QR factorization of a complex Gaussian matrix with the
// usual phase fix.
Eigen::MatrixXcd random_unitary(Eigen::Index dim, SplitStream& stream);

// Positive definite with spectrum in [lo, hi], random eigenbasis.
HermitianMatrix random_pd(Eigen::Index dim, double lo, double hi,
                          SplitStream& stream);

// Trace-one positive definite state with eigenvalues floored at 1e-6 before
// normalization.
HermitianMatrix random_state(Eigen::Index dim, SplitStream& stream);

// A and B such that both A and A + B satisfy the constraint with its full
// margin: A's spectrum window is pushed away from the bound by B's operator
// norm.
struct AdmissiblePair {
  HermitianMatrix a;
  HermitianMatrix b;
};
AdmissiblePair generate_admissible_pair(const DomainConstraint& constraint,
                                        Eigen::Index dim, double width,
                                        double offset, double b_norm,
                                        SplitStream& stream_a,
                                        SplitStream& stream_b,
                                        EnsembleKind kind =
                                            EnsembleKind::GaussianHermitian);

}  // namespace qpb
