#pragma once

#include "deltaspin/spinspace.hpp"
#include "deltaspin/types.hpp"

namespace deltaspin {

struct MomentumSet {
    RealVector k;

    int size() const { return static_cast<int>(k.size()); }

    /// Smallest pairwise gap.
    double min_gap() const;
};

/// One embedded amplitude-exchange operator, with the slot pair it acts on
/// and the half momentum difference it was built at.
struct YOperator {
    Matrix matrix;
    int slot_i = 0;
    int slot_j = 0;
    Complex kdiff{};
};

/// Two-body exchange operator Y(k) = [2ik I - h]^{-1} [2ik P + h]. Throws
/// SingularMatrix when 2ik sits on the spectrum of h within tol (a physical
/// bound-state pole; not regularized).
Matrix y_two_body(const Matrix& h, const Matrix& P, double kdiff, double tol = kDefaultTol);

/// Y at adjacent slots (j, j+1) on the n^N space of `model`, built from
/// embed_pair and signed_permutation.
YOperator y_embedded(const ManyBodyModel& model, int j, double kdiff, double tol = kDefaultTol);

/// ||Y(k) Y(-k) - I||_F / max(1, ||Y||_F) at slots (j, j+1): the inverse
/// relation of the consistency conditions.
double inverse_relation_residual(const ManyBodyModel& model, int j, double kdiff,
                                 double tol = kDefaultTol);

/// Normalized defect of the braid relation on the N=3 space (model.h and
/// statistics are used; model.N is ignored). With kab = (k_a - k_b)/2:
///   Y12[k23] Y23[k13] Y12[k12]  vs  Y23[k12] Y12[k13] Y23[k23],
/// the arrangement forced by path independence of amplitude propagation.
double ybe_residual(const ManyBodyModel& model, double k1, double k2, double k3,
                    double tol = kDefaultTol);

/// Max normalized commutator of embedded Y's over disjoint adjacent slot
/// pairs; requires N >= 4. Slot (j, j+1) uses kdiff (k_j - k_{j+1})/2.
double ybe_far_commutation_residual(const ManyBodyModel& model, const MomentumSet& momenta,
                                    double tol = kDefaultTol);

}  // namespace deltaspin
