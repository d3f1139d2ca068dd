#pragma once

#include "etgrs/etgrs.hpp"

namespace etgrs {

enum class NonGrsRegime { C1LowK, CCase1, CCase2, OutOfRange };

std::string to_string(NonGrsRegime r);

/// Result of a Schur-product distinguisher run. A "certified" verdict
/// means a monomial-equivalence invariant (Schur-square dimension, or a
/// weight-1 word in the dual square) separates the code from every GRS
/// code of the same parameters.
struct NonGrsReport {
    NonGrsRegime regime = NonGrsRegime::OutOfRange;
    std::optional<size_t> schur_dim;     // dim of the punctured code's Schur square
    std::optional<size_t> grs_expected;  // 2k-1, or the GRS dual-square distance in case 2
    std::optional<std::vector<FieldElement>> witness;  // the weight-1 dual-square word
    bool certified = false;
    std::vector<Finding> findings;
    std::string note;
};

/// Distinguishes the punctured code from GRS codes for 3 <= k < (n+3)/2:
/// its Schur square has dimension >= 2k while a GRS square in this range
/// has dimension exactly 2k-1. Also rebuilds the 2k x 2k certificate
/// minor from the first 2k-3 evaluation points and checks it is
/// invertible with determinant equal to the Vandermonde product.
NonGrsReport certify_c1(const EtgrsParams& p);

/// Distinguishes the full-length code from GRS codes for 3 <= k <= n-4.
/// Low k delegates to certify_c1 through the extension argument; for
/// (n+4)/2 <= k <= n-4 it constructs three explicit dual words whose
/// Schur combination is a weight-1 vector, impossible for a GRS dual
/// square in that range.
NonGrsReport certify_c(const EtgrsParams& p);

/// Dimension and reduced-echelon generator of the Schur square.
std::pair<size_t, FieldMatrix> schur_dim_profile(const LinearCode& c);

}  // namespace etgrs
