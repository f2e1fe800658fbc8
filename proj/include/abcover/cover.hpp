/*
   Copyright 2026 The abcover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ABCOVER_COVER_HPP
#define ABCOVER_COVER_HPP

#include "abcover/lpoly.hpp"

namespace abcover {

/// Invariants of the unramified abelian cover Y -> X attached to a subgroup
/// H of J_X(K) and totally split above a chosen rational point.
struct CoverInvariants {
    Integer quotient_order;  // |J_X(K)| / |H|, the order of Gal(Y/X)
    int base_genus = 0;
    Integer cover_genus;
    Integer split_count;  // rational points of X totally split in Y
    Integer cover_points;

    friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

/// g_Y - 1 = m (g_X - 1) and #Y(K) = m s, with m = j_order / h_order.
/// Throws Error(InconsistentOrders) if h_order does not divide j_order and
/// Error(MalformedInput) for non-positive orders, g_X < 1 or s < 0.
CoverInvariants cover_invariants(const Integer& j_order, const Integer& h_order, int base_genus,
                                 const Integer& split_count);

/// Result of the constant field extension construction: X_k over F_r is
/// base-changed to K = F_{r^2} and the cover is cut out by H = J_{X_k}(F_r).
struct ConstantFieldCover {
    FieldSize base_field;    // r
    FieldSize target_field;  // r^2
    Integer j_order;         // |J_X(F_{r^2})|
    Integer h_order;         // |J_{X_k}(F_r)|
    CoverInvariants invariants;
};

/// Computes the cover from the L-polynomial of X_k alone. Requires a valid
/// Weil polynomial (Error(InvalidWeil)) with N_1 >= 1 (Error(NoRationalPoint)).
ConstantFieldCover constant_field_cover(const LPolynomial& L);

}  // namespace abcover

#endif
