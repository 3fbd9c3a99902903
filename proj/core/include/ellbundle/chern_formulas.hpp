#pragma once

#include "ellbundle/cohomology.hpp"

#include <functional>
#include <string>

namespace ellbundle {

// Single curve: classes in Q[h, t]/(h^n, t^2) with t the class of p0 and h
// the hyperplane class of P^{n-1}. Each function builds its own ring
// RingSpec::single_curve(n, truncation).

/// c(U_0) = (1 - h + t h)(1 - h)^{n-2}.
GradedClass c_U0_single_curve(int n, int truncation = default_truncation());
/// ch U_0 = n e^{-h} + (1 - t)(1 - e^{-h}).
GradedClass ch_U0_single_curve(int n, int truncation = default_truncation());
/// c(U_a) = (1 - h + t h)(1 - h)^{a+n-2}.
GradedClass c_Ua_single_curve(int n, int a, int truncation = default_truncation());
/// ch(U_a (x) O(b)) = n e^{(b-1)h} + (1 - a - t)(e^{bh} - e^{(b-1)h}).
GradedClass ch_Ua_twist_single_curve(int n, int a, int b, int truncation = default_truncation());
/// ch U = n + t(1 - e^h) for the bundle U = U_1 (x) O(1).
GradedClass ch_U_poincare(int n, int truncation = default_truncation());
/// 1 + sum_{k >= 2} (-1)^k h^{k-1} t.
GradedClass c_U_poincare(int n, int truncation = default_truncation());
/// c(U(d)) = (1 - t + h)(1 + t)(1 + h)^{d-1} = (1 + h + t h)(1 + h)^{d-1};
/// 1 <= d <= n-1.
GradedClass c_Ud_single_curve(int n, int d, int truncation = default_truncation());
/// ch U(d) = (d - t) e^h + (n - d) + t; 1 <= d <= n-1.
GradedClass ch_Ud_single_curve(int n, int d, int truncation = default_truncation());

// Fibration: classes in a ring with generators sigma, zeta, L (see
// RingSpec::fibration).

/// (e^{-sigma} + e^{-L} + ... + e^{-(d-1)L}) e^{zeta - L} + (e^sigma + e^L + ... + e^{(n-d-1)L}).
GradedClass ch_Ud_fibration(const RingPtr& ring, int n, int d);
/// e^{-zeta} R(a+n) - R(a) + e^{-sigma}(1 - e^{-zeta}), R(c) = (1 - e^{cL}) / (1 - e^L).
GradedClass ch_Ua_fibration(const RingPtr& ring, int n, int a);
/// The same formula with an arbitrary class in place of zeta.
GradedClass ch_Ua_formula(const RingPtr& ring, int n, int a, const GradedClass& zeta);

/// [H] = zeta - n L.
GradedClass hyperplane_class(const RingPtr& ring, int n);
/// -e^{(a-1)L}(1 - e^{-(zeta - nL)}), the change ch U_a - ch U_{a-1}.
GradedClass modification_increment(const RingPtr& ring, int n, int a);

/// c(U(d)) = (1 + zeta - L + zeta sigma) prod_{r=1}^{d-1} (1 - (r+1)L + zeta) prod_{s=1}^{n-d-1} (1 + sL).
GradedClass c_Ud_fibration(const RingPtr& ring, int n, int d);

/// Product of f(s) for s = lo..hi. With `signed_range` an empty range
/// hi < lo - 1 means the reciprocal of the product over hi+1..lo-1;
/// otherwise every empty range is 1.
GradedClass range_product(const RingPtr& ring, int lo, int hi, const std::function<GradedClass(int)>& f,
                          bool signed_range = true);

/// The three product formulas for c(U_a), selected by `branch`:
///   0: a >= 0,        lead * prod_{s=1}^{n+a-2}(1 + (s+1)L - zeta) * prod_{r=1}^{a-1}(1 + rL)^{-1}
///   1: -(n-1) <= a < 0, lead * prod_{s=1}^{n+a-2}(1 + (s+1)L - zeta) * prod_{r=1}^{-a}(1 - rL)
///   2: a < -(n-1),    lead * prod_{s=0}^{1-n-a}(1 - (s-1)L - zeta)^{-1} * prod_{r=1}^{-a}(1 - rL)
/// with lead = 1 - zeta + L + zeta sigma. Each may be evaluated at any a.
GradedClass c_Ua_fibration_branch(const RingPtr& ring, int n, int a, int branch, bool signed_range = true);
/// Branch chosen by the range of a.
GradedClass c_Ua_fibration(const RingPtr& ring, int n, int a);
int c_Ua_branch_for(int n, int a);

/// [an + (n^2 - n)/2] L - (n + a - 1) zeta.
GradedClass c1_Ua_displayed(const RingPtr& ring, int n, int a);
/// (a+n-1)(a+n-2)/2 zeta^2 - (n^2 + 2an - 2n - a)(a+n-1)/2 zeta L
///   + [1/2 (an + (n^2-n)/2)^2 - P(a+n) + P(a)] L^2 + sigma zeta.
GradedClass c2_Ua_displayed(const RingPtr& ring, int n, int a);

/// ch V_n = 1 + sum_{i=2}^n e^{-iL}.
GradedClass ch_Vn(const RingPtr& ring, int n);
/// ch(W_n restricted to sigma) = e^{-L} + sum_{i=1}^{n-1} e^{iL}.
GradedClass ch_Wn_on_sigma(const RingPtr& ring, int n);
/// ch W_n = sum_{i=1}^{n-1} e^{iL} + e^sigma.
GradedClass ch_Wn(const RingPtr& ring, int n);

/// L -> 0, sigma -> t, zeta -> h into Q[h, t]/(h^n, t^2).
GradedClass specialize_to_single_curve(const GradedClass& x, int n);

enum class BundleFamily { UaSingleCurve, UdSingleCurve, UPoincare, UaFibration, UdFibration };

std::string to_string(BundleFamily family);

struct UniversalBundleId {
  BundleFamily family;
  int n;
  int param = 0;  // a or d
  int twist = 0;  // b, single-curve U_a only
};

/// Validates n >= 2 and 1 <= d <= n-1 where d applies; throws
/// DomainError("range").
void validate(const UniversalBundleId& id);

/// Ring the family lives in.
RingPtr ring_for(const UniversalBundleId& id, int truncation = default_truncation());

/// Rank, c and ch of the bundle; c is derived from ch by Newton's identities.
ChernData chern_data(const UniversalBundleId& id, int truncation = default_truncation());

}  // namespace ellbundle
