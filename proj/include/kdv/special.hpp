#ifndef KDV_SPECIAL_HPP
#define KDV_SPECIAL_HPP

namespace kdv {

/// Complete elliptic integral of the first kind, K(m) = pi / (2 AGM(1, sqrt(1-m))),
/// with m the parameter (squared modulus). Requires 0 <= m < 1.
double elliptic_K(double m);

/// Jacobi elliptic functions via the descending AGM recursion.
struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

JacobiValues jacobi_elliptic(double z, double m);
double jacobi_cn(double z, double m);
double jacobi_sn(double z, double m);

}  // namespace kdv

#endif
