#pragma once

#include <string>

#include "w0/zlinalg/cochain_complex.hpp"
#include "w0/zlinalg/lattice.hpp"

namespace w0 {

struct ExactnessReport {
  bool exact = false;
  bool composite_zero = false;
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
  /// Empty when exact.
  std::string defect;
};

/// Exactness of Z^k --f--> Z^m --g--> Z^p at the middle term. Over Q this is
/// g f = 0 and rank f = nullity g; over Z the image lattice must equal the
/// kernel lattice.
inline ExactnessReport exactness_check(const IntMatrix& f, const IntMatrix& g, Ring ring) {
  if (g.cols() != f.rows())
    throw ShapeMismatch("exactness_check: f maps into Z^" + std::to_string(f.rows()) +
                        " but g is defined on Z^" + std::to_string(g.cols()));
  ExactnessReport rep;
  rep.composite_zero = (g * f).is_zero();
  rep.image_rank = rank(f);
  rep.kernel_rank = g.cols() - rank(g);
  if (!rep.composite_zero) {
    rep.defect = "g * f != 0";
    return rep;
  }
  if (rep.image_rank != rep.kernel_rank) {
    rep.defect = "rank(im f) = " + std::to_string(rep.image_rank) +
                 " < rank(ker g) = " + std::to_string(rep.kernel_rank);
    return rep;
  }
  if (ring == Ring::Z && !same_lattice(f, kernel_basis(g))) {
    rep.defect = "im f has finite nonzero index in ker g";
    return rep;
  }
  rep.exact = true;
  return rep;
}

/// Exactness at H(B) of H(A) --phi--> H(B) --psi--> H(C), where the groups
/// are cohomologies at single degrees of cochain complexes and phi, psi are
/// cochain-level maps. Inputs:
///   phi: B x A cochain map, psi: C x B cochain map,
///   d_a: outgoing differential at A, d_b: outgoing at B,
///   d_b_in: incoming differential at B, d_c_in: incoming at C.
/// Compares, inside the cocycles of B, the lattice of classes killed by psi
/// with the lattice phi(Z(A)) + B(B).
inline ExactnessReport subquotient_exactness(const IntMatrix& phi, const IntMatrix& psi,
                                             const IntMatrix& d_a, const IntMatrix& d_b,
                                             const IntMatrix& d_b_in, const IntMatrix& d_c_in,
                                             Ring ring) {
  const IntMatrix za = kernel_basis(d_a);
  const IntMatrix zb = kernel_basis(d_b);
  const IntMatrix image = hconcat(phi * za, d_b_in);

  // {z in Z(B) : psi z in im d_c_in}: kernel of [psi zb | -d_c_in], first block.
  const IntMatrix stacked = hconcat(psi * zb, -d_c_in);
  const IntMatrix null = kernel_basis(stacked);
  const IntMatrix killed = zb * null.row_range(0, zb.cols());

  ExactnessReport rep;
  rep.image_rank = rank(image);
  rep.kernel_rank = rank(killed);
  rep.composite_zero = rank(hconcat(killed, image)) == rep.kernel_rank;
  if (!rep.composite_zero) {
    rep.defect = "composite is not zero in cohomology";
    return rep;
  }
  if (ring == Ring::Q) {
    if (rep.image_rank != rep.kernel_rank) {
      rep.defect = "image rank " + std::to_string(rep.image_rank) + " < kernel rank " +
                   std::to_string(rep.kernel_rank);
      return rep;
    }
  } else if (!same_lattice(image, killed)) {
    rep.defect = "image lattice is a proper sublattice of the kernel lattice";
    return rep;
  }
  rep.exact = true;
  return rep;
}

}  // namespace w0
