#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmod/affine.hpp"
#include "pmod/perm_group.hpp"

namespace pmod {

/// A group as built from a description, with whatever extra structure the
/// description revealed: vector-space arithmetic for affine groups, and the
/// factor degrees for direct products.
struct BuiltGroup {
  std::string name;
  PermGroup group;
  std::optional<AffineGroup> affine;
  std::optional<std::pair<std::size_t, std::size_t>> product_degrees;
};

/// V = GF(p), H = <-1>: the dihedral group of order 2p.
AffineSpec dihedral_spec(std::uint32_t p);
/// H = GL(dim, q), generated by diag(w, 1, ..., 1) and the transvections
/// I + x^t e_ij.
AffineSpec agl_spec(std::uint32_t dim, std::uint32_t q);
/// AGL(dim, q) extended by the Frobenius automorphism.
AffineSpec agammal_spec(std::uint32_t dim, std::uint32_t q);

/// Catalogue:
///   D6, D10, Dihedral(2p)         affine GF(p) with H = <-1>, p an odd prime
///   AGL(d,q), AGammaL(d,q)        affine (semilinear) groups, q <= 64
///   Sym(n)                        generated by (0 1 ... n-1) and (0 1), n <= 10
///   Cyclic(n), C<n>               generated by (0 1 ... n-1)
///   Product(A,B)                  product action of two catalogue groups
/// Throws InvalidArgument for an unknown name.
BuiltGroup build_named(std::string_view name, Limits limits = {});
PermGroup named_group(std::string_view name, Limits limits = {});

BuiltGroup build_product(const BuiltGroup& first, const BuiltGroup& second);

/// The built-in zoo exercised by the property and acceptance suites.
const std::vector<std::string>& zoo_names();

}  // namespace pmod
