#pragma once

// Small exact linear algebra over Z and Q used by the lattice geometry and
// the kernel-lattice computations. Everything here is desk scale (dims <= 8).

#include <vector>

#include "dworkcong/exactnum.hpp"

namespace dwork::linalg {

using IMat = std::vector<std::vector<Int>>;  // row major

// Basis of the full integer kernel {x in Z^n : A x = 0}, computed by
// column reduction with unimodular tracking, so the result generates the
// whole (saturated) kernel lattice.
std::vector<std::vector<Int>> integer_kernel(const IMat& a, int ncols);

int rational_rank(IMat a);

// Solves A y = b over Q (free variables set to 0). Returns false when
// inconsistent.
bool solve_rational(const IMat& a, const std::vector<Int>& b,
                    std::vector<Rat>& y);

// Divides a vector by the gcd of its entries; zero vector stays zero.
// First nonzero entry is made positive.
void make_primitive(std::vector<Int>& v);

std::vector<Int> matvec(const IMat& a, const std::vector<Int>& x);

}  // namespace dwork::linalg
