#pragma once

#include "skewtorus/circle.hpp"
#include "skewtorus/ellis.hpp"
#include "skewtorus/poly_angle.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace skewtorus {

/// The (m, x0)-system (x_1, ..., x_m) -> (x0 + x_1, x_1 + x_2, ..., x_{m-1} + x_m).
struct BasicSystem {
  int m;
  Angle x0;
};

void check_system(const BasicSystem &sys);

TorusPoint step(const BasicSystem &sys, const TorusPoint &x);
TorusPoint inverse_step(const BasicSystem &sys, const TorusPoint &x);

/// Ambient form on points g indexed 0..m: result_k = sum_j C(n, k-j) g_j.
TorusPoint iterate_ambient(const TorusPoint &g, const mpz_class &n);

/// Closed-form n-th iterate of the (m, x0)-system (n may be negative).
TorusPoint iterate_closed(const BasicSystem &sys, const TorusPoint &x, const mpz_class &n);

/// Same result by |n| explicit steps; the brute-force oracle.
TorusPoint iterate_stepping(const BasicSystem &sys, TorusPoint x, long n);

/// Integer character index v, x -> sum_k v_k x_k, over coordinates 1..m.
struct CharacterIndex {
  std::map<int, mpz_class> v;

  static CharacterIndex unit(int k) { return CharacterIndex{{{k, mpz_class(1)}}}; }
  bool is_zero() const;
  int top() const; ///< largest index with a nonzero entry, 0 if none
};

Angle character_eval(const CharacterIndex &v, const TorusPoint &x);

/// Exact p with p(n) = character_eval(v, iterate_closed(sys, x, n)).
PolyAngle orbit_polynomial(const BasicSystem &sys, const CharacterIndex &v, const TorusPoint &x);

/// Chain e_1, ..., e_{m'} for v = e_{m'}; empty for v = 0. Other v throw
/// UnsupportedError.
std::vector<CharacterIndex> diagonal_representation(const BasicSystem &sys,
                                                    const CharacterIndex &v);

/// f_k(step(x)) == f_{k-1}(x) + f_k(x) for every link of the chain, with
/// f_0 the constant x0.
bool diagonal_relation_holds(const BasicSystem &sys, const std::vector<CharacterIndex> &chain,
                             const TorusPoint &x);

/// q(v)(phi) = sum_k phi_k(v_k) for v indexed 0..(at most) m.
Angle q_eval(const std::vector<Angle> &v, const HmElement &phi);

/// (sigma v)_k = v_{k+1}; same length, last entry zero.
std::vector<Angle> shift(const std::vector<Angle> &v);

/// Minimal exactly when x0 is not torsion.
bool is_minimal(const BasicSystem &sys);

} // namespace skewtorus
