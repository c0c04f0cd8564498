#pragma once

#include <vector>

#include "drum/linalg.hpp"
#include "drum/rationality.hpp"

namespace drum {

/// Outcome of the generic cone-membership test: either x >= 0 with A x = b,
/// or a separating vector y with y.b > 0 and y.A <= 0 componentwise.
struct ConeResult {
  bool feasible = false;
  std::vector<Rat> x;
  std::vector<Rat> y;
};

/// Decides b in cone(columns of A) by an exact phase-one simplex (Bland's
/// rule, so termination is guaranteed). A is given by rows.
ConeResult solve_cone(const Mat& a, const std::vector<Rat>& b);

/// A mixture over type profiles rationalizing the data.
struct Witness {
  std::vector<Rat> nu;  // aligned with ProfileMatrix columns
};

/// A separating hyperplane proving no rationalizing mixture exists:
/// d.rho > 0 while d.a_c <= 0 for every matrix column a_c, both restricted
/// to the rows listed in row_index.
struct Certificate {
  std::vector<int> row_index;  // ProfileMatrix rows the entries refer to
  std::vector<Rat> d;
};

struct FeasibilityResult {
  bool feasible = false;
  Witness witness;          // meaningful when feasible
  Certificate certificate;  // meaningful when infeasible
};

/// The central test: is rho = A nu solvable with nu >= 0? Only rows along
/// observed budget paths are imposed. The block structure of A makes the
/// mixture automatically sum to one.
FeasibilityResult test_drum(const ProfileMatrix& m, const StochasticChoice& data);

/// Re-derives every equality and sign condition from scratch; true when the
/// witness actually rationalizes the data.
bool verify_witness(const ProfileMatrix& m, const StochasticChoice& data,
                    const Witness& w);

/// True when the certificate actually separates rho from the cone.
bool verify_certificate(const ProfileMatrix& m, const StochasticChoice& data,
                        const Certificate& c);

}  // namespace drum
