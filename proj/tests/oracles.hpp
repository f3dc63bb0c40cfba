#pragma once

// Slow, direct implementations used to check the library. Nothing here
// shares code paths with the routines under test beyond the basic value
// types.

#include <vector>

#include "celltransfer/minmax.hpp"
#include "celltransfer/symmetric.hpp"
#include "celltransfer/transfer.hpp"

namespace oracle {

using namespace celltransfer;

/// Checks every cover straight from the label list.
bool respects(const TLabelledPoset& lp, const Tableau& t);

/// All ncap^|domain| assignments, filtered; lexicographic by element id.
std::vector<Tableau> tableaux(const TLabelledPoset& lp, ElementSet domain, int ncap);

ExponentPolynomial kfunc(const TLabelledPoset& lp, ElementSet domain, int ncap);

/// Complete homogeneous symmetric polynomial h_k.
ExponentPolynomial complete(int k, int nvars);

/// s_{λ/μ} = det[h_{λ_i - μ_j - i + j}].
ExponentPolynomial jacobi_trudi(const Partition& lam, const Partition& mu, int nvars);

/// Q∧R, Q∨R, Q∧′R, Q∨′R straight from the set definitions, using only `less`.
ElementSet wedge(const Poset& p, ElementSet q, ElementSet r);
ElementSet vee(const Poset& p, ElementSet q, ElementSet r);
ElementSet wedge_prime(const Poset& p, ElementSet q, ElementSet r);
ElementSet vee_prime(const Poset& p, ElementSet q, ElementSet r);

struct Candidates {
  ElementSet plus, bd_q, bd_r, s_star;
};

Candidates candidates(const TLabelledPoset& lp, ElementSet q, ElementSet r, const Tableau& omega, const Tableau& sigma);

/// Glued pair for a swap set S, on the meet and join domains.
std::pair<Tableau, Tableau> glue(const Poset& p, ElementSet q, ElementSet r, const Tableau& omega, const Tableau& sigma,
                                 ElementSet s);

/// Smallest transferrable subset of S* by cardinality, or nullopt if there are
/// several of the smallest size.
std::optional<ElementSet> smallest_transferrable(const TLabelledPoset& lp, ElementSet q, ElementSet r,
                                                 const Tableau& omega, const Tableau& sigma);

/// Number of linear extensions by brute force over permutations.
long long linear_extensions(const Poset& p);

/// Number of standard Young tableaux of λ by the hook length formula.
long long hook_length_count(const Partition& lam);

Exponent weight_of(const Tableau& t);

}  // namespace oracle
