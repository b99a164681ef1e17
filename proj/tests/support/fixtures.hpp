#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "svset/decision.hpp"
#include "svset/scale.hpp"
#include "svset/svset.hpp"

namespace svset::testing {

std::size_t pick(std::mt19937_64& rng, std::size_t n);
Rational random_unit(std::mt19937_64& rng, std::int64_t max_den = 12);

std::vector<std::string> labels(const std::string& prefix, std::size_t n);
Universe universe_of(std::size_t n, const std::string& prefix = "x");

/// Boolean square {0,a,b,1}, neg swapping the atoms.
FiniteLatticeSpec boolean_square();
/// Same lattice with neg fixing both atoms. Still a De Morgan algebra.
FiniteLatticeSpec square_fixing_atoms();
/// 0 < a < b < 1 with neg fixing a and b: involutive but not antitone.
FiniteLatticeSpec chain4_fixing_middle();
/// N5: 0 < a < b < 1, 0 < c < 1, neg swapping a and b and fixing c.
FiniteLatticeSpec pentagon();
/// Diamond with three atoms p, q, r; neg swaps p and q and fixes r.
FiniteLatticeSpec three_atom_diamond();
/// The custom scales that must pass every law.
std::vector<Scale> custom_fixtures();

/// Chain of k+1 elements built from covers.
FiniteLatticeSpec chain_spec(std::size_t k);

SVSet random_svset(std::mt19937_64& rng, const Universe& u, const ParamSet& e, const Scale& scale);
SVSet random_unparameterized(std::mt19937_64& rng, const Universe& u, const Scale& scale);

/// Table with grades drawn from mu in {0, 1/20, ..., 1} and m in {0..k}.
DecisionTable random_table(std::mt19937_64& rng, std::size_t alternatives, std::size_t criteria, std::int64_t k);

DecisionTable laptop_table();
DecisionTable supplier_table();
DecisionTable proposal_table();

}  // namespace svset::testing
