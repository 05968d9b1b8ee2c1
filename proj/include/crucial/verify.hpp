#ifndef CRUCIAL_VERIFY_HPP
#define CRUCIAL_VERIFY_HPP

#include <string>
#include <vector>

#include "crucial/count.hpp"

namespace crucial {

// --- cross-checks over exhaustive ranges -----------------------------------

// Number of permutations in S_n whose definition-level and tableau-level
// classifications disagree on any flag. Parallelized over rank blocks.
unsigned long long count_classify_mismatches(PatternSpec spec, int n, int jobs = 0);

bool rsk_roundtrip_ok(int n);           // rsk_inverse(rsk(p)) == p on S_n
bool pair_roundtrip_ok(int n);          // rsk(rsk_inverse(P,Q)) == (P,Q), same-shape pairs of size n
bool evacuation_involution_ok(int n);   // shape kept and applied twice is identity, all SYT of size n
bool rsk_symmetry_identities_ok(int n); // RSK of reverse/inverse/complement vs transpose/evacuation
bool crucial_symmetry_ok(PatternSpec spec, int n);  // right <-> left/top/bottom under reverse/inverse/complement
bool endpoint_witness_ok(PatternSpec spec, int n);  // right-crucial has i_{k-1} and d_{l-1} ending at the last element
bool deletability_ok(PatternSpec spec, int n);      // right-crucial above minimal length shrinks by one deletion
bool nonextendable_first_element_ok(PatternSpec spec, int n);  // non-extendable never starts at min or max

// --- growth chains and counting inequalities --------------------------------

struct GrowthStep {
    int n;
    BigInt count_n;
    BigInt count_next;
    bool strict;
};

struct GrowthReport {
    int k;
    int l;
    CrucialType type;
    std::vector<GrowthStep> steps;
    bool ok = true;
};

// Checks s_n < s_{n+1} from the type's minimal length up to the maximal
// length, via the syt method.
GrowthReport verify_growth(PatternSpec spec, CrucialType type);

struct InequalityCheck {
    std::string name;
    int n;
    BigInt lhs;
    BigInt rhs;
    bool holds;
};

struct InequalityReport {
    int k;
    int l;
    std::vector<InequalityCheck> checks;
    bool ok = true;
};

// Evaluates the three counting bounds over their ranges:
//  - lower_l:   s_n(k,l) + s_n(k,l-1) <= s_{n+1}(k,l) on the early lengths
//  - rectangle: s_n(k,l) + rectangle-tableau estimate <= s_{n+1}(k,l) late
//  - doubling:  2 b_n(k,l) <= b_{n+1}(k,l) for bicrucial counts
InequalityReport verify_inequalities(PatternSpec spec);

// --- deletion-reachability probe ---------------------------------------------

struct ConjectureReport {
    int k;
    int l;
    std::vector<int> lengths_checked;
    unsigned long long permutations_checked = 0;
    bool holds = true;  // every right-crucial embeds into a maximal one
};

// Tests whether every right-crucial permutation below maximal length occurs
// as a pattern inside some maximal right-crucial permutation. Exhaustive and
// brute-capped; a data probe, not a theorem.
ConjectureReport check_deletion_conjecture(PatternSpec spec);

// --- named suites (shared by the CLI and CI) ---------------------------------

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;
    void record(bool passed, std::string line);
};

std::vector<PatternSpec> default_spec_grid();     // 3 <= l <= k <= 5
std::vector<PatternSpec> default_growth_specs();  // (4,3), (4,4), (5,3)

SuiteResult run_roundtrip_suite(int nmax = 7);
SuiteResult run_equivalence_suite(const std::vector<PatternSpec>& specs, int nmax = 8, int jobs = 0);
SuiteResult run_symmetry_suite(const std::vector<PatternSpec>& specs, int nmax = 7);
SuiteResult run_growth_suite(const std::vector<PatternSpec>& specs);
SuiteResult run_inequalities_suite(const std::vector<PatternSpec>& specs);
SuiteResult run_formulas_suite(int jobs = 0);

}  // namespace crucial

#endif
