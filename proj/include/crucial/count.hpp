#ifndef CRUCIAL_COUNT_HPP
#define CRUCIAL_COUNT_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "crucial/bigint.hpp"
#include "crucial/classify.hpp"

namespace crucial {

enum class CountMethod { brute, syt, formula };

std::string to_string(CountMethod method);
CountMethod count_method_from_string(const std::string& name);

// One counted cell of the (n, k, l, type) table. For the types whose P and Q
// conditions coincide (top_right, quadro) the count splits into one perfect
// square per admissible shape; per_shape then records the square roots.
struct ShapeSquare {
    YoungShape shape;
    BigInt m;
    friend bool operator==(const ShapeSquare&, const ShapeSquare&) = default;
};

struct CountReport {
    int n = 0;
    int k = 2;
    int l = 2;
    CrucialType type = CrucialType::right;
    CountMethod method = CountMethod::brute;
    BigInt count = 0;
    std::vector<ShapeSquare> per_shape;
    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// Full scans of S_n refuse to run past this length unless the
// CRUCIAL_BRUTE_CAP environment variable raises it.
inline constexpr int kDefaultBruteCap = 10;
int brute_cap();

struct BruteCapExceeded : std::runtime_error {
    explicit BruteCapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedSpec : std::domain_error {
    explicit UnsupportedSpec(const std::string& what) : std::domain_error(what) {}
};

// Scans all of S_n in lexicographic order and classifies by definition.
// `jobs` <= 0 uses all available threads; the result does not depend on it.
CountReport count_brute(int n, PatternSpec spec, CrucialType type, int jobs = 0);
// Single-threaded reference scan, kept for tests and benchmarks.
CountReport count_brute_serial(int n, PatternSpec spec, CrucialType type);
std::vector<Permutation> list_brute(int n, PatternSpec spec, CrucialType type, int jobs = 0);

// Counts through the tableau characterization: one term per partition of n
// with exactly k-1 columns and l-1 rows; no pass over S_n.
CountReport count_syt(int n, PatternSpec spec, CrucialType type);

// Evaluates a closed form for the cell when one is known (minimal and
// next-minimal lengths, the l = 3 families, the maximal length). Throws
// UnsupportedSpec when no closed form covers the request.
CountReport count_formula(int n, PatternSpec spec, CrucialType type);
// Materializes the permutations of the type from qualifying tableau pairs,
// in lexicographic order.
std::vector<Permutation> list_syt(int n, PatternSpec spec, CrucialType type);

// Per-shape tallies used by the syt method: how many SYT of the shape carry
// each staircase. `total` comes from enumeration (tests cross-check it
// against the hook length formula).
struct StaircaseTally {
    unsigned long long total = 0;
    unsigned long long top_right = 0;
    unsigned long long bottom_left = 0;
    unsigned long long both = 0;
};
StaircaseTally tally_staircases(const YoungShape& shape);

// Number of avoiders of maximal length (k-1)(l-1): the squared SYT count of
// the (l-1) x (k-1) rectangle, evaluated from the explicit factorial quotient.
BigInt formula_stanley_extremal(PatternSpec spec);
// Number of shortest right-crucial permutations: C(k+l-4, k-2).
BigInt formula_min_crucial(PatternSpec spec);
// Number of (k,3)-right-crucial permutations of length n, for n >= k+1.
BigInt formula_crucial_k3(int n, int k);
// Number of (k,3)-top-right-crucial permutations of length n, for n >= k+1.
BigInt formula_top_right_k3(int n, int k);
// Number of shortest bicrucial permutations, k >= l >= 3 (throws otherwise;
// swap arguments for k < l).
BigInt formula_min_bicrucial(PatternSpec spec);
// Number of shortest (k,3)-tricrucial permutations.
BigInt formula_min_tricrucial_k3(int k);
// Number of shortest quadrocrucial permutations, k,l >= 3.
BigInt formula_min_quadrocrucial(PatternSpec spec);
// Number of next-shortest top-right-crucial permutations: (k+l-4)^2.
BigInt formula_next_min_top_right(PatternSpec spec);

// Shortest and longest lengths at which permutations of the type exist.
int min_length(PatternSpec spec, CrucialType type);
int max_length(PatternSpec spec);

namespace detail {

unsigned long long factorial_u64(int n);
// Word of the permutation with the given 0-based lexicographic rank in S_n.
std::vector<int> unrank_lex(int n, unsigned long long rank);
int resolve_threads(int jobs);

// Splits the rank space of S_n into `nblocks` contiguous blocks and walks
// each block in lexicographic order, calling fn(block, word). Blocks run in
// parallel when OpenMP is enabled; fn must confine writes to its block.
template <class Fn>
void scan_sn_blocks(int n, int nblocks, int threads, Fn&& fn) {
    const unsigned long long total = factorial_u64(n);
    const auto ub = [](int v) { return static_cast<unsigned long long>(v); };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int b = 0; b < nblocks; ++b) {
        const unsigned long long base = total / ub(nblocks);
        const unsigned long long rem = total % ub(nblocks);
        const unsigned long long lo = base * ub(b) + (ub(b) < rem ? ub(b) : rem);
        const unsigned long long len = base + (ub(b) < rem ? 1 : 0);
        if (len == 0) continue;
        std::vector<int> word = unrank_lex(n, lo);
        for (unsigned long long i = 0; i < len; ++i) {
            fn(b, word);
            std::next_permutation(word.begin(), word.end());
        }
    }
    (void)threads;
}

}  // namespace detail

}  // namespace crucial

#endif
