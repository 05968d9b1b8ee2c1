#include "crucial/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crucial {

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        out.push_back(Permutation::unchecked(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

unsigned long long count_avoiders_brute(int n, PatternSpec spec) {
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    unsigned long long cnt = 0;
    do {
        if (avoids(word, spec)) ++cnt;
    } while (std::next_permutation(word.begin(), word.end()));
    return cnt;
}

// Longest strictly increasing/decreasing subsequence ending at the last
// element.
int longest_run_to_end(std::span<const int> w, bool increasing) {
    const int n = static_cast<int>(w.size());
    std::vector<int> best(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const bool ok = increasing ? w[static_cast<size_t>(j)] < w[static_cast<size_t>(i)]
                                       : w[static_cast<size_t>(j)] > w[static_cast<size_t>(i)];
            if (ok) best[static_cast<size_t>(i)] = std::max(best[static_cast<size_t>(i)], best[static_cast<size_t>(j)] + 1);
        }
    return n == 0 ? 0 : best[static_cast<size_t>(n) - 1];
}

// Does `hay` contain a subsequence order-isomorphic to `pat`?
bool contains_pattern(const std::vector<int>& hay, const std::vector<int>& pat) {
    const int h = static_cast<int>(hay.size());
    const int m = static_cast<int>(pat.size());
    if (m > h) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(m));
    auto rec = [&](auto&& self, int start) -> bool {
        const int j = static_cast<int>(chosen.size());
        if (j == m) return true;
        for (int i = start; i <= h - (m - j); ++i) {
            bool fits = true;
            for (int t = 0; t < j && fits; ++t)
                fits = (hay[static_cast<size_t>(i)] < hay[static_cast<size_t>(chosen[static_cast<size_t>(t)])]) ==
                       (pat[static_cast<size_t>(j)] < pat[static_cast<size_t>(t)]);
            if (!fits) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

BigInt rect_syt(int a, int b) { return hook_length_count(YoungShape::rectangle(b - 1, a - 1)); }

std::string spec_str(PatternSpec spec) {
    return "(" + std::to_string(spec.k) + "," + std::to_string(spec.l) + ")";
}

}  // namespace

unsigned long long count_classify_mismatches(PatternSpec spec, int n, int jobs) {
    const int threads = detail::resolve_threads(jobs);
    const int nblocks = std::max(1, threads * 8);
    std::vector<unsigned long long> partial(static_cast<size_t>(nblocks), 0);
    detail::scan_sn_blocks(n, nblocks, threads, [&](int b, const std::vector<int>& word) {
        if (classify_direct(word, spec) != classify_rsk(word, spec)) ++partial[static_cast<size_t>(b)];
    });
    unsigned long long mismatches = 0;
    for (unsigned long long c : partial) mismatches += c;
    return mismatches;
}

bool rsk_roundtrip_ok(int n) {
    for (const auto& p : all_permutations(n))
        if (rsk_inverse(rsk(p)) != p) return false;
    return true;
}

bool pair_roundtrip_ok(int n) {
    for (const auto& shape : enumerate_shapes(n, n, n, false)) {
        const auto tableaux = enumerate_syt(shape);
        for (const auto& p : tableaux)
            for (const auto& q : tableaux) {
                const TableauPair pair{p, q};
                if (rsk(rsk_inverse(pair)) != pair) return false;
            }
    }
    return true;
}

bool evacuation_involution_ok(int n) {
    for (const auto& shape : enumerate_shapes(n, n, n, false))
        for (const auto& t : enumerate_syt(shape)) {
            const StandardTableau e = evacuation(t);
            if (e.shape() != shape) return false;
            if (evacuation(e) != t) return false;
        }
    return true;
}

bool rsk_symmetry_identities_ok(int n) {
    for (const auto& p : all_permutations(n)) {
        const TableauPair pq = rsk(p);
        const TableauPair rev = rsk(reverse(p));
        if (rev.P != transpose(pq.P) || rev.Q != transpose(evacuation(pq.Q))) return false;
        const TableauPair inv = rsk(inverse(p));
        if (inv.P != pq.Q || inv.Q != pq.P) return false;
        const TableauPair comp = rsk(complement(p));
        if (comp.P != transpose(evacuation(pq.P)) || comp.Q != transpose(pq.Q)) return false;
    }
    return true;
}

bool crucial_symmetry_ok(PatternSpec spec, int n) {
    const PatternSpec swapped = spec.swapped();
    for (const auto& p : all_permutations(n)) {
        const bool r = is_right_crucial_direct(p, spec);
        if (r != is_left_crucial_direct(reverse(p), swapped)) return false;
        if (r != is_top_crucial_direct(inverse(p), spec)) return false;
        if (r != is_bottom_crucial_direct(complement(inverse(p)), swapped)) return false;
    }
    return true;
}

bool endpoint_witness_ok(PatternSpec spec, int n) {
    for (const auto& p : all_permutations(n)) {
        if (!is_right_crucial_direct(p, spec)) continue;
        if (longest_run_to_end(p.span(), true) < spec.k - 1) return false;
        if (longest_run_to_end(p.span(), false) < spec.l - 1) return false;
    }
    return true;
}

bool deletability_ok(PatternSpec spec, int n) {
    if (n <= spec.k + spec.l - 3) return true;
    for (const auto& p : all_permutations(n)) {
        if (!is_right_crucial_direct(p, spec)) continue;
        bool shrinks = false;
        for (int pos = 1; pos <= n && !shrinks; ++pos)
            shrinks = is_right_crucial_direct(remove_element(p, pos), spec);
        if (!shrinks) return false;
    }
    return true;
}

bool nonextendable_first_element_ok(PatternSpec spec, int n) {
    if (spec.k < 3 || spec.l < 3) return true;
    for (const auto& p : all_permutations(n)) {
        if (!is_right_crucial_direct(p, spec)) continue;
        const int first = p.word().front();
        if (first != 1 && first != n) continue;
        if (is_non_extendable(p, spec, CrucialType::right)) return false;
    }
    return true;
}

GrowthReport verify_growth(PatternSpec spec, CrucialType type) {
    GrowthReport rep{spec.k, spec.l, type, {}, true};
    const int lo = min_length(spec, type);
    const int hi = max_length(spec);
    for (int n = lo; n < hi; ++n) {
        GrowthStep step;
        step.n = n;
        step.count_n = count_syt(n, spec, type).count;
        step.count_next = count_syt(n + 1, spec, type).count;
        step.strict = step.count_n < step.count_next;
        rep.ok = rep.ok && step.strict;
        rep.steps.push_back(std::move(step));
    }
    return rep;
}

InequalityReport verify_inequalities(PatternSpec spec) {
    InequalityReport rep{spec.k, spec.l, {}, true};
    const int k = spec.k, l = spec.l;
    auto crucial_count = [&](int n, PatternSpec s) { return count_syt(n, s, CrucialType::right).count; };

    if (l >= 3) {
        for (int n = k + l - 3; n <= (k - 1) * (l - 2); ++n) {
            InequalityCheck c;
            c.name = "lower_l";
            c.n = n;
            c.lhs = crucial_count(n, spec) + crucial_count(n, PatternSpec(k, l - 1));
            c.rhs = crucial_count(n + 1, spec);
            c.holds = c.lhs <= c.rhs;
            rep.ok = rep.ok && c.holds;
            rep.checks.push_back(std::move(c));
        }
        BigInt estimate = 0;
        for (int d = 1; d <= k - 2; ++d) estimate += rect_syt(d + 1, l) * rect_syt(k - d, l - 1);
        estimate *= rect_syt(k, l - 1);
        for (int n = (k - 1) * (l - 2) + 1; n < (k - 1) * (l - 1); ++n) {
            InequalityCheck c;
            c.name = "rectangle";
            c.n = n;
            c.lhs = crucial_count(n, spec) + estimate;
            c.rhs = crucial_count(n + 1, spec);
            c.holds = c.lhs <= c.rhs;
            rep.ok = rep.ok && c.holds;
            rep.checks.push_back(std::move(c));
        }
    }

    for (int n = min_length(spec, CrucialType::bicrucial); n < max_length(spec); ++n) {
        InequalityCheck c;
        c.name = "doubling";
        c.n = n;
        c.lhs = 2 * count_syt(n, spec, CrucialType::bicrucial).count;
        c.rhs = count_syt(n + 1, spec, CrucialType::bicrucial).count;
        c.holds = c.lhs <= c.rhs;
        rep.ok = rep.ok && c.holds;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

ConjectureReport check_deletion_conjecture(PatternSpec spec) {
    ConjectureReport rep{spec.k, spec.l, {}, 0, true};
    const int maximal = max_length(spec);
    const auto maximal_list = list_syt(maximal, spec, CrucialType::right);
    for (int n = min_length(spec, CrucialType::right); n < maximal; ++n) {
        rep.lengths_checked.push_back(n);
        for (const auto& p : list_syt(n, spec, CrucialType::right)) {
            ++rep.permutations_checked;
            bool embedded = false;
            for (const auto& m : maximal_list) {
                if (contains_pattern(m.word(), p.word())) {
                    embedded = true;
                    break;
                }
            }
            if (!embedded) {
                rep.holds = false;
                return rep;
            }
        }
    }
    return rep;
}

void SuiteResult::record(bool passed, std::string line) {
    ok = ok && passed;
    lines.push_back((passed ? "ok   " : "FAIL ") + std::move(line));
}

std::vector<PatternSpec> default_spec_grid() {
    std::vector<PatternSpec> specs;
    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= k; ++l) specs.emplace_back(k, l);
    return specs;
}

std::vector<PatternSpec> default_growth_specs() {
    return {PatternSpec(4, 3), PatternSpec(4, 4), PatternSpec(5, 3)};
}

SuiteResult run_roundtrip_suite(int nmax) {
    SuiteResult res;
    res.name = "roundtrip";
    for (int n = 0; n <= nmax; ++n)
        res.record(rsk_roundtrip_ok(n), "rsk round trip on all of S_" + std::to_string(n));
    for (int n = 0; n <= nmax; ++n)
        res.record(pair_roundtrip_ok(n),
                   "inverse round trip on all same-shape pairs of size " + std::to_string(n));
    for (int n = 0; n <= nmax; ++n)
        res.record(evacuation_involution_ok(n),
                   "evacuation is a shape-preserving involution at size " + std::to_string(n));
    for (int n = 0; n <= std::min(nmax, 6); ++n)
        res.record(rsk_symmetry_identities_ok(n),
                   "reverse/inverse/complement tableau identities on S_" + std::to_string(n));
    return res;
}

SuiteResult run_equivalence_suite(const std::vector<PatternSpec>& specs, int nmax, int jobs) {
    SuiteResult res;
    res.name = "equivalence";
    for (const auto& spec : specs)
        for (int n = 0; n <= nmax; ++n) {
            const unsigned long long bad = count_classify_mismatches(spec, n, jobs);
            res.record(bad == 0, "direct and tableau classification agree on S_" + std::to_string(n) +
                                     " at " + spec_str(spec) +
                                     (bad ? " (" + std::to_string(bad) + " mismatches)" : ""));
        }
    return res;
}

SuiteResult run_symmetry_suite(const std::vector<PatternSpec>& specs, int nmax) {
    SuiteResult res;
    res.name = "symmetry";
    for (const auto& spec : specs) {
        bool sym = true, wit = true, del = true, ext = true;
        for (int n = 0; n <= nmax; ++n) sym = sym && crucial_symmetry_ok(spec, n);
        res.record(sym, "reverse/inverse/complement move right-crucial to left/top/bottom at " + spec_str(spec));
        for (int n = 0; n <= nmax; ++n) wit = wit && endpoint_witness_ok(spec, n);
        res.record(wit, "right-crucial permutations end increasing and decreasing runs at " + spec_str(spec));
        for (int n = 0; n <= nmax; ++n) del = del && deletability_ok(spec, n);
        res.record(del, "non-minimal right-crucial permutations shrink by one deletion at " + spec_str(spec));
        for (int n = 0; n <= std::min(nmax, 7); ++n) ext = ext && nonextendable_first_element_ok(spec, n);
        res.record(ext, "non-extendable right-crucial permutations avoid extreme first elements at " + spec_str(spec));
    }
    return res;
}

SuiteResult run_growth_suite(const std::vector<PatternSpec>& specs) {
    SuiteResult res;
    res.name = "growth";
    const CrucialType types[] = {CrucialType::right, CrucialType::bicrucial, CrucialType::top_right,
                                 CrucialType::tricrucial, CrucialType::quadrocrucial};
    for (const auto& spec : specs)
        for (CrucialType type : types) {
            const GrowthReport rep = verify_growth(spec, type);
            std::ostringstream line;
            line << to_string(type) << " counts strictly grow at " << spec_str(spec) << ":";
            for (const auto& s : rep.steps) line << " " << s.count_n;
            if (!rep.steps.empty()) line << " " << rep.steps.back().count_next;
            res.record(rep.ok, line.str());
        }
    return res;
}

SuiteResult run_inequalities_suite(const std::vector<PatternSpec>& specs) {
    SuiteResult res;
    res.name = "inequalities";
    for (const auto& spec : specs) {
        const InequalityReport rep = verify_inequalities(spec);
        for (const auto& c : rep.checks) {
            std::ostringstream line;
            line << c.name << " bound at " << spec_str(spec) << " n=" << c.n << ": " << c.lhs
                 << " <= " << c.rhs;
            res.record(c.holds, line.str());
        }
    }
    return res;
}

SuiteResult run_formulas_suite(int jobs) {
    SuiteResult res;
    res.name = "formulas";

    // Frozen listing of the fifteen (4,3)-right-crucial permutations of
    // length 5, lexicographically sorted.
    {
        static const int golden[15][5] = {
            {1, 3, 2, 5, 4}, {1, 3, 5, 2, 4}, {1, 4, 2, 5, 3}, {1, 4, 5, 2, 3}, {2, 1, 3, 5, 4},
            {2, 1, 5, 3, 4}, {2, 3, 1, 5, 4}, {2, 3, 5, 1, 4}, {2, 5, 1, 3, 4}, {3, 1, 2, 5, 4},
            {3, 1, 5, 2, 4}, {3, 5, 1, 2, 4}, {4, 1, 2, 5, 3}, {4, 1, 5, 2, 3}, {4, 5, 1, 2, 3}};
        const auto listing = list_brute(5, PatternSpec(4, 3), CrucialType::right, jobs);
        bool match = listing.size() == 15;
        for (size_t i = 0; match && i < listing.size(); ++i)
            match = listing[i].word() == std::vector<int>(golden[i], golden[i] + 5);
        res.record(match, "the fifteen (4,3)-right-crucial permutations of length 5");
    }

    // Reference count values at (4,4), both methods.
    for (int n : {6, 7}) {
        const BigInt expect = n == 6 ? 64 : 378;
        const BigInt brute = count_brute(n, PatternSpec(4, 4), CrucialType::right, jobs).count;
        const BigInt syt = count_syt(n, PatternSpec(4, 4), CrucialType::right).count;
        res.record(brute == expect && syt == expect,
                   "right-crucial count " + expect.str() + " at (4,4), n=" + std::to_string(n));
    }

    // Length-n closed forms at l = 3 against brute counts.
    for (int k = 3; k <= 5; ++k)
        for (int n = k + 1; n <= 8; ++n) {
            const PatternSpec spec(k, 3);
            const BigInt fc = formula_crucial_k3(n, k);
            const BigInt ft = formula_top_right_k3(n, k);
            const bool okc = fc == count_brute(n, spec, CrucialType::right, jobs).count;
            const bool okt = ft == count_brute(n, spec, CrucialType::top_right, jobs).count;
            res.record(okc && okt, "closed forms match brute counts at (" + std::to_string(k) +
                                       ",3), n=" + std::to_string(n));
        }

    // Sum of squared tableau counts over all shapes of n is n!.
    for (int n = 0; n <= 8; ++n) {
        BigInt sum = 0;
        for (const auto& shape : enumerate_shapes(n, n, n, false)) {
            const BigInt f = hook_length_count(shape);
            sum += f * f;
        }
        res.record(sum == factorial(n), "squared hook counts over shapes of " + std::to_string(n) +
                                            " sum to " + std::to_string(n) + "!");
    }

    // Extremal avoider counts.
    res.record(formula_stanley_extremal(PatternSpec(3, 3)) == 4 &&
                   count_avoiders_brute(4, PatternSpec(3, 3)) == 4,
               "four maximal (3,3)-avoiders of length 4");
    {
        const BigInt rect = hook_length_count(YoungShape::rectangle(3, 3));
        res.record(formula_stanley_extremal(PatternSpec(4, 4)) == 1764 && rect * rect == 1764,
                   "1764 maximal (4,4)-avoiders of length 9");
    }

    // Minimal-count theorems against brute enumeration.
    for (const PatternSpec spec : {PatternSpec(3, 3), PatternSpec(4, 3), PatternSpec(5, 3), PatternSpec(4, 4)}) {
        const int k = spec.k, l = spec.l;
        bool ok = true;
        ok = ok && formula_min_crucial(spec) ==
                       count_brute(k + l - 3, spec, CrucialType::right, jobs).count;
        ok = ok && formula_min_bicrucial(spec) ==
                       count_brute(k + 2 * l - 5, spec, CrucialType::bicrucial, jobs).count;
        if (l == 3)
            ok = ok && formula_min_tricrucial_k3(k) ==
                           count_brute(k + 2 * l - 5, spec, CrucialType::tricrucial, jobs).count;
        ok = ok && formula_min_quadrocrucial(spec) ==
                       count_brute(k + 2 * l - 5, spec, CrucialType::quadrocrucial, jobs).count;
        ok = ok && formula_next_min_top_right(spec) ==
                       count_brute(k + l - 2, spec, CrucialType::top_right, jobs).count;
        res.record(ok, "minimal and next-minimal counts match brute enumeration at " + spec_str(spec));
    }

    // Structure of the enumerated minimal permutations.
    for (const PatternSpec spec : {PatternSpec(3, 3), PatternSpec(4, 3), PatternSpec(5, 3), PatternSpec(4, 4)}) {
        const int k = spec.k, l = spec.l;
        bool ok = true;
        for (const auto& p : list_brute(k + l - 3, spec, CrucialType::right, jobs)) {
            ok = ok && has_minimal_right_crucial_form(p, spec);
            ok = ok && (p.word().front() == 1 || p.word().front() == p.size());
        }
        for (const auto& p : list_brute(k + 2 * l - 5, spec, CrucialType::bicrucial, jobs))
            ok = ok && has_minimal_bicrucial_form(p, spec);
        const auto tr = list_brute(k + l - 3, spec, CrucialType::top_right, jobs);
        ok = ok && tr.size() == 1 && tr[0] == minimal_top_right(spec);
        res.record(ok, "minimal permutations have the predicted structure at " + spec_str(spec));
    }

    // Square decompositions for the self-paired types.
    for (const PatternSpec spec : {PatternSpec(4, 4), PatternSpec(5, 3)}) {
        for (CrucialType type : {CrucialType::top_right, CrucialType::quadrocrucial}) {
            bool ok = true;
            for (int n = min_length(spec, type); n <= max_length(spec); ++n) {
                const CountReport rep = count_syt(n, spec, type);
                const auto shapes = enumerate_shapes(n, spec.k - 1, spec.l - 1, true);
                ok = ok && rep.per_shape.size() == shapes.size();
                BigInt sum = 0;
                for (const auto& sq : rep.per_shape) sum += sq.m * sq.m;
                ok = ok && sum == rep.count;
                if (n <= brute_cap())
                    ok = ok && rep.count == count_brute(n, spec, type, jobs).count;
            }
            res.record(ok, to_string(type) + " counts decompose into one square per shape at " +
                               spec_str(spec));
        }
    }

    // Explicit witnesses.
    {
        bool ok = true;
        for (int k = 3; k <= 5; ++k)
            for (int l = 3; l <= 5; ++l)
                ok = ok && classify_direct(minimal_quadrocrucial(PatternSpec(k, l)), PatternSpec(k, l))
                               .quadrocrucial();
        res.record(ok, "constructed minimal quadrocrucial words classify as quadrocrucial");
    }
    {
        const PatternSpec spec(4, 4);
        const Permutation ce = counterexample_quadrocrucial(spec);
        bool ok = ce.size() == 8 && classify_direct(ce, spec).quadrocrucial();
        for (int x = 1; x <= ce.size() && ok; ++x)
            for (bool larger : {false, true})
                ok = ok && !classify_direct(double_element(ce, x, larger), spec).quadrocrucial();
        res.record(ok, "the length-8 (4,4) witness admits no quadrocrucial element doubling");
    }

    return res;
}

}  // namespace crucial
