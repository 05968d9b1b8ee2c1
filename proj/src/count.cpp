#include "crucial/count.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crucial {

std::string to_string(CountMethod method) {
    switch (method) {
        case CountMethod::brute: return "brute";
        case CountMethod::syt: return "syt";
        case CountMethod::formula: return "formula";
    }
    return "?";
}

CountMethod count_method_from_string(const std::string& name) {
    if (name == "brute") return CountMethod::brute;
    if (name == "syt") return CountMethod::syt;
    if (name == "formula") return CountMethod::formula;
    throw std::invalid_argument("unknown count method: " + name);
}

int brute_cap() {
    if (const char* env = std::getenv("CRUCIAL_BRUTE_CAP")) {
        const int cap = std::atoi(env);
        if (cap > 0) return std::min(cap, 20);  // 21! overflows the rank arithmetic
    }
    return kDefaultBruteCap;
}

namespace detail {

unsigned long long factorial_u64(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

std::vector<int> unrank_lex(int n, unsigned long long rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    unsigned long long f = factorial_u64(n);
    for (int i = n; i >= 1; --i) {
        f /= static_cast<unsigned long long>(i);
        const size_t idx = static_cast<size_t>(rank / f);
        rank %= f;
        word.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return word;
}

int resolve_threads(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

}  // namespace detail

namespace {

using detail::resolve_threads;
using detail::scan_sn_blocks;

void check_brute_cap(int n) {
    const int cap = brute_cap();
    if (n > cap)
        throw BruteCapExceeded("brute-force scan of S_" + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(cap));
}

CountReport make_report(int n, PatternSpec spec, CrucialType type, CountMethod method) {
    CountReport rep;
    rep.n = n;
    rep.k = spec.k;
    rep.l = spec.l;
    rep.type = type;
    rep.method = method;
    return rep;
}

}  // namespace

CountReport count_brute_serial(int n, PatternSpec spec, CrucialType type) {
    check_brute_cap(n);
    CountReport rep = make_report(n, spec, type, CountMethod::brute);
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    unsigned long long cnt = 0;
    do {
        if (classify_direct(word, spec).has(type)) ++cnt;
    } while (std::next_permutation(word.begin(), word.end()));
    rep.count = cnt;
    return rep;
}

CountReport count_brute(int n, PatternSpec spec, CrucialType type, int jobs) {
    check_brute_cap(n);
    CountReport rep = make_report(n, spec, type, CountMethod::brute);
    const int threads = resolve_threads(jobs);
    const int nblocks = std::max(1, std::min<int>(threads * 8, n > 0 ? n * 8 : 1));
    std::vector<unsigned long long> partial(static_cast<size_t>(nblocks), 0);
    scan_sn_blocks(n, nblocks, threads, [&](int b, const std::vector<int>& word) {
        if (classify_direct(word, spec).has(type)) ++partial[static_cast<size_t>(b)];
    });
    unsigned long long cnt = 0;
    for (unsigned long long c : partial) cnt += c;
    rep.count = cnt;
    return rep;
}

std::vector<Permutation> list_brute(int n, PatternSpec spec, CrucialType type, int jobs) {
    check_brute_cap(n);
    const int threads = resolve_threads(jobs);
    const int nblocks = std::max(1, std::min<int>(threads * 8, n > 0 ? n * 8 : 1));
    std::vector<std::vector<Permutation>> partial(static_cast<size_t>(nblocks));
    scan_sn_blocks(n, nblocks, threads, [&](int b, const std::vector<int>& word) {
        if (classify_direct(word, spec).has(type))
            partial[static_cast<size_t>(b)].push_back(Permutation::unchecked(word));
    });
    std::vector<Permutation> out;
    for (auto& block : partial)
        for (auto& p : block) out.push_back(std::move(p));
    return out;  // blocks cover ranks in order, so the list is lexicographic
}

StaircaseTally tally_staircases(const YoungShape& shape) {
    StaircaseTally t;
    for_each_syt(shape, [&](const std::vector<std::vector<int>>& rows) {
        ++t.total;
        const bool tr = staircase_top_right(rows);
        const bool bl = staircase_bottom_left(rows);
        if (tr) ++t.top_right;
        if (bl) ++t.bottom_left;
        if (tr && bl) ++t.both;
    });
    return t;
}

namespace {

// Which staircase each of P and Q must carry, per type.
enum class Cond { any, tr, bl, both };

struct CondPair {
    Cond p;
    Cond q;
};

CondPair conditions_for(CrucialType type) {
    switch (type) {
        case CrucialType::right: return {Cond::tr, Cond::any};
        case CrucialType::left: return {Cond::bl, Cond::any};
        case CrucialType::top: return {Cond::any, Cond::tr};
        case CrucialType::bottom: return {Cond::any, Cond::bl};
        case CrucialType::bicrucial: return {Cond::both, Cond::any};
        case CrucialType::top_right: return {Cond::tr, Cond::tr};
        case CrucialType::tricrucial: return {Cond::both, Cond::tr};
        case CrucialType::quadrocrucial: return {Cond::both, Cond::both};
    }
    return {Cond::any, Cond::any};
}

BigInt cond_count(Cond c, const StaircaseTally& t, const BigInt& hook_total) {
    switch (c) {
        case Cond::any: return hook_total;
        case Cond::tr: return BigInt(t.top_right);
        case Cond::bl: return BigInt(t.bottom_left);
        case Cond::both: return BigInt(t.both);
    }
    return 0;
}

bool cond_holds(Cond c, bool tr, bool bl) {
    switch (c) {
        case Cond::any: return true;
        case Cond::tr: return tr;
        case Cond::bl: return bl;
        case Cond::both: return tr && bl;
    }
    return false;
}

}  // namespace

CountReport count_syt(int n, PatternSpec spec, CrucialType type) {
    CountReport rep = make_report(n, spec, type, CountMethod::syt);
    const auto shapes = enumerate_shapes(n, spec.k - 1, spec.l - 1, true);
    const CondPair cond = conditions_for(type);
    const bool square_type = type == CrucialType::top_right || type == CrucialType::quadrocrucial;
    for (const auto& shape : shapes) {
        const StaircaseTally tally = tally_staircases(shape);
        const BigInt hook_total = hook_length_count(shape);
        const BigInt pcount = cond_count(cond.p, tally, hook_total);
        const BigInt qcount = cond_count(cond.q, tally, hook_total);
        rep.count += pcount * qcount;
        if (square_type) rep.per_shape.push_back({shape, pcount});
    }
    return rep;
}

std::vector<Permutation> list_syt(int n, PatternSpec spec, CrucialType type) {
    const auto shapes = enumerate_shapes(n, spec.k - 1, spec.l - 1, true);
    const CondPair cond = conditions_for(type);
    std::vector<Permutation> out;
    for (const auto& shape : shapes) {
        const auto tableaux = enumerate_syt(shape);
        std::vector<char> tr(tableaux.size()), bl(tableaux.size());
        for (size_t i = 0; i < tableaux.size(); ++i) {
            tr[i] = staircase_top_right(tableaux[i]);
            bl[i] = staircase_bottom_left(tableaux[i]);
        }
        for (size_t pi = 0; pi < tableaux.size(); ++pi) {
            if (!cond_holds(cond.p, tr[pi], bl[pi])) continue;
            for (size_t qi = 0; qi < tableaux.size(); ++qi) {
                if (!cond_holds(cond.q, tr[qi], bl[qi])) continue;
                out.push_back(rsk_inverse(TableauPair{tableaux[pi], tableaux[qi]}));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CountReport count_formula(int n, PatternSpec spec, CrucialType type) {
    CountReport rep = make_report(n, spec, type, CountMethod::formula);

    // The left and bottom counts equal the right and top counts of the
    // swapped prohibitions (reverse bijection), and the top count equals the
    // right count outright (P and Q play symmetric roles).
    PatternSpec s = spec;
    CrucialType t = type;
    switch (type) {
        case CrucialType::left:
        case CrucialType::bottom:
            s = spec.swapped();
            t = CrucialType::right;
            break;
        case CrucialType::top:
            t = CrucialType::right;
            break;
        default:
            break;
    }

    const int lo = min_length(s, t);
    const int hi = max_length(s);
    if (n < lo || n > hi) {
        rep.count = 0;
        return rep;
    }
    if (n == hi) {
        rep.count = formula_stanley_extremal(s);
        return rep;
    }

    const int big = std::max(s.k, s.l);
    const int small = std::min(s.k, s.l);
    switch (t) {
        case CrucialType::right:
            if (n == lo) {
                rep.count = formula_min_crucial(s);
                return rep;
            }
            if (small == 3) {
                rep.count = formula_crucial_k3(n, big);
                return rep;
            }
            break;
        case CrucialType::top_right:
            if (n == lo) {
                rep.count = 1;  // the shortest top-right-crucial permutation is unique
                return rep;
            }
            if (n == lo + 1) {
                rep.count = formula_next_min_top_right(s);
                return rep;
            }
            if (small == 3) {
                rep.count = formula_top_right_k3(n, big);
                return rep;
            }
            break;
        case CrucialType::bicrucial:
            if (n == lo) {
                rep.count = formula_min_bicrucial(s.k >= s.l ? s : s.swapped());
                return rep;
            }
            break;
        case CrucialType::tricrucial:
            if (n == lo && small == 3) {
                rep.count = formula_min_tricrucial_k3(big);
                return rep;
            }
            break;
        case CrucialType::quadrocrucial:
            if (n == lo) {
                rep.count = formula_min_quadrocrucial(s);
                return rep;
            }
            break;
        default:
            break;
    }
    throw UnsupportedSpec("no closed formula for " + to_string(type) + " counts of length " +
                          std::to_string(n) + " at (" + std::to_string(spec.k) + "," +
                          std::to_string(spec.l) + ")");
}

BigInt formula_stanley_extremal(PatternSpec spec) {
    const int big = std::max(spec.k, spec.l);
    const int small = std::min(spec.k, spec.l);
    const int n = (big - 1) * (small - 1);
    BigInt den = 1;
    for (int m = 1; m <= big + small - 3; ++m) {
        const int exponent = std::min({m, small - 1, big + small - 2 - m});
        for (int e = 0; e < exponent; ++e) den *= m;
    }
    const BigInt root = exact_div(factorial(n), den);
    return root * root;
}

BigInt formula_min_crucial(PatternSpec spec) {
    return binomial(spec.k + spec.l - 4, spec.k - 2);
}

namespace {

// SYT of a two-row shape (k-1, n-k) with the corner entry pinned to n:
// (2k-n)/(n-k) * C(n-1, k). Shared by the length-n counts at l = 3.
BigInt two_row_pinned_count(int n, int k) {
    return exact_div(BigInt(2 * k - n) * binomial(n - 1, k), BigInt(n - k));
}

}  // namespace

BigInt formula_crucial_k3(int n, int k) {
    if (k < 3 || n < k + 1) throw UnsupportedSpec("formula_crucial_k3: requires k >= 3 and n >= k+1");
    if (n > 2 * (k - 1)) return 0;
    const BigInt p = two_row_pinned_count(n, k);
    const BigInt q = exact_div(BigInt(2 * k - n - 1) * binomial(n, k), BigInt(n - k + 1));
    return p * q;
}

BigInt formula_top_right_k3(int n, int k) {
    if (k < 3 || n < k + 1) throw UnsupportedSpec("formula_top_right_k3: requires k >= 3 and n >= k+1");
    if (n > 2 * (k - 1)) return 0;
    const BigInt p = two_row_pinned_count(n, k);
    return p * p;
}

BigInt formula_min_bicrucial(PatternSpec spec) {
    const int k = spec.k, l = spec.l;
    if (k < l) throw UnsupportedSpec("formula_min_bicrucial: requires k >= l (swap arguments)");
    if (l < 3) throw UnsupportedSpec("formula_min_bicrucial: requires l >= 3");
    const BigInt num = BigInt(1 + (k == l ? 1 : 0)) * factorial(k + 2 * l - 5);
    const BigInt den =
        BigInt(k + l - 3) * (k + l - 4) * factorial(l - 1) * factorial(l - 2) * factorial(k - 3);
    return exact_div(num, den);
}

BigInt formula_min_tricrucial_k3(int k) {
    if (k < 3) throw UnsupportedSpec("formula_min_tricrucial_k3: requires k >= 3");
    return k == 3 ? 4 : k - 1;
}

BigInt formula_min_quadrocrucial(PatternSpec spec) {
    const int k = spec.k, l = spec.l;
    if (k < 3 || l < 3) throw UnsupportedSpec("formula_min_quadrocrucial: requires k,l >= 3");
    if (k == 3 && l == 3) return 4;
    if (k == 3 || l == 3) return 1;
    return k == l ? 2 : 1;
}

BigInt formula_next_min_top_right(PatternSpec spec) {
    if (spec.k < 3 || spec.l < 3)
        throw UnsupportedSpec("formula_next_min_top_right: requires k,l >= 3");
    const BigInt m = spec.k + spec.l - 4;
    return m * m;
}

int min_length(PatternSpec spec, CrucialType type) {
    const int big = std::max(spec.k, spec.l);
    const int small = std::min(spec.k, spec.l);
    switch (type) {
        case CrucialType::right:
        case CrucialType::left:
        case CrucialType::top:
        case CrucialType::bottom:
        case CrucialType::top_right:
            return spec.k + spec.l - 3;
        case CrucialType::bicrucial:
        case CrucialType::tricrucial:
        case CrucialType::quadrocrucial:
            return big + 2 * small - 5;
    }
    return 0;
}

int max_length(PatternSpec spec) { return (spec.k - 1) * (spec.l - 1); }

}  // namespace crucial
