#ifndef CRUCIAL_CLASSIFY_HPP
#define CRUCIAL_CLASSIFY_HPP

#include <array>
#include <string>

#include "crucial/perm.hpp"
#include "crucial/tableau.hpp"

namespace crucial {

enum class CrucialType { right, left, top, bottom, bicrucial, top_right, tricrucial, quadrocrucial };

inline constexpr std::array<CrucialType, 8> kAllCrucialTypes = {
    CrucialType::right,      CrucialType::left,       CrucialType::top,
    CrucialType::bottom,     CrucialType::bicrucial,  CrucialType::top_right,
    CrucialType::tricrucial, CrucialType::quadrocrucial};

std::string to_string(CrucialType type);
CrucialType crucial_type_from_string(const std::string& name);  // throws std::invalid_argument

// Directional crucialities of one permutation for one (k,l); the combined
// types are intersections of the four primitives.
struct CrucialClass {
    int n = 0;
    int k = 2;
    int l = 2;
    bool right = false;
    bool left = false;
    bool top = false;
    bool bottom = false;

    bool bicrucial() const { return right && left; }
    bool top_right() const { return right && top; }
    bool tricrucial() const { return right && left && top; }
    bool quadrocrucial() const { return right && left && top && bottom; }
    bool has(CrucialType type) const;
    bool any() const { return right || left || top || bottom; }

    friend bool operator==(const CrucialClass&, const CrucialClass&) = default;
};

// Definition-level tests: the permutation avoids (k,l) and every extension in
// the direction stops avoiding.
bool is_right_crucial_direct(const Permutation& p, PatternSpec spec);
bool is_left_crucial_direct(const Permutation& p, PatternSpec spec);
bool is_top_crucial_direct(const Permutation& p, PatternSpec spec);
bool is_bottom_crucial_direct(const Permutation& p, PatternSpec spec);

CrucialClass classify_direct(const Permutation& p, PatternSpec spec);
CrucialClass classify_direct(std::span<const int> word, PatternSpec spec);

// Tableau conditions behind the classification: an increasing chain that
// starts at the last entry of row 1 and takes one entry from each lower row,
// or starts at the first entry of the last row and takes one entry from each
// later column. Greedy scan; if any chain exists the minimal choices extend.
bool staircase_top_right(const std::vector<std::vector<int>>& rows);
bool staircase_bottom_left(const std::vector<std::vector<int>>& rows);
inline bool staircase_top_right(const StandardTableau& t) { return staircase_top_right(t.rows()); }
inline bool staircase_bottom_left(const StandardTableau& t) { return staircase_bottom_left(t.rows()); }

// Classification through one RSK pass: the pair must have k-1 columns and
// l-1 rows, and each directional flag is a staircase condition on P or Q.
CrucialClass classify_rsk(const Permutation& p, PatternSpec spec);
CrucialClass classify_rsk(std::span<const int> word, PatternSpec spec);

// The unique shortest top-right-crucial permutation:
// 1 2 ... (k-2) (k+l-3) (k+l-4) ... (k-1). Requires k,l >= 3.
Permutation minimal_top_right(PatternSpec spec);

// A shortest quadrocrucial permutation of length k+2l-5: the l-1 smallest
// values descending, then k-3 middle values ascending, then the l-1 largest
// values descending. Requires k,l >= 3.
Permutation minimal_quadrocrucial(PatternSpec spec);

// A quadrocrucial permutation of length 2(k+l-4) in which no single element
// can be doubled (x -> x,x+1 or x+1,x) without losing quadrocruciality.
// Requires k,l >= 3.
Permutation counterexample_quadrocrucial(PatternSpec spec);

// Replaces the element of value x by the adjacent pair x,x+1 (or x+1,x when
// larger_first), shifting all larger values up by one.
Permutation double_element(const Permutation& p, int x, bool larger_first);

// No one-element insertion keeps the type. Throws if p is not of the type.
bool is_non_extendable(const Permutation& p, PatternSpec spec, CrucialType type);
// No one-element deletion (followed by reduction) keeps the type.
bool is_irreducible(const Permutation& p, PatternSpec spec, CrucialType type);

// Shape of every shortest right-crucial permutation: length k+l-3, final
// element k-1, values 1..k-2 ascending and k..k+l-3 descending in front.
bool has_minimal_right_crucial_form(const Permutation& p, PatternSpec spec);
// Shape of every shortest bicrucial permutation (k >= l): length k+2l-5,
// first element l-1, last element k+l-3, values 1..l-1 and k+l-3..k+2l-5
// descending, values l-1..k+l-3 ascending.
bool has_minimal_bicrucial_form(const Permutation& p, PatternSpec spec);

}  // namespace crucial

#endif
