#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace assoc {

// Qualitative sign of a grid of association values. Positive/Negative mean
// "non-negative/non-positive everywhere with at least one strict entry";
// NonNegative/NonPositive drop the strictness claim (they also absorb grids
// whose strict label had to be demoted because some entries were undefined).
enum class AssocSign {
    Positive,
    NonNegative,
    Zero,
    NonPositive,
    Negative,
    Mixed,
};

const char* to_string(AssocSign s);
AssocSign assoc_sign_from_string(const std::string& s);

// True when the label claims ">= 0 everywhere" (Positive, NonNegative, Zero).
bool is_nonnegative(AssocSign s);
bool is_nonpositive(AssocSign s);
bool is_strict(AssocSign s);  // Positive or Negative

// Flip orientation: Positive <-> Negative, NonNegative <-> NonPositive.
AssocSign flip(AssocSign s);

// Sign of a transitive composition: keeps strictness only when both factors
// are strict, collapses to Zero when either factor is Zero.
AssocSign sign_product(AssocSign a, AssocSign b);

struct Classification {
    AssocSign sign = AssocSign::Mixed;
    // Index (into the flat grid) of one entry strictly beyond tol, when the
    // label is strict.
    std::optional<std::size_t> strict_witness;
    std::size_t defined_count = 0;
    std::size_t undefined_count = 0;
    std::string note;
};

// Classify a flat grid with possibly-undefined entries against a symmetric
// tolerance band [-tol, tol]. All defined entries in the band -> Zero; all
// >= -tol with a strict witness -> Positive, demoted to NonNegative when any
// entry is undefined (mirrored for the negative side); entries on both sides
// of the band -> Mixed. A grid with no entries at all is an error; a grid
// whose entries are all undefined classifies as Mixed with a diagnostic note.
Classification classify_sign(const std::vector<std::optional<double>>& grid, double tol);

inline constexpr double kDefaultTol = 1e-9;

}  // namespace assoc
