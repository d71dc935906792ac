#include "assoc/sign.hpp"

#include <stdexcept>

namespace assoc {

const char* to_string(AssocSign s) {
    switch (s) {
        case AssocSign::Positive: return "Positive";
        case AssocSign::NonNegative: return "NonNegative";
        case AssocSign::Zero: return "Zero";
        case AssocSign::NonPositive: return "NonPositive";
        case AssocSign::Negative: return "Negative";
        case AssocSign::Mixed: return "Mixed";
    }
    return "Mixed";
}

AssocSign assoc_sign_from_string(const std::string& s) {
    if (s == "Positive") return AssocSign::Positive;
    if (s == "NonNegative") return AssocSign::NonNegative;
    if (s == "Zero") return AssocSign::Zero;
    if (s == "NonPositive") return AssocSign::NonPositive;
    if (s == "Negative") return AssocSign::Negative;
    if (s == "Mixed") return AssocSign::Mixed;
    throw std::invalid_argument("unknown association sign: " + s);
}

bool is_nonnegative(AssocSign s) {
    return s == AssocSign::Positive || s == AssocSign::NonNegative || s == AssocSign::Zero;
}

bool is_nonpositive(AssocSign s) {
    return s == AssocSign::Negative || s == AssocSign::NonPositive || s == AssocSign::Zero;
}

bool is_strict(AssocSign s) {
    return s == AssocSign::Positive || s == AssocSign::Negative;
}

AssocSign flip(AssocSign s) {
    switch (s) {
        case AssocSign::Positive: return AssocSign::Negative;
        case AssocSign::NonNegative: return AssocSign::NonPositive;
        case AssocSign::NonPositive: return AssocSign::NonNegative;
        case AssocSign::Negative: return AssocSign::Positive;
        default: return s;
    }
}

AssocSign sign_product(AssocSign a, AssocSign b) {
    if (a == AssocSign::Mixed || b == AssocSign::Mixed) return AssocSign::Mixed;
    if (a == AssocSign::Zero || b == AssocSign::Zero) return AssocSign::Zero;
    const bool negate = is_nonpositive(a) != is_nonpositive(b);
    const bool strict = is_strict(a) && is_strict(b);
    AssocSign out = strict ? AssocSign::Positive : AssocSign::NonNegative;
    return negate ? flip(out) : out;
}

Classification classify_sign(const std::vector<std::optional<double>>& grid, double tol) {
    if (grid.empty()) throw std::invalid_argument("classify_sign: empty grid");
    if (tol < 0.0) throw std::invalid_argument("classify_sign: negative tolerance");

    Classification out;
    std::optional<std::size_t> pos_witness;
    std::optional<std::size_t> neg_witness;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!grid[i].has_value()) {
            ++out.undefined_count;
            continue;
        }
        ++out.defined_count;
        const double v = *grid[i];
        if (v > tol && !pos_witness) pos_witness = i;
        if (v < -tol && !neg_witness) neg_witness = i;
    }

    if (out.defined_count == 0) {
        out.sign = AssocSign::Mixed;
        out.note = "all grid entries undefined";
        return out;
    }

    if (pos_witness && neg_witness) {
        out.sign = AssocSign::Mixed;
        return out;
    }
    if (!pos_witness && !neg_witness) {
        out.sign = AssocSign::Zero;
        if (out.undefined_count > 0) out.note = "zero on defined entries; some entries undefined";
        return out;
    }
    if (pos_witness) {
        out.strict_witness = pos_witness;
        if (out.undefined_count > 0) {
            out.sign = AssocSign::NonNegative;
            out.note = "strict label demoted: undefined entries present";
        } else {
            out.sign = AssocSign::Positive;
        }
        return out;
    }
    out.strict_witness = neg_witness;
    if (out.undefined_count > 0) {
        out.sign = AssocSign::NonPositive;
        out.note = "strict label demoted: undefined entries present";
    } else {
        out.sign = AssocSign::Negative;
    }
    return out;
}

}  // namespace assoc
