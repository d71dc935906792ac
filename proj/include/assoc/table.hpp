#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

// One discrete variable: ordered level labels plus strictly increasing
// numeric scores (defaults to the level indices 0,1,2,...).
struct Variable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<double> scores;

    std::size_t n_levels() const { return labels.size(); }
};

Variable make_variable(std::string name, std::vector<std::string> labels,
                       std::vector<double> scores = {});
// Levels named "0","1",... with index scores.
Variable indexed_variable(std::string name, std::size_t n_levels);

// Row-major indexing over a dense tensor (last variable fastest).
struct TensorShape {
    std::vector<std::size_t> extents;

    std::size_t size() const;
    std::size_t offset(std::span<const std::size_t> idx) const;
    void unravel(std::size_t flat, std::vector<std::size_t>& idx) const;
};

// Dense joint probability table over named discrete variables.
// Invariants (enforced by make_prob_table and every operation): cells are
// non-negative, sum to one within 1e-12 after normalization, the tensor
// extent matches the per-variable level counts, and scores are strictly
// increasing within each variable.
struct ProbTable {
    std::vector<Variable> vars;
    std::vector<double> cells;  // row-major, last variable fastest

    std::size_t rank() const { return vars.size(); }
    TensorShape shape() const;
    std::size_t var_index(std::string_view name) const;  // throws on unknown name
    const Variable& var(std::string_view name) const;
    double cell(std::span<const std::size_t> idx) const;
};

// Same shape as ProbTable but with counts; total must be positive.
struct CountTable {
    std::vector<Variable> vars;
    std::vector<std::uint64_t> counts;

    TensorShape shape() const;
};

// Family of conditional distributions of a target block given a conditioning
// block, one table per conditioning-level combination. Conditioning levels
// with zero marginal mass are carried as undefined slices rather than errors.
struct CondFamily {
    std::vector<Variable> target;
    std::vector<Variable> given;
    // tables[g] is a flat distribution over the target cells for the g-th
    // conditioning combination (row-major over `given`).
    std::vector<std::vector<double>> tables;
    std::vector<bool> defined;

    TensorShape target_shape() const;
    TensorShape given_shape() const;
};

ProbTable make_prob_table(std::vector<Variable> vars, std::vector<double> cells);
CountTable make_count_table(std::vector<Variable> vars, std::vector<std::uint64_t> counts);
CondFamily make_cond_family(std::vector<Variable> target, std::vector<Variable> given,
                            std::vector<std::vector<double>> tables);

// cell = count / total. Errors on an all-zero table ("empty distribution").
ProbTable normalize(const CountTable& counts);
// Renormalize an existing table (idempotent on already-normalized input).
ProbTable normalize(const ProbTable& p);

// Sum out every variable not in `keep`; result variables follow the order of
// `keep`. Errors when `keep` is empty or names an unknown variable.
ProbTable marginal(const ProbTable& p, const std::vector<std::string>& keep);

// Conditional family target | given (both subsets of p's variables, disjoint).
// Variables of p outside target+given are summed out first.
CondFamily condition(const ProbTable& p, const std::vector<std::string>& target,
                     const std::vector<std::string>& given);

// cell(x,y,z) = px(x) * py_x(y|x) * pz_y(z|y). The result satisfies
// X _||_ Z | Y exactly. Errors when the shared-variable supports disagree.
ProbTable compose_ci(const ProbTable& px, const CondFamily& py_x, const CondFamily& pz_y);

// Mix a conditional family with a marginal over its conditioning block:
// cell(given, target) = p_given(given) * family(target|given).
ProbTable joint_from_family(const CondFamily& family, const std::vector<double>& given_probs);

// True iff within every level combination of `given` (empty = marginal
// independence) the joint of {a,b} factorizes into its margins within tol.
// Zero-probability conditioning slices impose no constraint.
bool check_ci(const ProbTable& p, std::string_view a, std::string_view b,
              const std::vector<std::string>& given, double tol);

// Conditional mean of `target` scores given each level of the remaining
// variables of `p` restricted to {target} + given. Undefined slices yield
// nullopt.
std::vector<std::optional<double>> conditional_means(const ProbTable& p,
                                                     std::string_view target,
                                                     const std::vector<std::string>& given);

}  // namespace assoc
