#pragma once

#include <string>
#include <vector>

#include "assoc/table.hpp"

namespace assoc {

// A (P(y|x), P(z|y)) pair meant to be composed under X _||_ Z | Y.
struct ConditionalPair {
    CondFamily py_x;
    CondFamily pz_y;
};

// Birch (1963) 2x3x2 count table. X _||_ Z and X _||_ Z | Y hold exactly while
// (X,Y) and (Y,Z) are both dependent.
CountTable fix_birch_counts();
ProbTable fix_birch();

// Whickham survey 20-year survival by smoking status and age band (Appleton,
// French & Vanderpump 1996), condensed to four age bands. Every age band has
// odds ratio > 1 while the pooled table has odds ratio < 1.
CountTable fix_smoke_counts();
ProbTable fix_smoke();
// The survey's published all-ages 2x2 column. It is NOT the sum of the four
// condensed age bands: the 65+ nonsmoker-dead cell was misprinted in the
// condensed table (105 where the published margin implies 165), so the pooled
// odds ratio is 0.9266 from the cells but 0.6848 from this published margin.
CountTable fix_smoke_published_margin_counts();
ProbTable fix_smoke_published_margin();

// 2x2x2 distribution whose (X,Y) and (Y,Z) expectation associations are +0.2
// and +0.08 while the (X,Z) one is -0.08.
ProbTable fix_trans();

// Generative family X ~ Bernoulli(1/2), eps ~ Bernoulli(p),
// Y = X + 2*eps*(1-X), Z = 1{Y = 2}, for p in (0, 1/2). The marginal effect
// of X on Z is exactly -p.
ProbTable fix_ex1(double p);

// Conditional pair with structural zeros; composed with uniform X the X->Z
// expectation gap is -0.32 although (X,Y) expectation and (Y,Z) density
// associations are both positively oriented.
ConditionalPair fix_ex2();
ProbTable fix_ex2_joint();  // composed with uniform X

// Conditional pair where cov(Y,Z) > 0 and the (X,Y) density association is
// non-negative, yet the X->Z expectation gap is -0.005 (uniform X).
ConditionalPair fix_ex3();
ProbTable fix_ex3_joint();

struct FixtureInfo {
    std::string name;
    std::string provenance;
};

// The six named fixtures, in canonical order.
std::vector<FixtureInfo> fixture_list();

// Resolve "BIRCH", "SMOKE", "TRANS", "EX1", "EX2", "EX3" (case-insensitive,
// optional "FIX_" prefix) to a joint table; EX1 takes its parameter, EX2/EX3
// compose with uniform X.
ProbTable fixture_by_name(const std::string& name, double ex1_p = 0.3);

}  // namespace assoc
