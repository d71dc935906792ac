#include "assoc/table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace assoc {

namespace {

constexpr double kSumTol = 1e-12;

void validate_vars(const std::vector<Variable>& vars) {
    if (vars.empty()) throw std::invalid_argument("table needs at least one variable");
    for (const auto& v : vars) {
        if (v.name.empty()) throw std::invalid_argument("variable with empty name");
        if (v.labels.empty()) throw std::invalid_argument("variable '" + v.name + "' has no levels");
        if (v.scores.size() != v.labels.size())
            throw std::invalid_argument("variable '" + v.name + "': scores/labels size mismatch");
        for (std::size_t i = 1; i < v.scores.size(); ++i)
            if (!(v.scores[i] > v.scores[i - 1]))
                throw std::invalid_argument("variable '" + v.name +
                                            "': scores must be strictly increasing");
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i].name == vars[j].name)
                throw std::invalid_argument("duplicate variable name '" + vars[i].name + "'");
}

std::size_t product_extent(const std::vector<Variable>& vars) {
    std::size_t n = 1;
    for (const auto& v : vars) n *= v.n_levels();
    return n;
}

std::vector<std::size_t> extents_of(const std::vector<Variable>& vars) {
    std::vector<std::size_t> e;
    e.reserve(vars.size());
    for (const auto& v : vars) e.push_back(v.n_levels());
    return e;
}

}  // namespace

Variable make_variable(std::string name, std::vector<std::string> labels,
                       std::vector<double> scores) {
    Variable v;
    v.name = std::move(name);
    v.labels = std::move(labels);
    if (scores.empty()) {
        v.scores.resize(v.labels.size());
        std::iota(v.scores.begin(), v.scores.end(), 0.0);
    } else {
        v.scores = std::move(scores);
    }
    validate_vars({v});
    return v;
}

Variable indexed_variable(std::string name, std::size_t n_levels) {
    std::vector<std::string> labels;
    labels.reserve(n_levels);
    for (std::size_t i = 0; i < n_levels; ++i) labels.push_back(std::to_string(i));
    return make_variable(std::move(name), std::move(labels));
}

std::size_t TensorShape::size() const {
    std::size_t n = 1;
    for (std::size_t e : extents) n *= e;
    return n;
}

std::size_t TensorShape::offset(std::span<const std::size_t> idx) const {
    std::size_t off = 0;
    for (std::size_t d = 0; d < extents.size(); ++d) off = off * extents[d] + idx[d];
    return off;
}

void TensorShape::unravel(std::size_t flat, std::vector<std::size_t>& idx) const {
    idx.resize(extents.size());
    for (std::size_t d = extents.size(); d-- > 0;) {
        idx[d] = flat % extents[d];
        flat /= extents[d];
    }
}

TensorShape ProbTable::shape() const { return TensorShape{extents_of(vars)}; }
TensorShape CountTable::shape() const { return TensorShape{extents_of(vars)}; }
TensorShape CondFamily::target_shape() const { return TensorShape{extents_of(target)}; }
TensorShape CondFamily::given_shape() const { return TensorShape{extents_of(given)}; }

std::size_t ProbTable::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == name) return i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

const Variable& ProbTable::var(std::string_view name) const { return vars[var_index(name)]; }

double ProbTable::cell(std::span<const std::size_t> idx) const {
    return cells[shape().offset(idx)];
}

ProbTable make_prob_table(std::vector<Variable> vars, std::vector<double> cells) {
    validate_vars(vars);
    if (cells.size() != product_extent(vars))
        throw std::invalid_argument("cell count does not match level extents");
    double total = 0.0;
    for (double c : cells) {
        if (!(c >= 0.0)) throw std::invalid_argument("negative or non-finite probability cell");
        total += c;
    }
    if (total <= 0.0) throw std::invalid_argument("empty distribution");
    if (std::abs(total - 1.0) > kSumTol)
        for (double& c : cells) c /= total;
    ProbTable p;
    p.vars = std::move(vars);
    p.cells = std::move(cells);
    return p;
}

CountTable make_count_table(std::vector<Variable> vars, std::vector<std::uint64_t> counts) {
    validate_vars(vars);
    if (counts.size() != product_extent(vars))
        throw std::invalid_argument("count size does not match level extents");
    CountTable t;
    t.vars = std::move(vars);
    t.counts = std::move(counts);
    return t;
}

CondFamily make_cond_family(std::vector<Variable> target, std::vector<Variable> given,
                            std::vector<std::vector<double>> tables) {
    validate_vars(target);
    validate_vars(given);
    const std::size_t n_given = product_extent(given);
    const std::size_t n_target = product_extent(target);
    if (tables.size() != n_given)
        throw std::invalid_argument("conditional family: one table per conditioning level expected");
    CondFamily f;
    f.target = std::move(target);
    f.given = std::move(given);
    f.tables = std::move(tables);
    f.defined.assign(n_given, true);
    for (std::size_t g = 0; g < n_given; ++g) {
        auto& t = f.tables[g];
        if (t.size() != n_target)
            throw std::invalid_argument("conditional family: table size mismatch");
        double total = 0.0;
        for (double c : t) {
            if (!(c >= 0.0)) throw std::invalid_argument("negative conditional probability");
            total += c;
        }
        if (total <= 0.0) {
            f.defined[g] = false;
            std::fill(t.begin(), t.end(), 0.0);
        } else if (std::abs(total - 1.0) > kSumTol) {
            for (double& c : t) c /= total;
        }
    }
    return f;
}

ProbTable normalize(const CountTable& counts) {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts.counts) total += c;
    if (total == 0) throw std::invalid_argument("empty distribution");
    std::vector<double> cells(counts.counts.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = static_cast<double>(counts.counts[i]) / static_cast<double>(total);
    return make_prob_table(counts.vars, std::move(cells));
}

ProbTable normalize(const ProbTable& p) { return make_prob_table(p.vars, p.cells); }

ProbTable marginal(const ProbTable& p, const std::vector<std::string>& keep) {
    if (keep.empty()) throw std::invalid_argument("marginal: empty keep set");
    std::vector<std::size_t> axes;
    std::vector<Variable> vars;
    axes.reserve(keep.size());
    for (const auto& name : keep) {
        const std::size_t ax = p.var_index(name);
        if (std::find(axes.begin(), axes.end(), ax) != axes.end())
            throw std::invalid_argument("marginal: duplicate variable '" + name + "'");
        axes.push_back(ax);
        vars.push_back(p.vars[ax]);
    }

    const TensorShape in_shape = p.shape();
    TensorShape out_shape{extents_of(vars)};
    std::vector<double> out(out_shape.size(), 0.0);
    std::vector<std::size_t> idx, out_idx(axes.size());
    for (std::size_t flat = 0; flat < p.cells.size(); ++flat) {
        in_shape.unravel(flat, idx);
        for (std::size_t d = 0; d < axes.size(); ++d) out_idx[d] = idx[axes[d]];
        out[out_shape.offset(out_idx)] += p.cells[flat];
    }
    return make_prob_table(std::move(vars), std::move(out));
}

CondFamily condition(const ProbTable& p, const std::vector<std::string>& target,
                     const std::vector<std::string>& given) {
    if (target.empty()) throw std::invalid_argument("condition: empty target");
    for (const auto& t : target)
        if (std::find(given.begin(), given.end(), t) != given.end())
            throw std::invalid_argument("condition: target and given must be disjoint");

    std::vector<std::string> keep = given;
    keep.insert(keep.end(), target.begin(), target.end());
    const ProbTable joint = given.empty() ? marginal(p, target) : marginal(p, keep);

    std::vector<Variable> target_vars, given_vars;
    for (const auto& n : target) target_vars.push_back(joint.var(n));
    for (const auto& n : given) given_vars.push_back(joint.var(n));

    const std::size_t n_given = product_extent(given_vars);
    const std::size_t n_target = product_extent(target_vars);

    CondFamily f;
    f.target = target_vars;
    f.given = given_vars;
    f.tables.assign(n_given, std::vector<double>(n_target, 0.0));
    f.defined.assign(n_given, true);
    // joint is laid out [given..., target...] because `keep` put given first.
    for (std::size_t g = 0; g < n_given; ++g) {
        double mass = 0.0;
        for (std::size_t t = 0; t < n_target; ++t) mass += joint.cells[g * n_target + t];
        if (mass <= 0.0) {
            f.defined[g] = false;
            continue;
        }
        for (std::size_t t = 0; t < n_target; ++t)
            f.tables[g][t] = joint.cells[g * n_target + t] / mass;
    }
    return f;
}

namespace {

void require_same_support(const Variable& a, const Variable& b, const char* where) {
    if (a.name != b.name || a.labels != b.labels || a.scores != b.scores)
        throw std::invalid_argument(std::string(where) + ": incompatible supports for variable '" +
                                    a.name + "'");
}

}  // namespace

ProbTable compose_ci(const ProbTable& px, const CondFamily& py_x, const CondFamily& pz_y) {
    if (px.rank() != 1 || py_x.given.size() != 1 || py_x.target.size() != 1 ||
        pz_y.given.size() != 1 || pz_y.target.size() != 1)
        throw std::invalid_argument("compose_ci expects single-variable blocks");
    require_same_support(px.vars[0], py_x.given[0], "compose_ci");
    require_same_support(py_x.target[0], pz_y.given[0], "compose_ci");

    const std::size_t nx = px.vars[0].n_levels();
    const std::size_t ny = py_x.target[0].n_levels();
    const std::size_t nz = pz_y.target[0].n_levels();

    std::vector<double> cells(nx * ny * nz, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            for (std::size_t z = 0; z < nz; ++z)
                cells[(x * ny + y) * nz + z] = px.cells[x] * py_x.tables[x][y] * pz_y.tables[y][z];

    return make_prob_table({px.vars[0], py_x.target[0], pz_y.target[0]}, std::move(cells));
}

ProbTable joint_from_family(const CondFamily& family, const std::vector<double>& given_probs) {
    const std::size_t n_given = family.given_shape().size();
    const std::size_t n_target = family.target_shape().size();
    if (given_probs.size() != n_given)
        throw std::invalid_argument("joint_from_family: marginal size mismatch");
    std::vector<double> cells(n_given * n_target, 0.0);
    for (std::size_t g = 0; g < n_given; ++g) {
        if (!(given_probs[g] >= 0.0))
            throw std::invalid_argument("joint_from_family: negative marginal probability");
        if (given_probs[g] > 0.0 && !family.defined[g])
            throw std::invalid_argument("joint_from_family: positive mass on undefined slice");
        for (std::size_t t = 0; t < n_target; ++t)
            cells[g * n_target + t] = given_probs[g] * family.tables[g][t];
    }
    std::vector<Variable> vars = family.given;
    vars.insert(vars.end(), family.target.begin(), family.target.end());
    return make_prob_table(std::move(vars), std::move(cells));
}

bool check_ci(const ProbTable& p, std::string_view a, std::string_view b,
              const std::vector<std::string>& given, double tol) {
    if (a == b) throw std::invalid_argument("check_ci: variables must be distinct");
    for (const auto& g : given)
        if (g == a || g == b) throw std::invalid_argument("check_ci: variables must be distinct");

    std::vector<std::string> keep = given;
    keep.push_back(std::string(a));
    keep.push_back(std::string(b));
    const ProbTable q = marginal(p, keep);

    const std::size_t n_given = [&] {
        std::size_t n = 1;
        for (std::size_t d = 0; d + 2 < q.rank(); ++d) n *= q.vars[d].n_levels();
        return n;
    }();
    const std::size_t na = q.vars[q.rank() - 2].n_levels();
    const std::size_t nb = q.vars[q.rank() - 1].n_levels();

    std::vector<double> pa(na), pb(nb);
    for (std::size_t g = 0; g < n_given; ++g) {
        const double* slice = q.cells.data() + g * na * nb;
        double mass = 0.0;
        for (std::size_t i = 0; i < na * nb; ++i) mass += slice[i];
        if (mass <= 0.0) continue;  // zero-probability slice: no constraint
        std::fill(pa.begin(), pa.end(), 0.0);
        std::fill(pb.begin(), pb.end(), 0.0);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                pa[i] += slice[i * nb + j];
                pb[j] += slice[i * nb + j];
            }
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (std::abs(slice[i * nb + j] / mass - (pa[i] / mass) * (pb[j] / mass)) > tol)
                    return false;
    }
    return true;
}

std::vector<std::optional<double>> conditional_means(const ProbTable& p,
                                                     std::string_view target,
                                                     const std::vector<std::string>& given) {
    const CondFamily f = condition(p, {std::string(target)}, given);
    const auto& scores = f.target[0].scores;
    std::vector<std::optional<double>> means(f.tables.size());
    for (std::size_t g = 0; g < f.tables.size(); ++g) {
        if (!f.defined[g]) continue;
        double m = 0.0;
        for (std::size_t t = 0; t < scores.size(); ++t) m += scores[t] * f.tables[g][t];
        means[g] = m;
    }
    return means;
}

}  // namespace assoc
