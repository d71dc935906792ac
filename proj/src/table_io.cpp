#include "assoc/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace assoc {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
        std::size_t b = 0;
        while (b < field.size() && field[b] == ' ') ++b;
        out.push_back(field.substr(b));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

std::vector<Variable> json_vars(const nlohmann::json& j) {
    std::vector<Variable> vars;
    for (const auto& name : j.at("vars")) {
        const std::string n = name.get<std::string>();
        std::vector<std::string> labels = j.at("levels").at(n).get<std::vector<std::string>>();
        std::vector<double> scores;
        if (j.contains("scores") && j["scores"].contains(n))
            scores = j["scores"][n].get<std::vector<double>>();
        vars.push_back(make_variable(n, std::move(labels), std::move(scores)));
    }
    return vars;
}

nlohmann::json vars_to_json(const std::vector<Variable>& vars) {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    j["levels"] = nlohmann::json::object();
    j["scores"] = nlohmann::json::object();
    for (const auto& v : vars) {
        j["vars"].push_back(v.name);
        j["levels"][v.name] = v.labels;
        j["scores"][v.name] = v.scores;
    }
    return j;
}

}  // namespace

ProbTable read_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2) throw std::invalid_argument("csv: need at least one variable column");
    const std::string value_kind = header.back();
    if (value_kind != "count" && value_kind != "prob")
        throw std::invalid_argument("csv: last column must be 'count' or 'prob'");
    header.pop_back();

    struct Row {
        std::vector<std::string> levels;
        double value;
    };
    std::vector<Row> rows;
    std::vector<std::vector<std::string>> seen(header.size());
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size() + 1)
            throw std::invalid_argument("csv: wrong field count in row '" + line + "'");
        Row r;
        r.levels.assign(fields.begin(), fields.end() - 1);
        if (!parse_number(fields.back(), r.value) || r.value < 0.0)
            throw std::invalid_argument("csv: bad value '" + fields.back() + "'");
        if (value_kind == "count" && std::floor(r.value) != r.value)
            throw std::invalid_argument("csv: counts must be integers, got '" + fields.back() + "'");
        for (std::size_t d = 0; d < header.size(); ++d)
            if (std::find(seen[d].begin(), seen[d].end(), r.levels[d]) == seen[d].end())
                seen[d].push_back(r.levels[d]);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::invalid_argument("csv: no data rows");

    std::vector<Variable> vars;
    for (std::size_t d = 0; d < header.size(); ++d) {
        std::vector<std::string> labels = seen[d];
        std::vector<double> numeric(labels.size());
        bool all_numeric = true;
        for (std::size_t i = 0; i < labels.size(); ++i)
            all_numeric = all_numeric && parse_number(labels[i], numeric[i]);
        if (all_numeric) {
            std::vector<std::size_t> order(labels.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
            std::vector<std::string> sorted;
            for (std::size_t i : order) sorted.push_back(labels[i]);
            labels = std::move(sorted);
        }
        vars.push_back(make_variable(header[d], std::move(labels)));
    }

    TensorShape shape{[&] {
        std::vector<std::size_t> e;
        for (const auto& v : vars) e.push_back(v.n_levels());
        return e;
    }()};
    std::vector<double> cells(shape.size(), 0.0);
    std::vector<std::size_t> idx(vars.size());
    for (const auto& r : rows) {
        for (std::size_t d = 0; d < vars.size(); ++d) {
            const auto& labels = vars[d].labels;
            const auto it = std::find(labels.begin(), labels.end(), r.levels[d]);
            idx[d] = static_cast<std::size_t>(it - labels.begin());
        }
        cells[shape.offset(idx)] += r.value;
    }
    return make_prob_table(std::move(vars), std::move(cells));
}

ProbTable read_table_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_table_csv(in);
}

void write_table_csv(const ProbTable& p, std::ostream& out) {
    for (const auto& v : p.vars) out << v.name << ',';
    out << "prob\n";
    const TensorShape shape = p.shape();
    std::vector<std::size_t> idx;
    out.precision(17);
    for (std::size_t flat = 0; flat < p.cells.size(); ++flat) {
        shape.unravel(flat, idx);
        for (std::size_t d = 0; d < p.rank(); ++d) out << p.vars[d].labels[idx[d]] << ',';
        out << p.cells[flat] << '\n';
    }
}

nlohmann::json table_to_json(const ProbTable& p) {
    nlohmann::json j = vars_to_json(p.vars);
    j["probs"] = p.cells;
    return j;
}

ProbTable table_from_json(const nlohmann::json& j) {
    return make_prob_table(json_vars(j), j.at("probs").get<std::vector<double>>());
}

ProbTable read_table_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return table_from_json(j);
}

nlohmann::json family_to_json(const CondFamily& f) {
    nlohmann::json j;
    j["target"] = vars_to_json(f.target);
    j["given"] = vars_to_json(f.given);
    j["tables"] = f.tables;
    return j;
}

CondFamily family_from_json(const nlohmann::json& j) {
    return make_cond_family(json_vars(j.at("target")), json_vars(j.at("given")),
                            j.at("tables").get<std::vector<std::vector<double>>>());
}

}  // namespace assoc
