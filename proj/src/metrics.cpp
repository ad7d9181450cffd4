#include "fg/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fg {

namespace {

double ratio_or_zero(double num, double den) { return den > 0.0 ? num / den : 0.0; }

} // namespace

EvalReport evaluate(const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("empty evaluation input");

    std::map<std::string, int> index;
    for (const auto& [t, p] : pairs) {
        index.emplace(t, 0);
        index.emplace(p, 0);
    }
    EvalReport report;
    report.labels.reserve(index.size());
    for (auto& [label, idx] : index) {
        idx = static_cast<int>(report.labels.size());
        report.labels.push_back(label);
    }

    const int k = static_cast<int>(report.labels.size());
    report.confusion = Eigen::MatrixXi::Zero(k, k);
    for (const auto& [t, p] : pairs) report.confusion(index.at(t), index.at(p)) += 1;

    report.precision.resize(k);
    report.recall.resize(k);
    report.f1.resize(k);
    for (int c = 0; c < k; ++c) {
        const double tp = report.confusion(c, c);
        const double col = report.confusion.col(c).sum();
        const double row = report.confusion.row(c).sum();
        report.precision[c] = ratio_or_zero(tp, col);
        report.recall[c] = ratio_or_zero(tp, row);
        const double p = report.precision[c];
        const double r = report.recall[c];
        report.f1[c] = p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
    }
    report.accuracy =
        static_cast<double>(report.confusion.trace()) / static_cast<double>(pairs.size());
    return report;
}

nlohmann::json eval_report_to_json(const EvalReport& report) {
    nlohmann::json j;
    j["labels"] = report.labels;
    auto& m = j["confusion"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < report.confusion.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < report.confusion.cols(); ++c)
            row.push_back(report.confusion(r, c));
        m.push_back(std::move(row));
    }
    auto& per_class = j["per_class"] = nlohmann::json::object();
    for (std::size_t c = 0; c < report.labels.size(); ++c) {
        per_class[report.labels[c]] = {{"precision", report.precision[c]},
                                       {"recall", report.recall[c]},
                                       {"f1", report.f1[c]}};
    }
    j["accuracy"] = report.accuracy;
    return j;
}

std::string eval_report_table(const EvalReport& report) {
    std::size_t width = std::string("class").size();
    for (const std::string& label : report.labels) width = std::max(width, label.size());

    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s  %9s  %9s  %9s\n", static_cast<int>(width), "class",
                  "precision", "recall", "f1");
    out += buf;
    for (std::size_t c = 0; c < report.labels.size(); ++c) {
        std::snprintf(buf, sizeof buf, "%-*s  %9.2f  %9.2f  %9.2f\n", static_cast<int>(width),
                      report.labels[c].c_str(), report.precision[c], report.recall[c],
                      report.f1[c]);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "accuracy  %.2f\n", report.accuracy);
    out += buf;
    return out;
}

} // namespace fg
